#pragma once

#include "jacobi/diagram.hpp"

#include <optional>

namespace jacobi {

/// Canonical representative of an isomorphism class of vertex-oriented
/// diagrams, together with the sign relating the input to it.
///
/// `diagram` does not depend on the input's labeling nor on its vertex
/// orientations: every internal vertex of a canonical diagram is stored as
/// an ascending triple (k, k+1, k+2) and that order is its orientation.
/// `sign` is (-1)^(number of vertex reversals needed to match), or 0 when the
/// diagram has an automorphism reversing an odd number of vertices, in which
/// case antisymmetry forces it to vanish.
struct CanonicalForm {
    Diagram diagram;
    int sign = 1;
};

/// Canonical labeling by exhaustive traversal search with branch-and-bound.
///
/// Each connected component (in A, the circle together with everything
/// attached to it counts as one component) is labeled by a breadth-first
/// traversal that is fixed once a start point and, at each newly reached
/// internal vertex, the order of its two unexplored half-edges are chosen.
/// The traversal emits a certificate; the lexicographically smallest one wins.
/// Start points are: rotations of the circle for the skeleton component, legs
/// for a component that has any, otherwise every internal half-edge. Closed
/// components are then sorted by certificate.
CanonicalForm canonicalize(const Diagram& d);

/// Relative sign of d1 with respect to d2 if they are isomorphic (0 if both
/// vanish by antisymmetry), nothing otherwise. Throws on space or grading
/// mismatch.
std::optional<int> is_isomorphic(const Diagram& d1, const Diagram& d2);

} // namespace jacobi
