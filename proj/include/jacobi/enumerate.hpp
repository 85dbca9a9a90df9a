#pragma once

#include "jacobi/diagram.hpp"

#include <cstddef>
#include <vector>

namespace jacobi {

struct EnumerationLimits {
    /// Upper bound on labeled structures visited before giving up.
    std::size_t max_labeled = 20'000'000;
    int max_half_edges = 60;
};

/// All canonical diagrams of the given grading that do not vanish by
/// antisymmetry, in DiagramLess order. For A the `l` field must be 0, for B
/// the `e` field. Free loops are never produced.
std::vector<Diagram> enumerate_diagrams(Space space, Grading g, const EnumerationLimits& limits = {});

/// Every grading belonging to a piece: all (v, e) with v + e = total for A,
/// the single (v, l) for B. Gradings with an odd half-edge count are skipped.
std::vector<Grading> gradings_of(const Piece& piece);

/// Concatenation of enumerate_diagrams over gradings_of(piece).
std::vector<Diagram> enumerate_piece(const Piece& piece, const EnumerationLimits& limits = {});

} // namespace jacobi
