#pragma once

#include "jacobi/diagram_vector.hpp"
#include "jacobi/enumerate.hpp"

#include <vector>

namespace jacobi {

/// Generators of the relation subspace of one piece. Each generator is a
/// homogeneous vector, normalized so its leading coefficient is 1, and the
/// list is duplicate-free and in a deterministic order.
struct RelationSet {
    Piece piece;
    std::vector<DiagramVector> generators;
};

/// IHX at one internal edge of `d`, with the edge given by one of its two
/// half-edges. With d's endpoint vertices rotated to u = (h, a, b) and
/// v = (h', c, d), the relation is the Jacobi sum
///     (h,a,b)(h',c,d) + (h,b,c)(h',a,d) + (h,c,a)(h',b,d)
/// obtained by reattaching the four outer half-edges.
DiagramVector ihx_at(const Diagram& d, int half_edge);

/// STU at the internal half-edge h of `d`, which must be paired with an
/// external vertex s. With its vertex rotated to (h, a, b) the relation is
/// S - T + U where T replaces s on the circle by a then b and U by b then a.
/// Under a weight system this is rho([x, y]) = rho(x)rho(y) - rho(y)rho(x).
DiagramVector stu_at(const Diagram& d, int half_edge);

/// STU read backwards: merges the circle-adjacent external vertices at
/// positions i and i+1 into a new internal vertex. Same relation as stu_at on
/// the merged diagram.
DiagramVector stu_merging(const Diagram& d, int position);

/// One IHX relation per (enumerated diagram, internal edge) of grading g.
RelationSet generate_ihx(Space space, Grading g, const EnumerationLimits& limits = {});

/// STU relations seeded by every enumerated A diagram of grading g, through
/// each internal vertex next to the circle and each adjacent pair of external
/// vertices. The generators span gradings g and its STU neighbours.
RelationSet generate_stu(Grading g, const EnumerationLimits& limits = {});

/// All IHX and STU generators for a piece (STU only for A).
RelationSet generate_relations(const Piece& piece, const EnumerationLimits& limits = {});

} // namespace jacobi
