#pragma once

#include "jacobi/basis.hpp"
#include "jacobi/diagram_vector.hpp"

#include <vector>

namespace jacobi {

/// Product of B: bilinear disjoint union. Unit: the empty diagram.
DiagramVector disjoint_union(const DiagramVector& a, const DiagramVector& b);

/// Product of A: the circles are cut just before their first external
/// vertices (in canonical labeling) and spliced. Independent of the cut
/// points only modulo relations.
DiagramVector connect_sum(const DiagramVector& a, const DiagramVector& b);

/// Connected sum of two diagrams cutting a's circle before its external
/// vertex `cut_a` and b's before `cut_b`.
DiagramVector connect_sum_at(const Diagram& a, int cut_a, const Diagram& b, int cut_b);

/// B -> A. An l-legged diagram maps to the average of the l! ways of
/// attaching its legs to an oriented circle. Free loops ride along.
DiagramVector chi(const DiagramVector& x);

/// Sum over all perfect matchings of the legs, each matched pair joined into
/// an edge. Odd-legged diagrams map to zero.
DiagramVector closure(const DiagramVector& x);

/// C cap D: sum over all injections of C's legs into D's legs, glued.
/// Zero when C has more legs than D; the empty diagram acts as identity.
DiagramVector cap(const DiagramVector& c, const DiagramVector& x);

/// Cycle of k internal vertices, each with one outward leg; k even, k >= 2.
/// Vertex j is oriented (incoming rim, outgoing rim, spoke).
Diagram wheel(int k);

struct WheelsElement {
    int vmax = 0;
    DiagramVector value{Space::B};
    std::vector<Rational> coefficients; ///< b_2, b_4, ... up to vmax
};

/// exp(sum b_{2i} w_{2i}) keeping internal-vertex count <= vmax.
WheelsElement omega(int vmax);

/// sum_k x^k / k! under disjoint union, dropping terms with more than vmax
/// internal vertices. Every term of x must have an internal vertex.
DiagramVector exp_truncated(const DiagramVector& x, int vmax);

/// Disjoint union that drops terms with more than vmax internal vertices.
DiagramVector disjoint_union_truncated(const DiagramVector& a, const DiagramVector& b, int vmax);

struct WheelingReport {
    bool holds = false;
    int vmax = 0;
    DiagramVector lhs{Space::A}; ///< chi(Omega cap (a b))
    DiagramVector rhs{Space::A}; ///< chi(Omega cap a) # chi(Omega cap b)
};

/// Multiplicativity of chi o (Omega cap) on one pair, decided modulo
/// relations. Omega is truncated at the largest leg count of a b, which makes
/// every cap product exact.
WheelingReport check_wheeling(const DiagramVector& a, const DiagramVector& b, BasisStore& store);
bool verify_wheeling(const DiagramVector& a, const DiagramVector& b, BasisStore& store);

} // namespace jacobi
