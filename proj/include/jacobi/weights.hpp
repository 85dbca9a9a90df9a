#pragma once

#include "jacobi/contraction.hpp"
#include "jacobi/diagram_vector.hpp"
#include "jacobi/lie.hpp"

#include <optional>

namespace jacobi {

/// Weight system of a metric Lie algebra g and, for diagrams on the circle,
/// a representation V.
///
/// Conventions: an internal vertex (a, b, c) carries f_{abc} = b([e_a,e_b],e_c)
/// read in its stored cyclic order; each edge carries b^{ij}; the circle
/// carries the trace of the product of rho matrices taken in skeleton order,
/// so the bare circle is dim V; every free loop contributes dim g. The inverse
/// metric is absorbed by raising the index at the larger half-edge id of each
/// edge.
class WeightSystem {
public:
    /// Validates g (and V); throws Error(LieValidation) naming the first
    /// violated identity.
    WeightSystem(MetricLieAlgebra g, std::optional<Representation> v = std::nullopt, PlanOptions options = {});

    /// Diagrams in A (needs V) or closed diagrams in B. Legs are rejected.
    Rational evaluate(const Diagram& d) const;
    Rational evaluate(const DiagramVector& x) const;

    TensorNetwork network(const Diagram& d) const;
    ContractionPlan plan(const Diagram& d) const;

    const MetricLieAlgebra& algebra() const { return g_; }
    const StructureTensors& tensors() const { return t_; }
    const std::optional<Representation>& representation() const { return v_; }
    const PlanOptions& options() const { return options_; }

private:
    MetricLieAlgebra g_;
    StructureTensors t_;
    std::optional<Representation> v_;
    PlanOptions options_;
    bool abelian_ = false;
    std::vector<std::vector<Rational>> f_raised_;   ///< by mask of raised positions
    std::vector<std::vector<Rational>> rho_raised_; ///< [0] lower, [1] raised; (i, r, s)
};

/// Weight system of (g, V) on an A diagram or vector.
Rational evaluate(const DiagramVector& x, const MetricLieAlgebra& g, const Representation& v);
Rational evaluate(const Diagram& d, const MetricLieAlgebra& g, const Representation& v);

/// Closed B diagram (no legs). Throws Error(InvalidArgument) on legged input.
Rational evaluate_closed(const Diagram& d, const MetricLieAlgebra& g);
Rational evaluate_closed(const DiagramVector& x, const MetricLieAlgebra& g);

/// Plan for d with dim g = dim_g and dim V = dim_v.
ContractionPlan contraction_plan(const Diagram& d, int dim_g, int dim_v, const PlanOptions& options = {});

} // namespace jacobi
