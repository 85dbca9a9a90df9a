#pragma once

#include "jacobi/rational.hpp"

#include <cstdint>
#include <vector>

namespace jacobi {

/// Dense tensor over a list of index variables. A variable may occur more
/// than once in `vars` (a diagonal, e.g. a trace).
struct Factor {
    std::vector<int> vars;
    std::vector<Rational> values; ///< row-major in the order of `vars`
};

/// Scalar = prefactor * sum over all index values of the product of factors.
struct TensorNetwork {
    std::vector<int> dims; ///< range of each variable
    std::vector<Factor> factors;
    Rational prefactor = 1;
};

struct PlanOptions {
    /// Orders are searched exhaustively (dynamic programming over subsets)
    /// up to this many variables, greedily above.
    int exhaustive_width = 14;
    /// Contractions whose planned cost exceeds this are refused.
    std::uint64_t max_cost = 200'000'000;
};

/// Elimination order for the variables. The cost of one step is the number
/// of index combinations it loops over (the product of the ranges of the
/// eliminated variable and everything it touches); `cost` is their sum.
/// `naive_cost` is the size of the full joint index space. Costs saturate at
/// the largest uint64.
struct ContractionPlan {
    std::vector<int> order;
    std::uint64_t cost = 0;
    std::uint64_t naive_cost = 1;
    bool exhaustive = false;
};

/// Plans from the variable ranges and factor scopes only.
ContractionPlan plan_contraction(const std::vector<int>& dims, const std::vector<std::vector<int>>& scopes,
                                 const PlanOptions& options = {});
ContractionPlan plan_contraction(const TensorNetwork& network, const PlanOptions& options = {});

/// Executes the plan by bucket elimination. Throws Error(ResourceLimit) if
/// the plan costs more than `max_cost`.
Rational contract(const TensorNetwork& network, const ContractionPlan& plan, std::uint64_t max_cost);
Rational contract(const TensorNetwork& network, const PlanOptions& options = {});

} // namespace jacobi
