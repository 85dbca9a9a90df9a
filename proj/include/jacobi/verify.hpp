#pragma once

#include "jacobi/basis.hpp"
#include "jacobi/json_io.hpp"
#include "jacobi/weights.hpp"

#include <string>
#include <vector>

namespace jacobi {

struct CheckResult {
    std::string name;
    bool passed = false;
    double seconds = 0;
    Json detail = Json::object();
    std::string error; ///< set when the check was cut off; counts as failed
    bool informational = false; ///< reported, but does not decide the suite
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;
    bool passed() const;
    Json to_json() const;
};

/// Every AS, IHX and STU generator of A with total <= max_total evaluates to
/// 0, and every B relation (IHX) pushed through chi does too.
SuiteReport verify_relations(int max_total, const WeightSystem& ws);

/// chi from B to A is square and invertible on every total n <= max_total.
SuiteReport verify_chi_iso(int max_total, BasisStore& store);

/// cl(Omega) truncated at vmax against exp(eps Theta/24), one eps for all
/// degrees. The exp(eps Theta/48) identity is reported alongside.
SuiteReport verify_closure_omega(int vmax, BasisStore& store);

/// verify_wheeling on (empty, empty), (strut, strut), (w_2, strut).
SuiteReport verify_wheeling_suite(BasisStore& store);

/// Rank of the chi matrix on total n and the dimensions on both sides.
struct ChiRank {
    int total = 0;
    int dim_b = 0;
    int dim_a = 0;
    int rank = 0;
};
ChiRank chi_rank(int total, BasisStore& store);

/// Smallest scalar s found among `candidates` with cl(Omega) = exp(s Theta)
/// modulo relations, if any.
std::optional<Rational> closure_omega_exponent(int vmax, const std::vector<Rational>& candidates,
                                               BasisStore& store);

} // namespace jacobi
