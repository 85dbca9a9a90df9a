// One line per acceptance criterion; exit status 1 if any fails.

#include "jacobi/basis.hpp"
#include "jacobi/canonical.hpp"
#include "jacobi/enumerate.hpp"
#include "jacobi/maps.hpp"
#include "jacobi/series.hpp"
#include "jacobi/verify.hpp"
#include "jacobi/weights.hpp"

#include "oracle/bernoulli.hpp"
#include "oracle/brute_enumeration.hpp"
#include "oracle/naive_contraction.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

using namespace jacobi;

namespace {

int failures = 0;

void criterion(const std::string& name, const std::function<bool(std::ostringstream&)>& body)
{
    std::ostringstream detail;
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail << "exception: " << e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!ok)
        ++failures;
    std::cout << (ok ? "PASS " : "FAIL ") << name << " (" << detail.str() << "; " << seconds << " s)"
              << std::endl;
}

void info(const std::string& name, const std::function<bool(std::ostringstream&)>& body)
{
    std::ostringstream detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail << "exception: " << e.what();
    }
    std::cout << "INFO " << name << ": " << (ok ? "holds" : "does not hold") << " (" << detail.str() << ")"
              << std::endl;
}

bool suite_passed(const SuiteReport& r, std::ostringstream& detail)
{
    int passed = 0;
    for (const auto& c : r.checks) {
        if (c.passed)
            ++passed;
        else
            detail << "failed: " << c.name << (c.error.empty() ? "" : " [" + c.error + "]") << "; ";
    }
    detail << passed << "/" << r.checks.size() << " checks";
    return r.passed();
}

} // namespace

int main()
{
    BasisStore store;
    const WeightSystem ws(sl2(), sl2_fundamental());
    const auto matrices = oracle::sl2_matrices();

    criterion("relation vanishing: sl2 fundamental kills every AS/IHX/STU generator, total <= 8",
              [&](std::ostringstream& d) {
                  const SuiteReport r = verify_relations(8, ws);
                  long long relations = 0;
                  for (const auto& c : r.checks)
                      relations += c.detail.value("relations", 0);
                  d << relations << " relations, ";
                  return suite_passed(r, d);
              });

    criterion("chi rank: B -> A square and invertible for every total n <= 6", [&](std::ostringstream& d) {
        bool ok = true;
        for (int n = 0; n <= 6; ++n) {
            const ChiRank r = chi_rank(n, store);
            d << "n=" << n << ":" << r.dim_b << "x" << r.dim_a << " rank " << r.rank << " ";
            ok = ok && r.dim_a == r.dim_b && r.rank == r.dim_a;
        }
        return ok;
    });

    criterion("cl(Omega) = exp(eps Theta/24) modulo relations, vmax = 4, one eps", [&](std::ostringstream& d) {
        const auto eps = closure_omega_exponent(4, {Rational(1, 24), Rational(-1, 24)}, store);
        if (eps)
            d << "eps = " << (*eps > 0 ? "+1" : "-1");
        else
            d << "neither eps = +1 nor eps = -1 matches";
        return eps.has_value();
    });
    info("cl(Omega) = exp(eps Theta/48) modulo relations, vmax = 4", [&](std::ostringstream& d) {
        const auto eps = closure_omega_exponent(4, {Rational(1, 48), Rational(-1, 48)}, store);
        if (eps)
            d << "eps = " << (*eps > 0 ? "+1" : "-1");
        return eps.has_value();
    });

    criterion("wheeling: chi(Omega cap -) multiplicative on (empty,empty), (strut,strut), (w_2,strut)",
              [&](std::ostringstream& d) { return suite_passed(verify_wheeling_suite(store), d); });

    criterion("coefficient oracle: b_2 = 1/48, b_4 = -1/5760, series agrees with Bernoulli recursion",
              [&](std::ostringstream& d) {
                  bool ok = bernoulli_coeff(1) == Rational(1, 48) && bernoulli_coeff(2) == Rational(-1, 5760);
                  for (int i = 1; i <= 8; ++i)
                      ok = ok && bernoulli_coeff(i) == oracle::wheel_coefficient(i);
                  d << "b_2 = " << bernoulli_coeff(1) << ", b_4 = " << bernoulli_coeff(2) << ", checked i <= 8";
                  return ok;
              });

    criterion("scalar oracles: circle -> dim V, one chord -> 3, Theta -> -12 (|12|)", [&](std::ostringstream& d) {
        const Rational circle = ws.evaluate(bare_circle());
        const Rational chord = ws.evaluate(one_chord());
        const Rational th = ws.evaluate(theta());
        d << "circle " << circle << ", chord " << chord << ", theta " << th;
        return circle == 2 && chord == 3 && th == -12 && circle == oracle::naive_evaluate(bare_circle(), matrices)
            && chord == oracle::naive_evaluate(one_chord(), matrices)
            && th == oracle::naive_evaluate(theta(), matrices);
    });

    criterion("plan soundness: optimized = naive on all diagrams with total <= 6; cheaper plan at 8 vertices",
              [&](std::ostringstream& d) {
                  int compared = 0;
                  bool ok = true;
                  for (int t = 0; t <= 6; t += 2)
                      for (const auto& x : enumerate_piece(Piece::of_a(t))) {
                          ok = ok && ws.evaluate(x) == oracle::naive_evaluate(x, matrices);
                          ++compared;
                      }
                  for (int v = 0; v <= 6; v += 2)
                      for (const auto& x : enumerate_diagrams(Space::B, {v, 0, 0})) {
                          ok = ok && ws.evaluate(x) == oracle::naive_evaluate(x, matrices);
                          ++compared;
                      }
                  const Diagram closed = closure(DiagramVector::of(wheel(8))).begin()->first;
                  const auto plan = contraction_plan(closed, 3, 0);
                  d << compared << " diagrams agree; 8-vertex closed wheel: plan cost " << plan.cost
                    << " vs naive " << plan.naive_cost;
                  return ok && closed.internal.size() == 8 && plan.cost < plan.naive_cost;
              });

    criterion("enumeration oracle: brute force = enumerate_diagrams, B with v+l <= 6, A with total <= 6",
              [&](std::ostringstream& d) {
                  int gradings = 0, diagrams = 0;
                  bool ok = true;
                  auto compare = [&](Space space, int v, int outer) {
                      const Grading g = space == Space::A ? Grading{v, 0, outer} : Grading{v, outer, 0};
                      const auto ours = enumerate_diagrams(space, g);
                      std::set<Diagram, DiagramLess> theirs;
                      const auto brute = oracle::brute_force_diagrams(space, v, outer);
                      for (const auto& x : brute)
                          theirs.insert(canonicalize(x).diagram);
                      ok = ok && brute.size() == ours.size() && theirs.size() == ours.size()
                          && std::equal(theirs.begin(), theirs.end(), ours.begin(), ours.end());
                      ++gradings;
                      diagrams += static_cast<int>(ours.size());
                  };
                  for (int n = 0; n <= 6; ++n)
                      for (int k = 0; k <= n; ++k) {
                          compare(Space::B, n - k, k);
                          compare(Space::A, n - k, k);
                      }
                  d << gradings << " gradings, " << diagrams << " diagrams";
                  return ok;
              });

    std::cout << (failures == 0 ? "ALL CRITERIA PASS" : std::to_string(failures) + " CRITERIA FAIL") << std::endl;
    return failures == 0 ? 0 : 1;
}
