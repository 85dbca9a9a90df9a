#include "jacobi/verify.hpp"

#include "jacobi/error.hpp"
#include "jacobi/maps.hpp"
#include "jacobi/relations.hpp"

#include <chrono>
#include <functional>

namespace jacobi {

namespace {

CheckResult run_check(const std::string& name, const std::function<bool(Json&)>& body)
{
    CheckResult r;
    r.name = name;
    const auto start = std::chrono::steady_clock::now();
    try {
        r.passed = body(r.detail);
    } catch (const Error& e) {
        r.passed = false;
        r.error = std::string(code_name(e.code())) + ": " + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

std::vector<Piece> b_pieces_of_total(int n)
{
    std::vector<Piece> out;
    for (int l = 0; l <= n; ++l) {
        const int v = n - l;
        if ((3 * v + l) % 2 == 0)
            out.push_back(Piece::of_b(v, l));
    }
    return out;
}

} // namespace

bool SuiteReport::passed() const
{
    for (const auto& c : checks)
        if (!c.passed && !c.informational)
            return false;
    return true;
}

Json SuiteReport::to_json() const
{
    Json j;
    j["suite"] = suite;
    j["passed"] = passed();
    Json list = Json::array();
    for (const auto& c : checks) {
        Json x;
        x["name"] = c.name;
        x["passed"] = c.passed;
        if (c.informational)
            x["informational"] = true;
        x["seconds"] = c.seconds;
        if (!c.detail.empty())
            x["detail"] = c.detail;
        if (!c.error.empty())
            x["error"] = c.error;
        list.push_back(std::move(x));
    }
    j["checks"] = list;
    return j;
}

SuiteReport verify_relations(int max_total, const WeightSystem& ws)
{
    SuiteReport report;
    report.suite = "relations";
    for (int t = 0; t <= max_total; t += 2) {
        report.checks.push_back(run_check("AS on A total " + std::to_string(t), [&](Json& detail) {
            int count = 0, failures = 0;
            for (const auto& d : enumerate_piece(Piece::of_a(t)))
                for (int k = 0; k < static_cast<int>(d.internal.size()); ++k) {
                    ++count;
                    if (ws.evaluate(d) + ws.evaluate(reverse_vertex(d, k)) != 0)
                        ++failures;
                }
            detail["relations"] = count;
            detail["nonzero"] = failures;
            return failures == 0;
        }));
        report.checks.push_back(run_check("IHX/STU on A total " + std::to_string(t), [&](Json& detail) {
            const auto set = generate_relations(Piece::of_a(t));
            int failures = 0;
            for (const auto& r : set.generators)
                if (ws.evaluate(r) != 0)
                    ++failures;
            detail["relations"] = set.generators.size();
            detail["nonzero"] = failures;
            return failures == 0;
        }));
    }
    for (int t = 1; t <= max_total; ++t)
        for (const Piece& piece : b_pieces_of_total(t)) {
            if (piece.internal() < 2)
                continue;
            report.checks.push_back(run_check("IHX on B " + to_string(piece) + " through chi", [&](Json& detail) {
                const auto set = generate_relations(piece);
                int failures = 0;
                for (const auto& r : set.generators)
                    if (ws.evaluate(chi(r)) != 0)
                        ++failures;
                detail["relations"] = set.generators.size();
                detail["nonzero"] = failures;
                return failures == 0;
            }));
        }
    return report;
}

ChiRank chi_rank(int total, BasisStore& store)
{
    ChiRank out;
    out.total = total;
    const QuotientBasis& a = store.get(Piece::of_a(total));
    out.dim_a = a.dimension();
    std::vector<std::vector<Rational>> rows;
    for (const Piece& piece : b_pieces_of_total(total)) {
        const QuotientBasis& b = store.get(piece);
        out.dim_b += b.dimension();
        for (const Diagram& d : b.basis()) {
            const DiagramVector image = chi(DiagramVector::of(d));
            rows.push_back(image.is_zero() ? std::vector<Rational>(out.dim_a) : reduce(image, a));
        }
    }
    out.rank = rank_of(rows);
    return out;
}

SuiteReport verify_chi_iso(int max_total, BasisStore& store)
{
    SuiteReport report;
    report.suite = "chi-iso";
    for (int n = 0; n <= max_total; ++n)
        report.checks.push_back(run_check("chi rank on total " + std::to_string(n), [&](Json& detail) {
            const ChiRank r = chi_rank(n, store);
            detail["dim_B"] = r.dim_b;
            detail["dim_A"] = r.dim_a;
            detail["rank"] = r.rank;
            return r.dim_a == r.dim_b && r.rank == r.dim_a;
        }));
    return report;
}

std::optional<Rational> closure_omega_exponent(int vmax, const std::vector<Rational>& candidates,
                                               BasisStore& store)
{
    const DiagramVector closed = closure(omega(vmax).value);
    for (const Rational& s : candidates)
        if (equal_mod_relations(closed, exp_truncated(s * DiagramVector::of(theta()), vmax), store))
            return s;
    return std::nullopt;
}

SuiteReport verify_closure_omega(int vmax, BasisStore& store)
{
    SuiteReport report;
    report.suite = "closure-omega";
    auto check = [&](const std::string& name, const Rational& s) {
        return run_check(name, [&](Json& detail) {
            const auto found = closure_omega_exponent(vmax, {s, -s}, store);
            detail["vmax"] = vmax;
            if (found)
                detail["eps"] = *found > 0 ? 1 : -1;
            return found.has_value();
        });
    };
    report.checks.push_back(check("cl(Omega) = exp(eps Theta/24)", Rational(1, 24)));
    report.checks.push_back(check("cl(Omega) = exp(eps Theta/48)", Rational(1, 48)));
    report.checks.back().informational = true;
    return report;
}

SuiteReport verify_wheeling_suite(BasisStore& store)
{
    SuiteReport report;
    report.suite = "wheeling";
    const DiagramVector empty = DiagramVector::of(empty_diagram());
    const DiagramVector s = DiagramVector::of(strut());
    const DiagramVector w2 = DiagramVector::of(wheel(2));
    const std::vector<std::tuple<std::string, DiagramVector, DiagramVector>> pairs = {
        {"(empty, empty)", empty, empty},
        {"(strut, strut)", s, s},
        {"(w_2, strut)", w2, s},
    };
    for (const auto& [name, a, b] : pairs)
        report.checks.push_back(run_check("wheeling " + name, [&](Json& detail) {
            const WheelingReport w = check_wheeling(a, b, store);
            detail["vmax"] = w.vmax;
            return w.holds;
        }));
    return report;
}

} // namespace jacobi
