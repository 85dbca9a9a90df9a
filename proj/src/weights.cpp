#include "jacobi/weights.hpp"

#include "jacobi/error.hpp"

#include <algorithm>

namespace jacobi {

namespace {

struct Scopes {
    std::vector<int> dims;
    std::vector<std::vector<int>> vars;
    std::vector<int> kinds; ///< mask for an internal vertex, or -1 - raised for a circle vertex
};

// Variables: one per edge (range dim g) and one per circle arc (range dim V).
// Circle vertex j has indices (edge, arc j, arc j+1).
Scopes scopes_of(const Diagram& d, int dim_g, int dim_v)
{
    if (!d.legs.empty())
        throw Error(ErrorCode::InvalidArgument, "weight systems evaluate diagrams without legs");
    const int n = d.half_edge_count();
    Scopes s;
    std::vector<int> edge(n, -1);
    for (int h = 0; h < n; ++h)
        if (h < d.pairing[h]) {
            edge[h] = edge[d.pairing[h]] = static_cast<int>(s.dims.size());
            s.dims.push_back(dim_g);
        }
    const int e = static_cast<int>(d.skeleton.size());
    const int first_arc = static_cast<int>(s.dims.size());
    for (int j = 0; j < e; ++j)
        s.dims.push_back(dim_v);
    auto raised = [&](int h) { return d.pairing[h] < h ? 1 : 0; };
    for (const auto& t : d.internal) {
        s.vars.push_back({edge[t[0]], edge[t[1]], edge[t[2]]});
        s.kinds.push_back(raised(t[0]) | raised(t[1]) << 1 | raised(t[2]) << 2);
    }
    for (int j = 0; j < e; ++j) {
        const int h = d.skeleton[j];
        s.vars.push_back({edge[h], first_arc + j, first_arc + (j + 1) % e});
        s.kinds.push_back(-1 - raised(h));
    }
    return s;
}

} // namespace

WeightSystem::WeightSystem(MetricLieAlgebra g, std::optional<Representation> v, PlanOptions options)
    : g_(std::move(g)), v_(std::move(v)), options_(options)
{
    if (auto check = check_lie(g_); !check.ok)
        throw Error(ErrorCode::LieValidation, check.message());
    if (v_)
        if (auto check = check_representation(g_, *v_); !check.ok)
            throw Error(ErrorCode::LieValidation, check.message());
    t_ = derive_tensors(g_);
    abelian_ = std::all_of(t_.f.begin(), t_.f.end(), [](const Rational& x) { return x == 0; });

    const int n = g_.dim;
    f_raised_.assign(8, {});
    f_raised_[0] = t_.f;
    for (int mask = 1; mask < 8; ++mask) {
        // Raise the lowest set position of mask starting from the variant
        // without it.
        int pos = 0;
        while (!(mask >> pos & 1))
            ++pos;
        const auto& base = f_raised_[mask & ~(1 << pos)];
        auto& out = f_raised_[mask];
        out.assign(base.size(), Rational(0));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c) {
                    int idx[3] = {a, b, c};
                    Rational s;
                    const int target = idx[pos];
                    for (int m = 0; m < n; ++m) {
                        if (t_.c_up[m][target] == 0)
                            continue;
                        idx[pos] = m;
                        s += base[(idx[0] * n + idx[1]) * n + idx[2]] * t_.c_up[m][target];
                    }
                    out[(a * n + b) * n + c] = s;
                }
    }

    if (v_) {
        const int m = v_->dim_v;
        rho_raised_.assign(2, std::vector<Rational>(static_cast<std::size_t>(n) * m * m));
        for (int i = 0; i < n; ++i)
            for (int r = 0; r < m; ++r)
                for (int c = 0; c < m; ++c) {
                    rho_raised_[0][(i * m + r) * m + c] = v_->action[i][r][c];
                    Rational s;
                    for (int k = 0; k < n; ++k)
                        s += t_.c_up[i][k] * v_->action[k][r][c];
                    rho_raised_[1][(i * m + r) * m + c] = s;
                }
    }
}

TensorNetwork WeightSystem::network(const Diagram& d) const
{
    if (d.space == Space::A && !v_)
        throw Error(ErrorCode::InvalidArgument, "diagrams on the circle need a representation");
    const int dim_v = v_ ? v_->dim_v : 0;
    Scopes s = scopes_of(d, g_.dim, dim_v);
    TensorNetwork net;
    net.dims = std::move(s.dims);
    for (std::size_t i = 0; i < s.vars.size(); ++i) {
        const int kind = s.kinds[i];
        const auto& values = kind >= 0 ? f_raised_[kind] : rho_raised_[-1 - kind];
        net.factors.push_back({std::move(s.vars[i]), values});
    }
    mpz_class g_power;
    mpz_ui_pow_ui(g_power.get_mpz_t(), static_cast<unsigned long>(g_.dim), static_cast<unsigned long>(d.free_loops));
    net.prefactor = Rational(g_power);
    if (d.space == Space::A && d.skeleton.empty())
        net.prefactor *= dim_v;
    return net;
}

ContractionPlan WeightSystem::plan(const Diagram& d) const
{
    return plan_contraction(network(d), options_);
}

Rational WeightSystem::evaluate(const Diagram& d) const
{
    TensorNetwork net = network(d);
    // f = 0 kills every diagram with an internal vertex; skip the contraction.
    if (abelian_ && !d.internal.empty())
        return 0;
    return contract(net, options_);
}

Rational WeightSystem::evaluate(const DiagramVector& x) const
{
    Rational total;
    for (const auto& [d, c] : x)
        total += c * evaluate(d);
    return total;
}

Rational evaluate(const DiagramVector& x, const MetricLieAlgebra& g, const Representation& v)
{
    if (!x.is_zero() && x.space() != Space::A)
        throw Error(ErrorCode::SpaceMismatch, "evaluate expects A diagrams; use evaluate_closed for B");
    return WeightSystem(g, v).evaluate(x);
}

Rational evaluate(const Diagram& d, const MetricLieAlgebra& g, const Representation& v)
{
    if (d.space != Space::A)
        throw Error(ErrorCode::SpaceMismatch, "evaluate expects A diagrams; use evaluate_closed for B");
    return WeightSystem(g, v).evaluate(d);
}

Rational evaluate_closed(const Diagram& d, const MetricLieAlgebra& g)
{
    if (d.space != Space::B)
        throw Error(ErrorCode::SpaceMismatch, "evaluate_closed expects B diagrams");
    if (!d.legs.empty())
        throw Error(ErrorCode::InvalidArgument, "evaluate_closed needs a diagram without legs");
    return WeightSystem(g).evaluate(d);
}

Rational evaluate_closed(const DiagramVector& x, const MetricLieAlgebra& g)
{
    if (!x.is_zero() && x.space() != Space::B)
        throw Error(ErrorCode::SpaceMismatch, "evaluate_closed expects B diagrams");
    for (const auto& [d, c] : x)
        if (!d.legs.empty())
            throw Error(ErrorCode::InvalidArgument, "evaluate_closed needs diagrams without legs");
    return WeightSystem(g).evaluate(x);
}

ContractionPlan contraction_plan(const Diagram& d, int dim_g, int dim_v, const PlanOptions& options)
{
    Scopes s = scopes_of(d, dim_g, dim_v);
    return plan_contraction(s.dims, s.vars, options);
}

} // namespace jacobi
