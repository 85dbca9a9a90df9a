#include "jacobi/contraction.hpp"

#include "jacobi/error.hpp"

#include <algorithm>
#include <limits>

namespace jacobi {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t mul_sat(std::uint64_t a, std::uint64_t b)
{
    if (a != 0 && b > kSaturated / a)
        return kSaturated;
    return a * b;
}

std::uint64_t add_sat(std::uint64_t a, std::uint64_t b)
{
    return a > kSaturated - b ? kSaturated : a + b;
}

std::uint64_t span(const std::vector<int>& dims, const std::vector<int>& vars)
{
    std::uint64_t s = 1;
    for (int v : vars)
        s = mul_sat(s, static_cast<std::uint64_t>(dims[v]));
    return s;
}

std::vector<int> sorted_union(const std::vector<std::vector<int>>& scopes)
{
    std::vector<int> out;
    for (const auto& s : scopes)
        out.insert(out.end(), s.begin(), s.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

ContractionPlan plan_greedy(const std::vector<int>& dims, std::vector<std::vector<int>> scopes)
{
    const int n = static_cast<int>(dims.size());
    ContractionPlan plan;
    std::vector<bool> done(n, false);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        std::uint64_t best_cost = kSaturated;
        std::vector<int> best_union;
        for (int x = 0; x < n; ++x) {
            if (done[x])
                continue;
            std::vector<std::vector<int>> touching;
            for (const auto& s : scopes)
                if (std::find(s.begin(), s.end(), x) != s.end())
                    touching.push_back(s);
            touching.push_back({x});
            auto u = sorted_union(touching);
            const std::uint64_t c = span(dims, u);
            if (best < 0 || c < best_cost) {
                best = x;
                best_cost = c;
                best_union = std::move(u);
            }
        }
        done[best] = true;
        plan.order.push_back(best);
        plan.cost = add_sat(plan.cost, best_cost);
        std::vector<std::vector<int>> next;
        for (auto& s : scopes)
            if (std::find(s.begin(), s.end(), best) == s.end())
                next.push_back(std::move(s));
        best_union.erase(std::find(best_union.begin(), best_union.end(), best));
        next.push_back(std::move(best_union));
        scopes = std::move(next);
    }
    return plan;
}

// After eliminating a set S, the pending factors are the original ones plus
// one per connected component of S. Eliminating x next therefore touches x
// and the outside neighbors of x's component in S + x, which makes the cost
// of each step a function of (S, x) alone.
ContractionPlan plan_exhaustive(const std::vector<int>& dims, const std::vector<std::vector<int>>& scopes)
{
    const int n = static_cast<int>(dims.size());
    using Mask = std::uint32_t;
    std::vector<Mask> adjacent(n, 0);
    for (const auto& s : scopes)
        for (int a : s)
            for (int b : s)
                if (a != b)
                    adjacent[a] |= Mask{1} << b;

    auto step_cost = [&](Mask eliminated, int x) {
        const Mask pool = eliminated | (Mask{1} << x);
        Mask component = Mask{1} << x, frontier = component;
        while (frontier) {
            Mask grow = 0;
            for (int v = 0; v < n; ++v)
                if (frontier & (Mask{1} << v))
                    grow |= adjacent[v];
            grow &= pool & ~component;
            component |= grow;
            frontier = grow;
        }
        Mask touched = 0;
        for (int v = 0; v < n; ++v)
            if (component & (Mask{1} << v))
                touched |= adjacent[v];
        touched = (touched & ~component) | (Mask{1} << x);
        std::uint64_t c = 1;
        for (int v = 0; v < n; ++v)
            if (touched & (Mask{1} << v))
                c = mul_sat(c, static_cast<std::uint64_t>(dims[v]));
        return c;
    };

    const Mask full = n == 0 ? 0 : (Mask{1} << n) - 1;
    std::vector<std::uint64_t> best(std::size_t{full} + 1, kSaturated);
    std::vector<std::int8_t> last(std::size_t{full} + 1, -1);
    best[0] = 0;
    for (Mask s = 0; s < full; ++s) {
        for (int x = 0; x < n; ++x) {
            if (s & (Mask{1} << x))
                continue;
            const Mask t = s | (Mask{1} << x);
            const std::uint64_t c = add_sat(best[s], step_cost(s, x));
            if (c < best[t] || last[t] < 0) {
                best[t] = c;
                last[t] = static_cast<std::int8_t>(x);
            }
        }
    }
    ContractionPlan plan;
    plan.cost = best[full];
    plan.exhaustive = true;
    for (Mask s = full; s; s &= ~(Mask{1} << last[s]))
        plan.order.push_back(last[s]);
    std::reverse(plan.order.begin(), plan.order.end());
    return plan;
}

/// Multiplies the factors over the union of their variables and sums out x.
Factor eliminate(const std::vector<int>& dims, const std::vector<const Factor*>& bucket, int x)
{
    std::vector<std::vector<int>> scopes;
    for (const Factor* f : bucket)
        scopes.push_back(f->vars);
    std::vector<int> kept = sorted_union(scopes);
    kept.erase(std::find(kept.begin(), kept.end(), x));

    // Loop variables: kept..., x (x fastest).
    std::vector<int> loop = kept;
    loop.push_back(x);
    const int width = static_cast<int>(loop.size());
    std::vector<int> slot(dims.size(), -1);
    for (int i = 0; i < width; ++i)
        slot[loop[i]] = i;

    // Stride of each loop variable inside each factor.
    std::vector<std::vector<std::size_t>> stride(bucket.size(), std::vector<std::size_t>(width, 0));
    for (std::size_t b = 0; b < bucket.size(); ++b) {
        std::size_t s = 1;
        const auto& vars = bucket[b]->vars;
        for (int i = static_cast<int>(vars.size()) - 1; i >= 0; --i) {
            stride[b][slot[vars[i]]] += s;
            s *= static_cast<std::size_t>(dims[vars[i]]);
        }
    }

    Factor out;
    out.vars = kept;
    std::size_t out_size = 1;
    for (int v : kept)
        out_size *= static_cast<std::size_t>(dims[v]);
    out.values.assign(out_size, Rational(0));

    std::vector<int> digit(width, 0);
    std::vector<std::size_t> offset(bucket.size(), 0);
    Rational product;
    for (std::size_t cell = 0; cell < out_size; ++cell) {
        Rational& acc = out.values[cell];
        for (int xv = 0; xv < dims[x]; ++xv) {
            std::size_t b = 0;
            for (; b < bucket.size(); ++b) {
                const std::size_t at = offset[b] + xv * stride[b][width - 1];
                const Rational& value = bucket[b]->values[at];
                if (value == 0)
                    break;
                if (b == 0)
                    product = value;
                else
                    product *= value;
            }
            if (b == bucket.size())
                acc += product;
        }
        // Advance the odometer over the kept variables.
        for (int i = width - 2; i >= 0; --i) {
            for (std::size_t b2 = 0; b2 < bucket.size(); ++b2)
                offset[b2] += stride[b2][i];
            if (++digit[i] < dims[loop[i]])
                break;
            for (std::size_t b2 = 0; b2 < bucket.size(); ++b2)
                offset[b2] -= stride[b2][i] * dims[loop[i]];
            digit[i] = 0;
        }
    }
    return out;
}

} // namespace

ContractionPlan plan_contraction(const std::vector<int>& dims, const std::vector<std::vector<int>>& scopes,
                                 const PlanOptions& options)
{
    const int n = static_cast<int>(dims.size());
    ContractionPlan plan = n <= std::min(options.exhaustive_width, 24) ? plan_exhaustive(dims, scopes)
                                                                       : plan_greedy(dims, scopes);
    plan.naive_cost = 1;
    for (int d : dims)
        plan.naive_cost = mul_sat(plan.naive_cost, static_cast<std::uint64_t>(d));
    return plan;
}

ContractionPlan plan_contraction(const TensorNetwork& network, const PlanOptions& options)
{
    std::vector<std::vector<int>> scopes;
    for (const auto& f : network.factors)
        scopes.push_back(f.vars);
    return plan_contraction(network.dims, scopes, options);
}

Rational contract(const TensorNetwork& network, const ContractionPlan& plan, std::uint64_t max_cost)
{
    if (plan.cost > max_cost)
        throw Error(ErrorCode::ResourceLimit, "contraction needs about " + std::to_string(plan.cost)
                                                  + " steps, above the limit of " + std::to_string(max_cost));
    std::vector<Factor> live = network.factors;
    Rational scalar = network.prefactor;
    for (int x : plan.order) {
        std::vector<const Factor*> bucket;
        std::vector<Factor> rest;
        std::vector<std::size_t> taken;
        for (std::size_t i = 0; i < live.size(); ++i)
            if (std::find(live[i].vars.begin(), live[i].vars.end(), x) != live[i].vars.end())
                taken.push_back(i);
        if (taken.empty()) {
            scalar *= network.dims[x];
            continue;
        }
        for (std::size_t i : taken)
            bucket.push_back(&live[i]);
        Factor merged = eliminate(network.dims, bucket, x);
        for (std::size_t i = 0, t = 0; i < live.size(); ++i) {
            if (t < taken.size() && taken[t] == i)
                ++t;
            else
                rest.push_back(std::move(live[i]));
        }
        rest.push_back(std::move(merged));
        live = std::move(rest);
    }
    for (const auto& f : live) {
        if (!f.vars.empty())
            throw Error(ErrorCode::InvalidArgument, "contraction plan leaves variables open");
        scalar *= f.values.at(0);
    }
    return scalar;
}

Rational contract(const TensorNetwork& network, const PlanOptions& options)
{
    return contract(network, plan_contraction(network, options), options.max_cost);
}

} // namespace jacobi
