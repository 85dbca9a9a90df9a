#include "jacobi/maps.hpp"

#include "jacobi/error.hpp"
#include "jacobi/series.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>

namespace jacobi {

namespace {

void require(const DiagramVector& x, Space space, const char* op)
{
    if (!x.is_zero() && x.space() != space)
        throw Error(ErrorCode::SpaceMismatch, std::string(op) + " expects " + to_string(space) + " diagrams");
}

Diagram rotate_circle(const Diagram& d, int cut)
{
    Diagram r = d;
    if (!d.skeleton.empty())
        std::rotate(r.skeleton.begin(), r.skeleton.begin() + cut % d.skeleton.size(), r.skeleton.end());
    return r;
}

void for_each_matching(std::vector<int>& items, std::vector<std::pair<int, int>>& pairs,
                       const std::function<void()>& visit)
{
    if (items.empty()) {
        visit();
        return;
    }
    const int first = items.back();
    items.pop_back();
    for (std::size_t i = 0; i < items.size(); ++i) {
        const int partner = items[i];
        std::vector<int> rest = items;
        rest.erase(rest.begin() + i);
        pairs.emplace_back(first, partner);
        for_each_matching(rest, pairs, visit);
        pairs.pop_back();
    }
    items.push_back(first);
}

} // namespace

DiagramVector disjoint_union_truncated(const DiagramVector& a, const DiagramVector& b, int vmax)
{
    require(a, Space::B, "disjoint_union");
    require(b, Space::B, "disjoint_union");
    DiagramVector out(Space::B);
    for (const auto& [x, cx] : a)
        for (const auto& [y, cy] : b)
            if (static_cast<int>(x.internal.size() + y.internal.size()) <= vmax)
                out.add(juxtapose(x, y), cx * cy);
    return out;
}

DiagramVector disjoint_union(const DiagramVector& a, const DiagramVector& b)
{
    return disjoint_union_truncated(a, b, std::numeric_limits<int>::max());
}

DiagramVector connect_sum_at(const Diagram& a, int cut_a, const Diagram& b, int cut_b)
{
    if (a.space != Space::A || b.space != Space::A)
        throw Error(ErrorCode::SpaceMismatch, "connect_sum expects A diagrams");
    return DiagramVector::of(juxtapose(rotate_circle(a, cut_a), rotate_circle(b, cut_b)));
}

DiagramVector connect_sum(const DiagramVector& a, const DiagramVector& b)
{
    require(a, Space::A, "connect_sum");
    require(b, Space::A, "connect_sum");
    DiagramVector out(Space::A);
    for (const auto& [x, cx] : a)
        for (const auto& [y, cy] : b)
            out.add(juxtapose(x, y), cx * cy);
    return out;
}

DiagramVector chi(const DiagramVector& x)
{
    require(x, Space::B, "chi");
    DiagramVector out(Space::A);
    for (const auto& [d, c] : x) {
        Diagram base = d;
        base.space = Space::A;
        base.legs.clear();
        const int l = static_cast<int>(d.legs.size());
        if (l == 0) {
            out.add(base, c);
            continue;
        }
        // Rotations of the circle give isomorphic diagrams, so fixing the
        // first leg leaves (l-1)! orders with weight 1/(l-1)! each.
        const Rational weight = c / factorial(l - 1);
        std::vector<int> rest(d.legs.begin() + 1, d.legs.end());
        std::sort(rest.begin(), rest.end());
        do {
            base.skeleton.assign(1, d.legs[0]);
            base.skeleton.insert(base.skeleton.end(), rest.begin(), rest.end());
            out.add(base, weight);
        } while (std::next_permutation(rest.begin(), rest.end()));
    }
    return out;
}

DiagramVector closure(const DiagramVector& x)
{
    require(x, Space::B, "closure");
    DiagramVector out(Space::B);
    for (const auto& [d, c] : x) {
        if (d.legs.size() % 2 != 0)
            continue;
        std::vector<int> legs = d.legs;
        std::vector<std::pair<int, int>> pairs;
        for_each_matching(legs, pairs, [&] { out.add(glue_legs(d, pairs), c); });
    }
    return out;
}

DiagramVector cap(const DiagramVector& cv, const DiagramVector& x)
{
    require(cv, Space::B, "cap");
    require(x, Space::B, "cap");
    DiagramVector out(Space::B);
    for (const auto& [cd, cc] : cv) {
        const std::size_t lc = cd.legs.size();
        for (const auto& [dd, dc] : x) {
            const std::size_t ld = dd.legs.size();
            if (lc > ld)
                continue;
            const Diagram joined = juxtapose(cd, dd);
            const int offset = cd.half_edge_count();
            std::vector<int> targets(ld);
            for (std::size_t i = 0; i < ld; ++i)
                targets[i] = dd.legs[i] + offset;
            std::vector<bool> used(ld, false);
            std::vector<std::pair<int, int>> pairs;
            const Rational coeff = cc * dc;
            std::function<void(std::size_t)> assign = [&](std::size_t k) {
                if (k == lc) {
                    out.add(glue_legs(joined, pairs), coeff);
                    return;
                }
                for (std::size_t i = 0; i < ld; ++i) {
                    if (used[i])
                        continue;
                    used[i] = true;
                    pairs.emplace_back(cd.legs[k], targets[i]);
                    assign(k + 1);
                    pairs.pop_back();
                    used[i] = false;
                }
            };
            assign(0);
        }
    }
    return out;
}

Diagram wheel(int k)
{
    if (k < 2 || k % 2 != 0)
        throw Error(ErrorCode::InvalidArgument, "wheels need an even number k >= 2 of spokes");
    Diagram d;
    d.pairing.assign(4 * k, -1);
    auto link = [&](int a, int b) {
        d.pairing[a] = b;
        d.pairing[b] = a;
    };
    for (int j = 0; j < k; ++j) {
        d.internal.push_back({3 * j, 3 * j + 1, 3 * j + 2});
        link(3 * j + 1, 3 * ((j + 1) % k));
        d.legs.push_back(3 * k + j);
        link(3 * j + 2, 3 * k + j);
    }
    return d;
}

DiagramVector exp_truncated(const DiagramVector& x, int vmax)
{
    require(x, Space::B, "exp_truncated");
    for (const auto& [d, c] : x)
        if (d.internal.empty())
            throw Error(ErrorCode::InvalidArgument,
                        d == empty_diagram() ? "exp_truncated needs a vanishing constant term"
                                             : "exp_truncated needs every term to have an internal vertex");
    DiagramVector result = DiagramVector::of(empty_diagram());
    DiagramVector power = result;
    for (int k = 1; k <= vmax; ++k) {
        power = disjoint_union_truncated(power, x, vmax);
        power *= Rational(1, k);
        if (power.is_zero())
            break;
        result += power;
    }
    return result;
}

WheelsElement omega(int vmax)
{
    if (vmax < 0)
        throw Error(ErrorCode::InvalidArgument, "omega needs vmax >= 0");
    WheelsElement w;
    w.vmax = vmax;
    DiagramVector exponent(Space::B);
    for (int i = 1; 2 * i <= vmax; ++i) {
        w.coefficients.push_back(bernoulli_coeff(i));
        exponent.add(wheel(2 * i), w.coefficients.back());
    }
    w.value = exp_truncated(exponent, vmax);
    return w;
}

WheelingReport check_wheeling(const DiagramVector& a, const DiagramVector& b, BasisStore& store)
{
    require(a, Space::B, "verify_wheeling");
    require(b, Space::B, "verify_wheeling");
    const DiagramVector ab = disjoint_union(a, b);
    int legs = 0;
    for (const auto& [d, c] : ab)
        legs = std::max(legs, static_cast<int>(d.legs.size()));
    WheelingReport report;
    report.vmax = legs + legs % 2;
    const DiagramVector om = omega(report.vmax).value;
    report.lhs = chi(cap(om, ab));
    report.rhs = connect_sum(chi(cap(om, a)), chi(cap(om, b)));
    report.holds = equal_mod_relations(report.lhs, report.rhs, store);
    return report;
}

bool verify_wheeling(const DiagramVector& a, const DiagramVector& b, BasisStore& store)
{
    return check_wheeling(a, b, store).holds;
}

} // namespace jacobi
