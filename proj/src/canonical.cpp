#include "jacobi/canonical.hpp"

#include "jacobi/error.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

namespace jacobi {

namespace {

using Code = std::int32_t;
constexpr Code kNewInternal = 1 << 20;
constexpr Code kNewLeg = kNewInternal + 1;

struct DisjointSets {
    std::vector<int> parent;
    explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x)
    {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    }
    void join(int a, int b) { parent[find(a)] = find(b); }
};

struct ComponentLabeling {
    std::vector<Code> certificate;
    std::vector<int> order; ///< local label -> original half-edge
    int sign = 1;
    bool skeleton = false;
};

/// Branch-and-bound search for the minimal traversal certificate of one
/// connected component.
class ComponentSearch {
public:
    ComponentSearch(const Diagram& d, const Incidence& inc, int component_size)
        : d_(d), inc_(inc), cert_(component_size + 1)
    {
    }

    void run_from_circle(int rotation)
    {
        State s = fresh();
        const int e = static_cast<int>(d_.skeleton.size());
        for (int j = 0; j < e; ++j)
            assign(s, d_.skeleton[(rotation + j) % e]);
        extend(std::move(s));
    }

    void run_from_leg(int h)
    {
        State s = fresh();
        if (!emit(s, kNewLeg))
            return;
        assign(s, h);
        extend(std::move(s));
    }

    void run_from_internal(int h)
    {
        State s = fresh();
        if (!emit(s, kNewInternal))
            return;
        enter_vertex(std::move(s), h);
    }

    ComponentLabeling result() const
    {
        ComponentLabeling out;
        out.certificate = best_;
        out.order = best_order_;
        const bool plus = signs_ & 1u, minus = signs_ & 2u;
        out.sign = plus && minus ? 0 : (plus ? 1 : -1);
        return out;
    }

private:
    struct State {
        std::vector<int> label; ///< original half-edge -> local label or -1
        std::vector<int> order; ///< local label -> original half-edge
        int cursor = 0;
        int pos = 0;
        int sign = 1;
        bool less = false;
        unsigned version = 0;
    };

    State fresh() const
    {
        State s;
        s.label.assign(d_.half_edge_count(), -1);
        s.order.reserve(cert_.size());
        return s;
    }

    static void assign(State& s, int h)
    {
        s.label[h] = static_cast<int>(s.order.size());
        s.order.push_back(h);
    }

    // Brings the comparison state up to date with the current best; false if
    // the prefix written so far is already worse.
    bool refresh(State& s)
    {
        if (s.version == version_)
            return true;
        s.version = version_;
        if (best_.empty()) {
            s.less = true;
            return true;
        }
        auto [a, b] = std::mismatch(cert_.begin(), cert_.begin() + s.pos, best_.begin());
        if (a == cert_.begin() + s.pos) {
            s.less = false;
            return true;
        }
        if (*a > *b)
            return false;
        s.less = true;
        return true;
    }

    bool emit(State& s, Code code)
    {
        if (!refresh(s))
            return false;
        if (!s.less) {
            if (code > best_[s.pos])
                return false;
            if (code < best_[s.pos])
                s.less = true;
        }
        cert_[s.pos++] = code;
        return true;
    }

    void complete(State& s)
    {
        if (!refresh(s))
            return;
        if (s.less) {
            best_.assign(cert_.begin(), cert_.begin() + s.pos);
            best_order_ = s.order;
            signs_ = 0;
            ++version_;
        }
        signs_ |= s.sign > 0 ? 1u : 2u;
    }

    // Labels internal half-edge h and branches over the order of the other two.
    void enter_vertex(State s, int h)
    {
        const auto slot = inc_.slot[h];
        const auto& t = d_.internal[slot.node];
        const int x = t[(slot.position + 1) % 3];
        const int y = t[(slot.position + 2) % 3];
        assign(s, h);
        State alt = s;
        assign(s, x);
        assign(s, y);
        assign(alt, y);
        assign(alt, x);
        alt.sign = -alt.sign;
        extend(std::move(s));
        extend(std::move(alt));
    }

    void extend(State s)
    {
        while (s.cursor < static_cast<int>(s.order.size())) {
            const int h = s.order[s.cursor++];
            const int p = d_.pairing[h];
            if (s.label[p] >= 0) {
                if (!emit(s, s.label[p]))
                    return;
                continue;
            }
            if (inc_.slot[p].kind == Incidence::Leg) {
                if (!emit(s, kNewLeg))
                    return;
                assign(s, p);
                continue;
            }
            if (!emit(s, kNewInternal))
                return;
            enter_vertex(std::move(s), p);
            return;
        }
        complete(s);
    }

    const Diagram& d_;
    const Incidence& inc_;
    std::vector<Code> cert_;
    std::vector<Code> best_;
    std::vector<int> best_order_;
    unsigned signs_ = 0;
    unsigned version_ = 1;
};

} // namespace

CanonicalForm canonicalize(const Diagram& d)
{
    const int n = d.half_edge_count();
    const Incidence inc(d);

    DisjointSets sets(n);
    for (int h = 0; h < n; ++h)
        sets.join(h, d.pairing[h]);
    for (const auto& t : d.internal) {
        sets.join(t[0], t[1]);
        sets.join(t[0], t[2]);
    }
    for (std::size_t i = 1; i < d.skeleton.size(); ++i)
        sets.join(d.skeleton[0], d.skeleton[i]);

    std::vector<std::vector<int>> members(n);
    for (int h = 0; h < n; ++h)
        members[sets.find(h)].push_back(h);

    std::vector<ComponentLabeling> components;
    int skeleton_root = d.skeleton.empty() ? -1 : sets.find(d.skeleton[0]);
    for (int root = 0; root < n; ++root) {
        const auto& halves = members[root];
        if (halves.empty())
            continue;
        ComponentSearch search(d, inc, static_cast<int>(halves.size()));
        if (root == skeleton_root) {
            for (int r = 0; r < static_cast<int>(d.skeleton.size()); ++r)
                search.run_from_circle(r);
        } else {
            bool has_leg = std::any_of(halves.begin(), halves.end(),
                                       [&](int h) { return inc.slot[h].kind == Incidence::Leg; });
            for (int h : halves) {
                auto kind = inc.slot[h].kind;
                if (has_leg && kind == Incidence::Leg)
                    search.run_from_leg(h);
                else if (!has_leg && kind == Incidence::Internal)
                    search.run_from_internal(h);
            }
        }
        components.push_back(search.result());
        components.back().skeleton = root == skeleton_root;
    }

    std::stable_sort(components.begin(), components.end(), [](const auto& a, const auto& b) {
        if (a.skeleton != b.skeleton)
            return a.skeleton;
        return a.certificate < b.certificate;
    });

    CanonicalForm out;
    Diagram& c = out.diagram;
    c.space = d.space;
    c.free_loops = d.free_loops;
    std::vector<int> new_id(n);
    std::vector<int> original(n);
    int offset = 0;
    for (const auto& comp : components) {
        out.sign *= comp.sign;
        for (int local = 0; local < static_cast<int>(comp.order.size()); ++local) {
            new_id[comp.order[local]] = offset + local;
            original[offset + local] = comp.order[local];
        }
        offset += static_cast<int>(comp.order.size());
    }

    c.pairing.resize(n);
    for (int h = 0; h < n; ++h)
        c.pairing[new_id[h]] = new_id[d.pairing[h]];
    c.skeleton.resize(d.skeleton.size());
    std::iota(c.skeleton.begin(), c.skeleton.end(), 0);
    for (int label = 0; label < n;) {
        const auto slot = inc.slot[original[label]];
        if (slot.kind == Incidence::Internal) {
            c.internal.push_back({label, label + 1, label + 2});
            label += 3;
        } else {
            if (slot.kind == Incidence::Leg)
                c.legs.push_back(label);
            ++label;
        }
    }
    return out;
}

std::optional<int> is_isomorphic(const Diagram& d1, const Diagram& d2)
{
    if (d1.space != d2.space)
        throw Error(ErrorCode::SpaceMismatch, "is_isomorphic: diagrams live in different spaces");
    if (d1.grading() != d2.grading())
        throw Error(ErrorCode::GradingMismatch, "is_isomorphic: gradings differ");
    auto c1 = canonicalize(d1);
    auto c2 = canonicalize(d2);
    if (c1.diagram != c2.diagram)
        return std::nullopt;
    return c1.sign * c2.sign;
}

} // namespace jacobi
