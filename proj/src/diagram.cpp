#include "jacobi/diagram.hpp"

#include "jacobi/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace jacobi {

std::string to_string(Space space)
{
    return space == Space::A ? "A" : "B";
}

std::string to_string(const Piece& piece)
{
    if (piece.space == Space::A)
        return "A[total=" + std::to_string(piece.total) + "]";
    return "B[v=" + std::to_string(piece.internal()) + ",l=" + std::to_string(piece.legs) + "]";
}

bool DiagramLess::operator()(const Diagram& a, const Diagram& b) const
{
    if (a.space != b.space)
        return a.space < b.space;
    auto ga = a.grading(), gb = b.grading();
    if (ga.total() != gb.total())
        return ga.total() < gb.total();
    if (ga != gb)
        return ga < gb;
    return std::tie(a.free_loops, a.internal, a.legs, a.skeleton, a.pairing)
        < std::tie(b.free_loops, b.internal, b.legs, b.skeleton, b.pairing);
}

namespace {

[[noreturn]] void invalid(const std::string& what)
{
    throw Error(ErrorCode::InvalidDiagram, what);
}

} // namespace

Diagram validate(const RawDiagram& raw)
{
    if (raw.space == Space::A && !raw.skeleton)
        invalid("space A requires a skeleton");
    if (raw.space == Space::B && raw.skeleton)
        invalid("mixed space: a B diagram cannot have a skeleton");
    if (raw.skeleton && !raw.legs.empty())
        invalid("mixed space: legs and skeleton both present");
    if (raw.free_loops < 0)
        invalid("free_loops must be non-negative");

    // Node membership: every id used by exactly one node slot.
    std::map<long long, int> owner_count;
    auto use = [&](long long id) {
        if (id < 0)
            invalid("negative half-edge id " + std::to_string(id));
        if (++owner_count[id] > 1)
            invalid("half-edge reused: " + std::to_string(id));
    };
    for (const auto& t : raw.internal)
        for (long long h : t)
            use(h);
    for (long long h : raw.legs)
        use(h);
    if (raw.skeleton)
        for (long long h : *raw.skeleton)
            use(h);

    std::map<long long, long long> partner;
    for (const auto& [a, b] : raw.pairing) {
        if (a == b)
            invalid("fixed point in pairing: " + std::to_string(a));
        for (long long h : {a, b}) {
            if (!owner_count.count(h))
                invalid("dangling half-edge in pairing: " + std::to_string(h));
            if (partner.count(h))
                invalid("half-edge paired twice: " + std::to_string(h));
        }
        partner[a] = b;
        partner[b] = a;
    }
    for (const auto& [h, count] : owner_count)
        if (!partner.count(h))
            invalid("dangling half-edge (unpaired): " + std::to_string(h));

    std::map<long long, int> dense;
    for (const auto& [h, count] : owner_count)
        dense.emplace(h, static_cast<int>(dense.size()));

    Diagram d;
    d.space = raw.space;
    d.free_loops = static_cast<int>(raw.free_loops);
    for (const auto& t : raw.internal)
        d.internal.push_back({dense[t[0]], dense[t[1]], dense[t[2]]});
    for (long long h : raw.legs)
        d.legs.push_back(dense[h]);
    if (raw.skeleton)
        for (long long h : *raw.skeleton)
            d.skeleton.push_back(dense[h]);
    d.pairing.assign(dense.size(), -1);
    for (const auto& [h, p] : partner)
        d.pairing[dense[h]] = dense[p];
    return d;
}

void check(const Diagram& d)
{
    const int n = d.half_edge_count();
    if (d.space == Space::B && !d.skeleton.empty())
        invalid("mixed space: a B diagram cannot have a skeleton");
    if (d.space == Space::A && !d.legs.empty())
        invalid("mixed space: legs and skeleton both present");
    if (d.free_loops < 0)
        invalid("free_loops must be non-negative");
    std::vector<int> seen(n, 0);
    auto use = [&](int h) {
        if (h < 0 || h >= n)
            invalid("dangling half-edge " + std::to_string(h));
        if (seen[h]++)
            invalid("half-edge reused: " + std::to_string(h));
    };
    for (const auto& t : d.internal)
        for (int h : t)
            use(h);
    for (int h : d.legs)
        use(h);
    for (int h : d.skeleton)
        use(h);
    for (int h = 0; h < n; ++h) {
        if (!seen[h])
            invalid("half-edge " + std::to_string(h) + " belongs to no node");
        int p = d.pairing[h];
        if (p < 0 || p >= n)
            invalid("dangling half-edge " + std::to_string(h));
        if (p == h)
            invalid("fixed point in pairing: " + std::to_string(h));
        if (d.pairing[p] != h)
            invalid("pairing is not an involution at " + std::to_string(h));
    }
}

RawDiagram to_raw(const Diagram& d)
{
    RawDiagram raw;
    raw.space = d.space;
    raw.free_loops = d.free_loops;
    for (const auto& t : d.internal)
        raw.internal.push_back({t[0], t[1], t[2]});
    raw.legs.assign(d.legs.begin(), d.legs.end());
    if (d.space == Space::A)
        raw.skeleton = std::vector<long long>(d.skeleton.begin(), d.skeleton.end());
    for (int h = 0; h < d.half_edge_count(); ++h)
        if (h < d.pairing[h])
            raw.pairing.push_back({h, d.pairing[h]});
    return raw;
}

Incidence::Incidence(const Diagram& d) : slot(d.half_edge_count())
{
    for (int i = 0; i < static_cast<int>(d.internal.size()); ++i)
        for (int k = 0; k < 3; ++k)
            slot[d.internal[i][k]] = {Internal, i, k};
    for (int i = 0; i < static_cast<int>(d.legs.size()); ++i)
        slot[d.legs[i]] = {Leg, i, 0};
    for (int i = 0; i < static_cast<int>(d.skeleton.size()); ++i)
        slot[d.skeleton[i]] = {External, i, 0};
}

Diagram empty_diagram()
{
    return Diagram{};
}

Diagram bare_circle()
{
    Diagram d;
    d.space = Space::A;
    return d;
}

Diagram strut()
{
    Diagram d;
    d.legs = {0, 1};
    d.pairing = {1, 0};
    return d;
}

Diagram theta()
{
    Diagram d;
    d.internal = {{0, 1, 2}, {3, 4, 5}};
    d.pairing = {3, 4, 5, 0, 1, 2};
    return d;
}

Diagram one_chord()
{
    Diagram d;
    d.space = Space::A;
    d.skeleton = {0, 1};
    d.pairing = {1, 0};
    return d;
}

Diagram free_loop()
{
    Diagram d;
    d.free_loops = 1;
    return d;
}

Diagram juxtapose(const Diagram& a, const Diagram& b)
{
    if (a.space != b.space)
        throw Error(ErrorCode::SpaceMismatch, "cannot join diagrams from different spaces");
    const int off = a.half_edge_count();
    Diagram d = a;
    d.free_loops += b.free_loops;
    for (const auto& t : b.internal)
        d.internal.push_back({t[0] + off, t[1] + off, t[2] + off});
    for (int h : b.legs)
        d.legs.push_back(h + off);
    for (int h : b.skeleton)
        d.skeleton.push_back(h + off);
    for (int p : b.pairing)
        d.pairing.push_back(p + off);
    return d;
}

Diagram reverse_vertex(const Diagram& d, int vertex)
{
    Diagram r = d;
    std::swap(r.internal.at(vertex)[1], r.internal.at(vertex)[2]);
    return r;
}

Diagram relabel(const Diagram& d, const std::vector<int>& perm)
{
    Diagram r;
    r.space = d.space;
    r.free_loops = d.free_loops;
    for (const auto& t : d.internal)
        r.internal.push_back({perm[t[0]], perm[t[1]], perm[t[2]]});
    for (int h : d.legs)
        r.legs.push_back(perm[h]);
    for (int h : d.skeleton)
        r.skeleton.push_back(perm[h]);
    r.pairing.assign(d.pairing.size(), -1);
    for (int h = 0; h < d.half_edge_count(); ++h)
        r.pairing[perm[h]] = perm[d.pairing[h]];
    return r;
}

Diagram compact(const Diagram& d, const std::vector<bool>& dead)
{
    std::vector<int> id(d.half_edge_count(), -1);
    int next = 0;
    for (int h = 0; h < d.half_edge_count(); ++h)
        if (!dead[h])
            id[h] = next++;
    Diagram r;
    r.space = d.space;
    r.free_loops = d.free_loops;
    for (const auto& t : d.internal)
        r.internal.push_back({id[t[0]], id[t[1]], id[t[2]]});
    for (int h : d.legs)
        if (!dead[h])
            r.legs.push_back(id[h]);
    for (int h : d.skeleton)
        if (!dead[h])
            r.skeleton.push_back(id[h]);
    r.pairing.resize(next);
    for (int h = 0; h < d.half_edge_count(); ++h)
        if (!dead[h])
            r.pairing[id[h]] = id[d.pairing[h]];
    return r;
}

Diagram glue_legs(const Diagram& d, const std::vector<std::pair<int, int>>& leg_pairs)
{
    Diagram r = d;
    std::vector<bool> dead(d.half_edge_count(), false);
    for (auto [x, y] : leg_pairs) {
        if (dead[x] || dead[y] || x == y)
            throw Error(ErrorCode::InvalidArgument, "leg glued twice");
        int px = r.pairing[x];
        int py = r.pairing[y];
        if (px == y) {
            ++r.free_loops;
        } else {
            r.pairing[px] = py;
            r.pairing[py] = px;
        }
        dead[x] = dead[y] = true;
    }
    return compact(r, dead);
}

} // namespace jacobi
