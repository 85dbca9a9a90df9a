#include "jacobi/relations.hpp"

#include "jacobi/error.hpp"

#include <set>

namespace jacobi {

namespace {

std::array<int, 3> rotated_to(const std::array<int, 3>& t, int h)
{
    int k = t[0] == h ? 0 : (t[1] == h ? 1 : 2);
    return {t[k], t[(k + 1) % 3], t[(k + 2) % 3]};
}

bool vector_less(const DiagramVector& a, const DiagramVector& b)
{
    DiagramLess less;
    auto ia = a.begin(), ib = b.begin();
    for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
        if (less(ia->first, ib->first))
            return true;
        if (less(ib->first, ia->first))
            return false;
        if (ia->second != ib->second)
            return ia->second < ib->second;
    }
    return ia == a.end() && ib != b.end();
}

struct Collector {
    std::set<DiagramVector, decltype(&vector_less)> seen{&vector_less};

    void add(DiagramVector r)
    {
        if (r.is_zero())
            return;
        r *= 1 / r.begin()->second;
        seen.insert(std::move(r));
    }

    std::vector<DiagramVector> take() { return {seen.begin(), seen.end()}; }
};

} // namespace

DiagramVector ihx_at(const Diagram& d, int half_edge)
{
    const Incidence inc(d);
    const int h = half_edge, hp = d.pairing[h];
    const auto su = inc.slot[h], sv = inc.slot[hp];
    if (su.kind != Incidence::Internal || sv.kind != Incidence::Internal || su.node == sv.node)
        throw Error(ErrorCode::InvalidArgument, "IHX needs an edge between two distinct internal vertices");
    const auto u = rotated_to(d.internal[su.node], h);
    const auto v = rotated_to(d.internal[sv.node], hp);
    const int a = u[1], b = u[2], c = v[1], e = v[2];

    DiagramVector out(d.space);
    auto term = [&](int x, int y, int z, int w) {
        Diagram t = d;
        t.internal[su.node] = {h, x, y};
        t.internal[sv.node] = {hp, z, w};
        out.add(t, 1);
    };
    term(a, b, c, e);
    term(b, c, a, e);
    term(c, a, b, e);
    return out;
}

DiagramVector stu_at(const Diagram& d, int half_edge)
{
    const Incidence inc(d);
    const int h = half_edge, s = d.pairing[h];
    const auto su = inc.slot[h], ss = inc.slot[s];
    if (su.kind != Incidence::Internal || ss.kind != Incidence::External)
        throw Error(ErrorCode::InvalidArgument, "STU needs an internal half-edge paired with the circle");
    const auto u = rotated_to(d.internal[su.node], h);
    const int a = u[1], b = u[2];

    auto resolve = [&](int first, int second) {
        Diagram t = d;
        t.internal.erase(t.internal.begin() + su.node);
        t.skeleton.clear();
        for (int x : d.skeleton) {
            if (x == s) {
                t.skeleton.push_back(first);
                t.skeleton.push_back(second);
            } else {
                t.skeleton.push_back(x);
            }
        }
        std::vector<bool> dead(d.half_edge_count(), false);
        dead[h] = dead[s] = true;
        return compact(t, dead);
    };

    DiagramVector out(Space::A);
    out.add(d, 1);
    out.add(resolve(a, b), -1);
    out.add(resolve(b, a), 1);
    return out;
}

DiagramVector stu_merging(const Diagram& d, int position)
{
    const int e = static_cast<int>(d.skeleton.size());
    if (d.space != Space::A || e < 2)
        throw Error(ErrorCode::InvalidArgument, "merging needs two external vertices");
    const int s1 = d.skeleton[position % e];
    const int s2 = d.skeleton[(position + 1) % e];
    Diagram merged = d;
    const int h = d.half_edge_count(), s = h + 1;
    merged.pairing.push_back(s);
    merged.pairing.push_back(h);
    merged.internal.push_back({h, s1, s2});
    merged.skeleton.clear();
    for (int x : d.skeleton) {
        if (x == s1)
            merged.skeleton.push_back(s);
        else if (x != s2)
            merged.skeleton.push_back(x);
    }
    return stu_at(merged, h);
}

RelationSet generate_ihx(Space space, Grading g, const EnumerationLimits& limits)
{
    Collector rel;
    for (const auto& d : enumerate_diagrams(space, g, limits)) {
        const Incidence inc(d);
        for (int h = 0; h < d.half_edge_count(); ++h) {
            const int p = d.pairing[h];
            if (h > p)
                continue;
            const auto a = inc.slot[h], b = inc.slot[p];
            if (a.kind == Incidence::Internal && b.kind == Incidence::Internal && a.node != b.node)
                rel.add(ihx_at(d, h));
        }
    }
    Piece piece = space == Space::A ? Piece::of_a(g.total()) : Piece::of_b(g.v, g.l);
    return {piece, rel.take()};
}

RelationSet generate_stu(Grading g, const EnumerationLimits& limits)
{
    Collector rel;
    for (const auto& d : enumerate_diagrams(Space::A, g, limits)) {
        const Incidence inc(d);
        for (const auto& t : d.internal)
            for (int h : t)
                if (inc.slot[d.pairing[h]].kind == Incidence::External)
                    rel.add(stu_at(d, h));
        if (d.skeleton.size() >= 2)
            for (int i = 0; i < static_cast<int>(d.skeleton.size()); ++i)
                rel.add(stu_merging(d, i));
    }
    return {Piece::of_a(g.total()), rel.take()};
}

RelationSet generate_relations(const Piece& piece, const EnumerationLimits& limits)
{
    Collector rel;
    for (const auto& g : gradings_of(piece)) {
        for (auto& r : generate_ihx(piece.space, g, limits).generators)
            rel.add(std::move(r));
        if (piece.space == Space::A)
            for (auto& r : generate_stu(g, limits).generators)
                rel.add(std::move(r));
    }
    return {piece, rel.take()};
}

} // namespace jacobi
