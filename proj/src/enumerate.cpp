#include "jacobi/enumerate.hpp"

#include "jacobi/canonical.hpp"
#include "jacobi/error.hpp"

#include <set>

namespace jacobi {

namespace {

// Generates labeled stub matchings up to two obvious symmetries: the free
// stubs of one internal vertex are interchangeable, and so are all internal
// vertices not yet touched (which therefore get touched in index order). Legs
// are an anonymous pool. Everything else is left to canonicalization.
class StubMatcher {
public:
    StubMatcher(Space space, Grading g, const EnumerationLimits& limits)
        : space_(space), g_(g), limits_(limits), stubs_(g.e + 3 * g.v),
          pairing_(stubs_ + g.l, -1)
    {
    }

    std::vector<Diagram> run()
    {
        recurse();
        return {found_.begin(), found_.end()};
    }

private:
    int vertex_of(int stub) const { return stub < g_.e ? -1 : (stub - g_.e) / 3; }

    void link(int a, int b)
    {
        pairing_[a] = b;
        pairing_[b] = a;
    }
    void unlink(int a, int b) { pairing_[a] = pairing_[b] = -1; }

    int first_free_stub(int vertex, int skip) const
    {
        for (int k = 0; k < 3; ++k) {
            int t = g_.e + 3 * vertex + k;
            if (t != skip && pairing_[t] < 0)
                return t;
        }
        return -1;
    }

    void recurse()
    {
        int s = 0;
        while (s < stubs_ && pairing_[s] >= 0)
            ++s;
        if (s == stubs_) {
            emit();
            return;
        }
        const int vs = vertex_of(s);
        const bool opens = vs >= 0 && vs == touched_;
        if (opens)
            ++touched_;

        if (legs_used_ < g_.l) {
            int leg = stubs_ + legs_used_++;
            link(s, leg);
            recurse();
            unlink(s, leg);
            --legs_used_;
        }
        if (vs < 0) {
            for (int t = s + 1; t < g_.e; ++t) {
                if (pairing_[t] >= 0)
                    continue;
                link(s, t);
                recurse();
                unlink(s, t);
            }
        }
        for (int k = 0; k < touched_; ++k) {
            int t = first_free_stub(k, s);
            if (t < 0)
                continue;
            link(s, t);
            recurse();
            unlink(s, t);
        }
        if (touched_ < g_.v) {
            int t = g_.e + 3 * touched_++;
            link(s, t);
            recurse();
            unlink(s, t);
            --touched_;
        }
        if (opens)
            --touched_;
    }

    void emit()
    {
        const int remaining = g_.l - legs_used_;
        if (remaining % 2 != 0)
            return;
        if (++visited_ > limits_.max_labeled)
            throw Error(ErrorCode::ResourceLimit, "enumeration exceeded the labeled-structure limit");
        Diagram d;
        d.space = space_;
        for (int i = 0; i < g_.e; ++i)
            d.skeleton.push_back(i);
        for (int k = 0; k < g_.v; ++k)
            d.internal.push_back({g_.e + 3 * k, g_.e + 3 * k + 1, g_.e + 3 * k + 2});
        for (int j = 0; j < g_.l; ++j)
            d.legs.push_back(stubs_ + j);
        d.pairing = pairing_;
        for (int j = legs_used_; j < g_.l; j += 2) {
            d.pairing[stubs_ + j] = stubs_ + j + 1;
            d.pairing[stubs_ + j + 1] = stubs_ + j;
        }
        auto c = canonicalize(d);
        if (c.sign != 0)
            found_.insert(std::move(c.diagram));
    }

    Space space_;
    Grading g_;
    EnumerationLimits limits_;
    int stubs_;
    std::vector<int> pairing_;
    int legs_used_ = 0;
    int touched_ = 0;
    std::size_t visited_ = 0;
    std::set<Diagram, DiagramLess> found_;
};

} // namespace

std::vector<Diagram> enumerate_diagrams(Space space, Grading g, const EnumerationLimits& limits)
{
    if (g.v < 0 || g.l < 0 || g.e < 0)
        throw Error(ErrorCode::InvalidArgument, "negative grading");
    if (space == Space::A && g.l != 0)
        throw Error(ErrorCode::InvalidArgument, "A diagrams have no legs");
    if (space == Space::B && g.e != 0)
        throw Error(ErrorCode::InvalidArgument, "B diagrams have no external vertices");
    const int half_edges = 3 * g.v + g.l + g.e;
    if (half_edges % 2 != 0)
        return {};
    if (half_edges > limits.max_half_edges)
        throw Error(ErrorCode::ResourceLimit, "grading too large for exhaustive enumeration");
    return StubMatcher(space, g, limits).run();
}

std::vector<Grading> gradings_of(const Piece& piece)
{
    std::vector<Grading> out;
    if (piece.space == Space::B) {
        Grading g{piece.total - piece.legs, piece.legs, 0};
        if (g.v >= 0 && (3 * g.v + g.l) % 2 == 0)
            out.push_back(g);
        return out;
    }
    for (int v = 0; v <= piece.total; ++v) {
        Grading g{v, 0, piece.total - v};
        if ((3 * g.v + g.e) % 2 == 0)
            out.push_back(g);
    }
    return out;
}

std::vector<Diagram> enumerate_piece(const Piece& piece, const EnumerationLimits& limits)
{
    std::vector<Diagram> out;
    for (const auto& g : gradings_of(piece)) {
        auto part = enumerate_diagrams(piece.space, g, limits);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

} // namespace jacobi
