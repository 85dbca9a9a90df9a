#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace jacobi {

/// A: diagrams on a preferred oriented circle. B: unitrivalent diagrams.
enum class Space : std::uint8_t { A, B };

std::string to_string(Space space);

/// Vertex counts of a diagram. The total vertex count is the grading used
/// throughout; it is twice the degree found in most of the literature.
struct Grading {
    int v = 0; ///< internal trivalent vertices
    int l = 0; ///< legs (B only)
    int e = 0; ///< external vertices on the circle (A only)

    int total() const { return v + l + e; }
    friend auto operator<=>(const Grading&, const Grading&) = default;
};

/// A graded piece on which quotients are computed. B pieces are bigraded by
/// (v, l); A pieces by total vertex count only, because STU trades an
/// internal vertex for an external one.
struct Piece {
    Space space = Space::B;
    int total = 0;
    int legs = 0; ///< always 0 for A

    static Piece of_a(int total) { return {Space::A, total, 0}; }
    static Piece of_b(int v, int l) { return {Space::B, v + l, l}; }
    int internal() const { return space == Space::B ? total - legs : -1; }
    friend auto operator<=>(const Piece&, const Piece&) = default;
};

std::string to_string(const Piece& piece);

/// Raw, unchecked description as it appears on the wire. Half-edge ids may
/// be any non-negative integers.
struct RawDiagram {
    Space space = Space::B;
    std::vector<std::array<long long, 3>> internal;
    std::vector<long long> legs;
    std::optional<std::vector<long long>> skeleton;
    std::vector<std::array<long long, 2>> pairing;
    long long free_loops = 0;
};

/// Vertex-oriented Jacobi diagram.
///
/// Half-edges are the dense ids 0..H-1. Every half-edge belongs to exactly
/// one node: an internal vertex (listed with its cyclic order), a leg, or an
/// external vertex on the circle (listed in circle order). `pairing` is a
/// fixed-point-free involution; each of its orbits is an edge. Values of this
/// type are normally produced by `validate` or by library operations, all of
/// which preserve these invariants.
struct Diagram {
    Space space = Space::B;
    std::vector<std::array<int, 3>> internal;
    std::vector<int> legs;
    std::vector<int> skeleton;
    std::vector<int> pairing;
    int free_loops = 0;

    int half_edge_count() const { return static_cast<int>(pairing.size()); }
    Grading grading() const
    {
        return {static_cast<int>(internal.size()), static_cast<int>(legs.size()),
                static_cast<int>(skeleton.size())};
    }
    Piece piece() const
    {
        auto g = grading();
        return space == Space::A ? Piece::of_a(g.total()) : Piece::of_b(g.v, g.l);
    }

    friend bool operator==(const Diagram&, const Diagram&) = default;
};

/// Deterministic total order: grading first, then structure.
struct DiagramLess {
    bool operator()(const Diagram& a, const Diagram& b) const;
};

/// Checks a raw description and compacts its ids (preserving their relative
/// order). Throws Error(InvalidDiagram) naming the violated rule.
Diagram validate(const RawDiagram& raw);

/// Re-checks the invariants of an already dense diagram.
void check(const Diagram& d);

RawDiagram to_raw(const Diagram& d);

/// Which node a half-edge belongs to.
struct Incidence {
    enum Kind : std::uint8_t { Internal, Leg, External };
    struct Slot {
        Kind kind;
        int node;     ///< index into internal / legs / skeleton
        int position; ///< 0..2 inside an internal triple, else 0
    };
    std::vector<Slot> slot;

    explicit Incidence(const Diagram& d);
};

// Elementary diagrams.

Diagram empty_diagram();  ///< unit of B
Diagram bare_circle();    ///< unit of A
Diagram strut();          ///< B^{0,2}
Diagram theta();          ///< B^{2,0}, two vertices joined by three edges
Diagram one_chord();      ///< A, e = 2
Diagram free_loop();      ///< B^{0,0} vertex-free circle

/// Disjoint union of two diagrams of the same space. For A both circles are
/// cut open at their first external vertex and joined, i.e. the connected sum
/// at that point.
Diagram juxtapose(const Diagram& a, const Diagram& b);

/// Reverses the cyclic order at one internal vertex.
Diagram reverse_vertex(const Diagram& d, int vertex);

/// Renames half-edges by `perm` (old id -> new id). Node lists keep their
/// order, so orientations are preserved.
Diagram relabel(const Diagram& d, const std::vector<int>& perm);

/// Removes `dead` half-edges (which must not be referenced by any node or
/// pairing entry) and renumbers densely.
Diagram compact(const Diagram& d, const std::vector<bool>& dead);

/// Joins the listed leg pairs into edges. A pair of legs that are the two ends
/// of one strut becomes a free loop.
Diagram glue_legs(const Diagram& d, const std::vector<std::pair<int, int>>& leg_pairs);

} // namespace jacobi
