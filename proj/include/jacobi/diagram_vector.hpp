#pragma once

#include "jacobi/diagram.hpp"
#include "jacobi/rational.hpp"

#include <map>

namespace jacobi {

/// Finite rational combination of canonical diagrams from one space.
///
/// Keys are always canonical; the sign from canonicalization is folded into
/// the coefficient on insertion, antisymmetry-zero diagrams are dropped and
/// zero coefficients are never stored.
class DiagramVector {
public:
    using Terms = std::map<Diagram, Rational, DiagramLess>;

    explicit DiagramVector(Space space = Space::B) : space_(space) {}

    /// `coeff` times the class of `d`.
    static DiagramVector of(const Diagram& d, const Rational& coeff = 1);

    Space space() const { return space_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Terms::const_iterator begin() const { return terms_.begin(); }
    Terms::const_iterator end() const { return terms_.end(); }

    void add(const Diagram& d, const Rational& coeff);
    /// As add(), for a diagram known to be canonical with sign +1.
    void add_canonical(const Diagram& d, const Rational& coeff);

    Rational coefficient(const Diagram& canonical) const;

    DiagramVector& operator+=(const DiagramVector& other);
    DiagramVector& operator-=(const DiagramVector& other);
    DiagramVector& operator*=(const Rational& scalar);

    friend DiagramVector operator+(DiagramVector a, const DiagramVector& b) { return a += b; }
    friend DiagramVector operator-(DiagramVector a, const DiagramVector& b) { return a -= b; }
    friend DiagramVector operator*(const Rational& s, DiagramVector a) { return a *= s; }
    friend bool operator==(const DiagramVector& a, const DiagramVector& b)
    {
        return a.space_ == b.space_ && a.terms_ == b.terms_;
    }

    /// Homogeneous components keyed by the piece each diagram lives in.
    std::map<Piece, DiagramVector> by_piece() const;

    /// Terms whose internal-vertex count is at most vmax.
    DiagramVector truncated(int vmax) const;

private:
    void require_space(Space s) const;

    Space space_;
    Terms terms_;
};

} // namespace jacobi
