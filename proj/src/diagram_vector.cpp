#include "jacobi/diagram_vector.hpp"

#include "jacobi/canonical.hpp"
#include "jacobi/error.hpp"

namespace jacobi {

DiagramVector DiagramVector::of(const Diagram& d, const Rational& coeff)
{
    DiagramVector v(d.space);
    v.add(d, coeff);
    return v;
}

void DiagramVector::require_space(Space s) const
{
    if (s != space_)
        throw Error(ErrorCode::SpaceMismatch,
                    "cannot mix " + to_string(s) + " diagrams into a " + to_string(space_) + " vector");
}

void DiagramVector::add(const Diagram& d, const Rational& coeff)
{
    require_space(d.space);
    if (coeff == 0)
        return;
    auto c = canonicalize(d);
    if (c.sign == 0)
        return;
    add_canonical(c.diagram, c.sign > 0 ? coeff : Rational(-coeff));
}

void DiagramVector::add_canonical(const Diagram& d, const Rational& coeff)
{
    require_space(d.space);
    if (coeff == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(d, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Rational DiagramVector::coefficient(const Diagram& canonical) const
{
    auto it = terms_.find(canonical);
    return it == terms_.end() ? Rational(0) : it->second;
}

DiagramVector& DiagramVector::operator+=(const DiagramVector& other)
{
    if (other.is_zero())
        return *this;
    if (is_zero())
        space_ = other.space_;
    require_space(other.space_);
    for (const auto& [d, c] : other.terms_)
        add_canonical(d, c);
    return *this;
}

DiagramVector& DiagramVector::operator-=(const DiagramVector& other)
{
    if (other.is_zero())
        return *this;
    if (is_zero())
        space_ = other.space_;
    require_space(other.space_);
    for (const auto& [d, c] : other.terms_)
        add_canonical(d, -c);
    return *this;
}

DiagramVector& DiagramVector::operator*=(const Rational& scalar)
{
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [d, c] : terms_)
        c *= scalar;
    return *this;
}

std::map<Piece, DiagramVector> DiagramVector::by_piece() const
{
    std::map<Piece, DiagramVector> out;
    for (const auto& [d, c] : terms_)
        out.try_emplace(d.piece(), space_).first->second.add_canonical(d, c);
    return out;
}

DiagramVector DiagramVector::truncated(int vmax) const
{
    DiagramVector out(space_);
    for (const auto& [d, c] : terms_)
        if (static_cast<int>(d.internal.size()) <= vmax)
            out.add_canonical(d, c);
    return out;
}

} // namespace jacobi
