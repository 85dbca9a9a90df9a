#pragma once

#include "jacobi/rational.hpp"

#include <vector>

namespace jacobi {

/// Truncated formal power series in one variable with exact coefficients;
/// coefficient k is the coefficient of y^k, all operations keep `order` terms.
class PowerSeries {
public:
    explicit PowerSeries(int order) : c_(order) {}
    PowerSeries(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {}

    int order() const { return static_cast<int>(c_.size()); }
    Rational& operator[](int k) { return c_[k]; }
    const Rational& operator[](int k) const { return c_[k]; }

    PowerSeries derivative() const;
    /// Antiderivative with zero constant term.
    PowerSeries integral() const;

    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
    /// Requires b[0] != 0.
    friend PowerSeries operator/(const PowerSeries& a, const PowerSeries& b);

private:
    std::vector<Rational> c_;
};

/// log(s) for s[0] == 1, as the integral of s'/s.
PowerSeries log(const PowerSeries& s);

/// sinh(y/2) / (y/2) = sum_k y^(2k) / (4^k (2k+1)!).
PowerSeries sinhc_half(int order);

/// Coefficient of y^(2i) in (1/2) log(sinh(y/2) / (y/2)), i >= 1: the weight
/// of the 2i-wheel in the wheels element. b_2 = 1/48, b_4 = -1/5760.
Rational bernoulli_coeff(int i);

} // namespace jacobi
