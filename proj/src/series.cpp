#include "jacobi/series.hpp"

#include "jacobi/error.hpp"

namespace jacobi {

PowerSeries PowerSeries::derivative() const
{
    PowerSeries d(order());
    for (int k = 1; k < order(); ++k)
        d[k - 1] = c_[k] * k;
    return d;
}

PowerSeries PowerSeries::integral() const
{
    PowerSeries s(order());
    for (int k = 0; k + 1 < order(); ++k)
        s[k + 1] = c_[k] / (k + 1);
    return s;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b)
{
    const int n = std::min(a.order(), b.order());
    PowerSeries r(n);
    for (int i = 0; i < n; ++i) {
        if (a[i] == 0)
            continue;
        for (int j = 0; i + j < n; ++j)
            r[i + j] += a[i] * b[j];
    }
    return r;
}

PowerSeries operator/(const PowerSeries& a, const PowerSeries& b)
{
    if (b[0] == 0)
        throw Error(ErrorCode::InvalidArgument, "series division by a series without constant term");
    const int n = std::min(a.order(), b.order());
    PowerSeries q(n);
    for (int k = 0; k < n; ++k) {
        Rational acc = a[k];
        for (int j = 1; j <= k; ++j)
            acc -= b[j] * q[k - j];
        q[k] = acc / b[0];
    }
    return q;
}

PowerSeries log(const PowerSeries& s)
{
    if (s[0] != 1)
        throw Error(ErrorCode::InvalidArgument, "log needs constant term 1");
    return (s.derivative() / s).integral();
}

PowerSeries sinhc_half(int order)
{
    PowerSeries s(order);
    mpz_class four_k = 1;
    for (int k = 0; 2 * k < order; ++k) {
        s[2 * k] = Rational(1) / (Rational(four_k) * factorial(2 * k + 1));
        four_k *= 4;
    }
    return s;
}

Rational bernoulli_coeff(int i)
{
    if (i < 1)
        throw Error(ErrorCode::InvalidArgument, "bernoulli_coeff needs i >= 1");
    PowerSeries l = log(sinhc_half(2 * i + 2));
    return l[2 * i] / 2;
}

} // namespace jacobi
