#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace jacobi {

using Rational = mpq_class;

/// Parses "p", "-p" or "p/q". Decimal points and exponents are rejected so
/// that no float ever enters the algebra. The result is canonicalized.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" with q > 1 otherwise.
std::string to_string(const Rational& q);

Rational factorial(int n);

} // namespace jacobi
