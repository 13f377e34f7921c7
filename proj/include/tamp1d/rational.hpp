#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace tamp1d {

/// Exact rational scalar used for every coordinate and function value.
using Rational = mpq_class;

/// Parses "p/q", an integer, or a decimal such as "-0.125" or "3.5e-2".
/// Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

/// Canonical text: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

double to_double(const Rational& value);

Rational pow(const Rational& base, unsigned exponent);

/// Greatest rational g such that a/g and b/g are both integers (a, b > 0).
Rational rational_gcd(const Rational& a, const Rational& b);

/// Ceiling of a non-negative rational, as an integer-valued Rational.
Rational ceil(const Rational& value);

/// Decimal rendering with a fixed number of significant digits.
std::string format_significant(double value, int digits = 12);

}  // namespace tamp1d
