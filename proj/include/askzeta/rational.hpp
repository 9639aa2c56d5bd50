#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace askzeta {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact power base^exp for exp >= 0.
BigInt big_pow(const BigInt& base, unsigned exp);

/// q^k for any integer k (q must be nonzero when k < 0).
Rational rational_pow(const Rational& q, long long k);

/// Canonical "num/den" form; the denominator is always written, "3/1" included.
std::string to_fraction_string(const Rational& r);

/// Accepts "a/b", "a" and surrounding whitespace. Throws std::invalid_argument.
Rational parse_fraction(std::string_view text);

}  // namespace askzeta
