#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace hampack {

/// Exact arbitrary-precision rational. Every threshold that the definitions
/// state as a real number (nu*n, tau*n, the E1-E4 windows) is evaluated with
/// this type so verdicts never depend on floating-point rounding.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Parses "a/b", "-a/b", integers and finite decimals ("0.05", "-1.5e-2" is
/// not accepted). Throws InputError on malformed text or zero denominators.
Rational parse_rational(std::string_view text);

std::int64_t floor_to_int(const Rational& x);
std::int64_t ceil_to_int(const Rational& x);
double to_double(const Rational& x);

/// "a/b" in lowest terms, or "a" when the denominator is 1.
std::string to_string(const Rational& x);

/// Sign (-1, 0, +1) of a + b*sqrt(q) for rational a, b and q >= 0, decided
/// exactly by comparing squares.
int sign_with_root(const Rational& a, const Rational& b, const Rational& q);

/// Integer square root: largest s with s*s <= x, for x >= 0.
std::int64_t isqrt(std::int64_t x);

}  // namespace hampack
