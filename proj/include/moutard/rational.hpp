#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace moutard {

/// Arbitrary-precision rational, always kept canonical (gcd 1, positive
/// denominator, zero as 0/1).
using BigRational = mpq_class;
using BigInteger = mpz_class;

BigRational make_rational(long num, long den = 1);

/// Parses decimal numerator/denominator strings; throws ParseError on junk or
/// a zero denominator.
BigRational parse_rational(std::string_view num, std::string_view den);

/// Accepts "p", "p/q" or a finite decimal literal like "-0.25".
BigRational parse_rational(std::string_view text);

BigRational abs(const BigRational& q);

/// Round-to-nearest (ties to even) decimal rendering with `digits`
/// significant digits, trailing zeros trimmed, %g-style exponent switch.
std::string to_decimal(const BigRational& q, int digits = 17);

double to_double(const BigRational& q);

std::string to_string(const BigRational& q);

}  // namespace moutard
