#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace bsw {

// Exact rational in lowest terms with positive denominator. Arithmetic
// results of mpq_class are canonical; values built from a raw numerator and
// denominator go through make_rational.
using Rational = mpq_class;
using BigInt = mpz_class;

Rational make_rational(long num, long den = 1);
Rational make_rational(const BigInt& num, const BigInt& den);

/// Parses `n` or `n/d` (optional leading sign, d > 0). Throws ParseError.
Rational parse_rational(std::string_view text);

/// `n` when the denominator is 1, otherwise `n/d`.
std::string to_string(const Rational& q);

/// Decimal rendering rounded half away from zero to `places` digits.
std::string to_decimal(const Rational& q, int places = 6);

BigInt factorial(unsigned n);

}  // namespace bsw
