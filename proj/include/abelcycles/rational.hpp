#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace abelcycles {

using BigInt = mpz_class;
using Rational = mpq_class; // always kept in canonical (reduced) form

/// "p/q" with q > 0; integers render as "p/1".
std::string to_string(const Rational &q);
std::string to_string(const BigInt &z);

/// Inverse of to_string; accepts "p/q" or "p". Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

BigInt factorial(std::int64_t n);
/// C(n, k), zero outside 0 <= k <= n.
BigInt binomial(std::int64_t n, std::int64_t k);

/// Decimal rendering with the given number of digits after the point,
/// rounded to nearest.
std::string to_decimal(const Rational &q, int digits = 12);

} // namespace abelcycles
