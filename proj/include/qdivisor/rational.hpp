#pragma once

// Exact scalar types shared by every module.

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qdivisor {

using Integer = mpz_class;
using Rational = mpq_class;

/// binom(n, k) with the convention binom(n, k) = 0 when k < 0, k > n or n < 0.
Integer binomial(long n, long k);

Integer factorial(long n);

/// Canonicalized num/den.
Rational ratio(const Integer &num, const Integer &den);

Rational power(const Rational &base, long exponent);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational &value);

/// Accepts "p", "p/q" and a leading sign; throws std::invalid_argument otherwise.
Rational parse_rational(std::string_view text);

inline bool is_integer(const Rational &value) { return value.get_den() == 1; }

} // namespace qdivisor
