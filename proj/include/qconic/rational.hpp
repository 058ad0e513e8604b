#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qconic {

using Integer = mpz_class;
// mpq_class keeps values canonical: lowest terms, positive denominator.
using Rational = mpq_class;

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Parses "p", "-p" or "p/q". Throws InputError on anything else.
Rational parse_rational(std::string_view text);

double to_double(const Rational& q);

/// n/d in lowest terms.
inline Rational frac(long n, long d) { return Rational(n) / Rational(d); }

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

Integer floor_of(const Rational& q);
Integer ceil_of(const Rational& q);

/// Nearest multiple of 2^-bits, rounding down.
Rational round_dyadic(const Rational& q, unsigned bits);

/// Smallest dyadic with denominator 2^bits that is >= sqrt(q), for q >= 0.
Rational sqrt_upper(const Rational& q, unsigned bits);

}  // namespace qconic
