#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

#include "nsmm/errors.hpp"

namespace nsmm {

using Rational = mpq_class;
using Integer = mpz_class;

/// n/d in lowest terms. Use instead of the two-argument mpq_class
/// constructor, which does not canonicalize.
inline Rational frac(long n, long d) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

/// Parses "p", "-p", "p/q" (no decimals, no whitespace inside). Result is canonicalized.
Rational parse_rational(std::string_view text);

/// Canonical "num/den" text; integers print without a denominator.
std::string to_string(const Rational& q);

/// Always "num/den", even for integers (used by the JSON surfaces).
std::string to_fraction_string(const Rational& q);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// True when 2q is an integer and q is not (i.e. q in 1/2 + Z).
inline bool is_half_odd(const Rational& q) { return q.get_den() == 2; }

/// Generalized binomial coefficient C(r, j) for rational r and j >= 0.
Rational binomial(const Rational& r, int j);

/// q^e for integer e (q != 0 when e < 0).
Rational pow(const Rational& q, int e);

Rational abs(const Rational& q);

}  // namespace nsmm
