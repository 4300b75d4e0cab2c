#pragma once

#include <gmpxx.h>

#include <string>

namespace hypercover {

/// Exact rational with arbitrary-precision numerator and denominator, always
/// canonicalized (gcd 1, positive denominator).
using Rational = mpq_class;

/// "num/den"; integers render as "num/1".
std::string to_fraction_string(const Rational& q);

/// Accepts "num/den" or a plain integer. Throws MalformedInput otherwise or
/// on a zero denominator.
Rational parse_rational(const std::string& text);

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace hypercover
