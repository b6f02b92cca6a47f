#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace extactic {

// Exact arithmetic substrate.  mpq_class already maintains the invariants we
// need (denominator > 0, gcd(|num|, den) = 1 after every canonicalized op).
using Int = mpz_class;
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) { return Rational(num, den); }

inline int sign(const Rational& q) { return sgn(q); }

inline Rational rat_abs(const Rational& q) { return abs(q); }

Rational rat_pow(const Rational& base, long exp);

// Parses "a", "-a", "a/b" with arbitrary-precision integers.
Rational rat_from_string(const std::string& text);

std::string rat_to_string(const Rational& q);

// gcd of numerators over lcm of denominators, used for content extraction.
Rational rat_gcd(const Rational& a, const Rational& b);

} // namespace extactic
