#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace toa {

/// Exact rational number in canonical form (gcd 1, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "-p", "p/q" (optionally surrounded by whitespace) and
/// canonicalizes. Throws PreconditionError on malformed text or zero
/// denominator.
Rational parse_rational(std::string_view text);

/// Exact conversion of a finite double (its binary value, not its decimal
/// rendering).
Rational rational_from_double(double x);

std::string to_string(const Rational& r);

inline double to_double(const Rational& r) { return r.get_d(); }

Rational factorial(unsigned n);

/// (2k-1)!! with (-1)!! = 1.
Rational double_factorial_odd(int k);

Rational binomial(unsigned n, unsigned k);

}  // namespace toa
