#pragma once

#include <gmpxx.h>

#include <string>

namespace mfring::exactnum {

/// Exact arbitrary-precision rational; always kept in lowest terms with a
/// positive denominator (GMP canonical form).
using Rational = mpq_class;
using Integer = mpz_class;

/// Builds a canonical rational from an integer pair. Throws on zero
/// denominator.
Rational rat(long num, long den = 1);
Rational rat(const Integer& num, const Integer& den);

Integer factorial(unsigned long n);
Integer binomial(unsigned long n, unsigned long k);

/// Canonical decimal string: "p" when the denominator is 1, else "p/q".
std::string to_string(const Rational& r);

bool is_integer(const Rational& r);

}  // namespace mfring::exactnum
