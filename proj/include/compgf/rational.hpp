#pragma once

#include <gmpxx.h>

#include <string>

namespace compgf {

// All coefficients and weights are exact rationals, all counts exact
// integers. gmpxx keeps mpq_class canonical (lowest terms, positive
// denominator) through arithmetic, which is the representation the file
// formats require.
using Rational = mpq_class;
using Integer = mpz_class;

// num/den, reduced. The two-argument mpq_class constructor does not
// canonicalize, so use this instead.
Rational make_ratio(const Integer& num, const Integer& den);

// Accepts "p", "-p" or "p/q" with decimal p, q and q != 0. Throws
// std::invalid_argument otherwise.
Rational parse_rational(const std::string& text);

// "p/q" in lowest terms with q > 0, or plain "p" when q == 1.
std::string format_rational(const Rational& value);

// Nonnegative decimal integer.
Integer parse_count(const std::string& text);

Integer factorial(unsigned long n);
Integer binomial(unsigned long n, unsigned long k);

inline bool is_integer(const Rational& value) { return value.get_den() == 1; }

}  // namespace compgf
