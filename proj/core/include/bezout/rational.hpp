#pragma once

#include <gmpxx.h>

#include <string>

namespace bezout {

using Integer = mpz_class;
using Rational = mpq_class;

// Parses "n" or "n/d"; the result is canonical.
Rational parse_rational(const std::string& text);

// "num/den", always with an explicit denominator.
std::string to_fraction_string(const Rational& q);

// "n" for integers, otherwise "n/d".
std::string to_short_string(const Rational& q);

Integer binomial(long n, long k);

}  // namespace bezout
