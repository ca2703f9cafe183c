#pragma once

#include <boost/multiprecision/cpp_complex.hpp>
#include <vector>

#include "bezout/polyring.hpp"

namespace bezout {

// Degree-n equation x^n + p x^(n-2) + q x^(n-3) + ... whose roots are
// sums of n-th roots of a^(n-k) b^k, with a + b = e1 and ab = e2.
struct SolvableClass {
  unsigned n = 0;
  Rational p;
  Rational q;
  Rational e1;
  Rational e2;
  std::vector<Rational> coeffsE;  // descending, coeffsE[0] = 1, coeffsE[1] = 0
};

SolvableClass solvable_class(unsigned n, const Rational& p, const Rational& q);

// Same class with a, b symbolic: coefficient of x^(n-k) is -C(n,k) ab h_{k-2}(a,b).
MultiPoly class_equation_symbolic(unsigned n, const MultiPoly& a, const MultiPoly& b, VarId x);

using Complex = boost::multiprecision::cpp_complex_50;
using Real = boost::multiprecision::cpp_bin_float_50;

constexpr unsigned kMaxDigits = 40;

struct RadicalRoot {
  Complex value;
  unsigned branch = 0;  // index j of the n-th root of b paired with the principal root of a
  Real residual;        // |E(x)| / (1 + max |coeff|)
};

// x = sum_{k=1}^{n-1} alpha^(n-k) beta^k with alpha^n = a, beta^n = b.
RadicalRoot radical_root(const SolvableClass& cls, unsigned digits = 12);

struct TwoRadical {
  MultiPoly minpoly;     // monic in x, satisfied by n-th root(a^(n-1)b) + n-th root(a^(n-2)b^2)
  MultiPoly full;        // elimination of u, v without a branch link, degree n^2 in x
  MultiPoly extraneous;  // full / minpoly up to the leading coefficient
};

// a, b are polynomials (or constants) over a table containing x.
TwoRadical two_radical_minpoly(unsigned n, const MultiPoly& a, const MultiPoly& b, VarId x);

// The displayed series x^n = a^(n-1)b ± a^(n-2)b^2 + n a^(n-2)b x + ..., as
// x^n - (right side), for n in {3, 4}.
MultiPoly two_radical_series(unsigned n, const MultiPoly& a, const MultiPoly& b, VarId x);

// Numeric root of the two-radical minimal polynomial with branch search.
RadicalRoot two_radical_root(unsigned n, const Rational& a, const Rational& b, unsigned digits = 12);

std::string to_decimal(const Real& r, unsigned digits);
std::string to_decimal(const Complex& z, unsigned digits);

}  // namespace bezout
