#pragma once

#include <utility>
#include <vector>

#include "bezout/exactla.hpp"
#include "bezout/polyring.hpp"

namespace bezout {

// Columns: m' shifted copies of f, then m shifted copies of g; rows run over
// powers of the main variable from m+m'-1 down to 0.
struct SylvesterLayout {
  UniView f;
  UniView g;
  RingMatrix matrix;
};

struct BezoutianLayout {
  UniView f;
  UniView g;
  RingMatrix matrix;
  // Row i is g_i*f - f_i*g with f_i, g_i the truncations to i+1 leading terms.
  std::vector<std::pair<MultiPoly, MultiPoly>> row_provenance;
};

struct UnequalBezoutian {
  RingMatrix matrix;
  // det(matrix) = sign * extraneous * resultant(f, g), extraneous = A'^((n-1)(m-n)).
  MultiPoly extraneous;
  int sign = 1;
  // Each row was multiplied by this power of A' while reducing below x^n.
  MultiPoly row_multiplier;
};

struct IdentityWitness {
  UniView L1;
  UniView L2;
};

enum class Agreement { Equal, Different, Skipped };

SylvesterLayout sylvester_matrix(const UniView& f, const UniView& g);
MultiPoly resultant(const UniView& f, const UniView& g);
MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, VarId main);

BezoutianLayout bezoutian_matrix(const UniView& f, const UniView& g);
// det(bezoutian) = bezoutian_sign(m) * resultant for equal degree m.
int bezoutian_sign(unsigned m);

UnequalBezoutian bezoutian_unequal(const UniView& f, const UniView& g);
int bezoutian_unequal_sign(unsigned m, unsigned n);

long degree_bound_two(long m, long m2, long p, long p2);

IdentityWitness bezout_identity(const UniView& P, const UniView& Q);

// Monic gcd of univariate polynomials with rational coefficients.
UniView gcd_euclid(const UniView& P, const UniView& Q);
MultiPoly gcd_euclid(const MultiPoly& P, const MultiPoly& Q, VarId main);

// Compares resultant(f,g) at y = y0 with the Euclid-remainder resultant of the
// specialized pair. Coefficients must involve only y.
Agreement specialization_oracle(const UniView& f, const UniView& g, VarId y, const Rational& y0);

// Resultant of two univariate rational polynomials by the remainder sequence.
Rational euclid_resultant(const UniView& f, const UniView& g);

}  // namespace bezout
