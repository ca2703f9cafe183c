#pragma once

#include <optional>
#include <vector>

#include "bezout/polyring.hpp"

namespace bezout {

// Dense row-major matrix of polynomials over one VarTable.
class RingMatrix {
 public:
  RingMatrix(VarTablePtr vars, std::size_t rows, std::size_t cols);
  static RingMatrix from_rationals(VarTablePtr vars, const std::vector<std::vector<Rational>>& rows);
  static RingMatrix from_rows(VarTablePtr vars, const std::vector<std::vector<MultiPoly>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const VarTablePtr& vars() const { return vars_; }
  bool square() const { return rows_ == cols_; }

  MultiPoly& at(std::size_t r, std::size_t c) { return entries_.at(r * cols_ + c); }
  const MultiPoly& at(std::size_t r, std::size_t c) const { return entries_.at(r * cols_ + c); }

  bool all_constant() const;
  RingMatrix transpose() const;
  void swap_rows(std::size_t a, std::size_t b);
  RingMatrix without_column(std::size_t c) const;
  RingMatrix with_row(const std::vector<MultiPoly>& row) const;

  bool operator==(const RingMatrix& o) const;

 private:
  VarTablePtr vars_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<MultiPoly> entries_;
};

struct LinearSolveResult {
  std::vector<MultiPoly> values;  // numerators, one per unknown
  MultiPoly denominator;          // coefficient of t; equals det(coeffs)
  bool solvable = false;
};

// Inductive letter-insertion rule: each new letter is placed at every position of
// every existing signed word, the sign flipping per displacement. Rejects n > 8.
MultiPoly det_permutation_rule(const RingMatrix& m);

// Bareiss elimination with exact polynomial division and row-swap pivoting.
MultiPoly det_fraction_free(const RingMatrix& m);

// Row-by-row expansion with shared partial minors (one per column subset).
// Division free; cost ~ 2^n * n polynomial products.
MultiPoly det_expand_lines(const RingMatrix& m);

// Chooses a strategy by size and entry shape; value equals every other det.
MultiPoly determinant(const RingMatrix& m);

// Solves coeffs * x = constants. The constants enter as the column of the
// fictitious unknown t; the final line holds the letters x1..xn, t.
LinearSolveResult lines_rule_solve(const RingMatrix& coeffs, const std::vector<MultiPoly>& constants);

MultiPoly homogeneous_condition(const RingMatrix& coeffs);

// Kernel vector of a constant matrix; nullopt when the kernel is trivial.
std::optional<std::vector<Rational>> nullspace_vector(const RingMatrix& coeffs);

// Rational row echelon helpers for constant matrices.
Rational det_rational(std::vector<std::vector<Rational>> a);
std::size_t rank_rational(std::vector<std::vector<Rational>> a);
std::vector<std::vector<Rational>> to_rationals(const RingMatrix& m);

}  // namespace bezout
