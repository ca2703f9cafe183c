#include "bezout/exactla.hpp"

#include <bit>
#include <cstdint>
#include <unordered_map>

#include "bezout/errors.hpp"

namespace bezout {

RingMatrix::RingMatrix(VarTablePtr vars, std::size_t rows, std::size_t cols)
    : vars_(std::move(vars)), rows_(rows), cols_(cols), entries_(rows * cols, MultiPoly(vars_)) {}

RingMatrix RingMatrix::from_rationals(VarTablePtr vars, const std::vector<std::vector<Rational>>& rows) {
  std::size_t c = rows.empty() ? 0 : rows.front().size();
  RingMatrix m(vars, rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw UsageError("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = MultiPoly(vars, rows[i][j]);
  }
  return m;
}

RingMatrix RingMatrix::from_rows(VarTablePtr vars, const std::vector<std::vector<MultiPoly>>& rows) {
  std::size_t c = rows.empty() ? 0 : rows.front().size();
  RingMatrix m(vars, rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw UsageError("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) {
      require_same_vars(m.at(i, j), rows[i][j]);
      m.at(i, j) = rows[i][j];
    }
  }
  return m;
}

bool RingMatrix::all_constant() const {
  for (const auto& e : entries_)
    if (!e.is_constant()) return false;
  return true;
}

RingMatrix RingMatrix::transpose() const {
  RingMatrix t(vars_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

void RingMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
}

RingMatrix RingMatrix::without_column(std::size_t c) const {
  RingMatrix out(vars_, rows_, cols_ - 1);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0, k = 0; j < cols_; ++j)
      if (j != c) out.at(i, k++) = at(i, j);
  return out;
}

RingMatrix RingMatrix::with_row(const std::vector<MultiPoly>& row) const {
  if (row.size() != cols_) throw UsageError("appended row has the wrong length");
  RingMatrix out(vars_, rows_ + 1, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
  for (std::size_t j = 0; j < cols_; ++j) out.at(rows_, j) = row[j];
  return out;
}

bool RingMatrix::operator==(const RingMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
}

namespace {

void require_square(const RingMatrix& m, const char* who) {
  if (!m.square())
    throw UsageError(std::string(who) + ": matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                     ", not square");
}

}  // namespace

std::vector<std::vector<Rational>> to_rationals(const RingMatrix& m) {
  std::vector<std::vector<Rational>> a(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m.at(i, j).constant_value();
  return a;
}

Rational det_rational(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(a[p], a[k]);
      det = -det;
    }
    det *= a[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) continue;
      Rational f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  return det;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(std::vector<std::vector<Rational>>& a) {
  std::vector<std::size_t> pivots;
  if (a.empty()) return pivots;
  const std::size_t rows = a.size(), cols = a.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    Rational inv = 1 / a[r][c];
    for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank_rational(std::vector<std::vector<Rational>> a) { return rref(a).size(); }

MultiPoly det_permutation_rule(const RingMatrix& m) {
  require_square(m, "det_permutation_rule");
  const std::size_t n = m.rows();
  if (n > 8)
    throw SizeGuardExceeded("det_permutation_rule is reference-grade and limited to n <= 8 (got " +
                            std::to_string(n) + "); use det_fraction_free");
  MultiPoly total(m.vars());
  if (n == 0) return MultiPoly(m.vars(), 1);

  struct Word {
    std::vector<std::uint8_t> letters;
    int sign;
  };
  std::vector<Word> words{{{0}, 1}};
  for (std::uint8_t k = 1; k < n; ++k) {
    std::vector<Word> next;
    next.reserve(words.size() * (k + 1));
    for (const auto& w : words) {
      // Start at the end, then walk the new letter leftwards one place at a time.
      int sign = w.sign;
      for (std::size_t pos = w.letters.size() + 1; pos-- > 0;) {
        Word nw{w.letters, sign};
        nw.letters.insert(nw.letters.begin() + static_cast<long>(pos), k);
        next.push_back(std::move(nw));
        sign = -sign;
      }
    }
    words = std::move(next);
  }
  for (const auto& w : words) {
    MultiPoly term(m.vars(), w.sign);
    for (std::size_t row = 0; row < n && !term.is_zero(); ++row) term *= m.at(row, w.letters[row]);
    total += term;
  }
  return total;
}

MultiPoly det_fraction_free(const RingMatrix& input) {
  require_square(input, "det_fraction_free");
  const std::size_t n = input.rows();
  if (n == 0) return MultiPoly(input.vars(), 1);
  RingMatrix a(input);
  MultiPoly prev(a.vars(), 1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t best = n;
    for (std::size_t i = k; i < n; ++i) {
      if (a.at(i, k).is_zero()) continue;
      if (best == n || a.at(i, k).num_terms() < a.at(best, k).num_terms()) best = i;
    }
    if (best == n) return MultiPoly(a.vars());
    if (best != k) {
      a.swap_rows(best, k);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        MultiPoly num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        a.at(i, j) = prev.is_constant() ? num * (1 / prev.constant_value()) : divide_or_throw(num, prev);
      }
      a.at(i, k) = MultiPoly(a.vars());
    }
    prev = a.at(k, k);
  }
  MultiPoly d = a.at(n - 1, n - 1);
  return negate ? -d : d;
}

namespace {

using Layer = std::unordered_map<std::uint32_t, MultiPoly>;

// Partial minors over rows [0, rows) of m, keyed by the set of columns used.
Layer expand_rows(const RingMatrix& m, std::size_t rows) {
  const std::size_t cols = m.cols();
  if (cols > 31) throw SizeGuardExceeded("line expansion limited to 31 columns");
  Layer layer;
  layer.emplace(0u, MultiPoly(m.vars(), 1));
  for (std::size_t r = 0; r < rows; ++r) {
    Layer next;
    for (const auto& [mask, minor] : layer) {
      for (std::size_t j = 0; j < cols; ++j) {
        std::uint32_t bit = 1u << j;
        if (mask & bit) continue;
        const MultiPoly& e = m.at(r, j);
        if (e.is_zero()) continue;
        // Sign = parity of already-used columns to the right of j.
        int above = std::popcount(mask >> (j + 1));
        MultiPoly contrib = e * minor;
        if (above & 1) contrib = -contrib;
        auto [it, inserted] = next.try_emplace(mask | bit, std::move(contrib));
        if (!inserted) {
          it->second += contrib;
        }
      }
    }
    for (auto it = next.begin(); it != next.end();) it = it->second.is_zero() ? next.erase(it) : std::next(it);
    layer = std::move(next);
  }
  return layer;
}

constexpr std::size_t kLinesLimit = 14;

}  // namespace

MultiPoly det_expand_lines(const RingMatrix& m) {
  require_square(m, "det_expand_lines");
  const std::size_t n = m.rows();
  Layer layer = expand_rows(m, n);
  std::uint32_t full = n == 0 ? 0u : static_cast<std::uint32_t>((1ull << n) - 1);
  auto it = layer.find(full);
  return it == layer.end() ? MultiPoly(m.vars()) : it->second;
}

MultiPoly determinant(const RingMatrix& m) {
  require_square(m, "determinant");
  if (m.rows() == 0) return MultiPoly(m.vars(), 1);
  if (m.all_constant()) return MultiPoly(m.vars(), det_rational(to_rationals(m)));
  if (m.rows() <= kLinesLimit) return det_expand_lines(m);
  return det_fraction_free(m);
}

LinearSolveResult lines_rule_solve(const RingMatrix& coeffs, const std::vector<MultiPoly>& constants) {
  require_square(coeffs, "lines_rule_solve");
  const std::size_t n = coeffs.rows();
  if (constants.size() != n) throw UsageError("lines_rule_solve: constant column has the wrong length");
  // Augmented rows: coeffs | -constants, so that coeffs*x - constants*t = 0.
  RingMatrix aug(coeffs.vars(), n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = coeffs.at(i, j);
    aug.at(i, n) = -constants[i];
  }
  // Final line: the letters x1..xn, t. Letter j's coefficient is its cofactor.
  std::vector<MultiPoly> cof(n + 1, MultiPoly(coeffs.vars()));
  if (aug.all_constant()) {
    auto a = to_rationals(aug);
    for (std::size_t j = 0; j <= n; ++j) {
      std::vector<std::vector<Rational>> minor(n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k <= n; ++k)
          if (k != j) minor[i].push_back(a[i][k]);
      Rational d = det_rational(std::move(minor));
      cof[j] = MultiPoly(coeffs.vars(), ((n - j) % 2 == 0) ? d : Rational(-d));
    }
  } else if (n + 1 <= kLinesLimit + 1) {
    Layer layer = expand_rows(aug, n);
    std::uint32_t full = static_cast<std::uint32_t>((1ull << (n + 1)) - 1);
    for (std::size_t j = 0; j <= n; ++j) {
      auto it = layer.find(full & ~(1u << j));
      if (it == layer.end()) continue;
      cof[j] = ((n - j) % 2 == 0) ? it->second : -it->second;
    }
  } else {
    for (std::size_t j = 0; j <= n; ++j) {
      MultiPoly minor = determinant(aug.without_column(j));
      cof[j] = ((n - j) % 2 == 0) ? minor : -minor;
    }
  }
  LinearSolveResult out{std::vector<MultiPoly>(cof.begin(), cof.begin() + static_cast<long>(n)), cof[n], false};
  out.solvable = !out.denominator.is_zero();
  return out;
}

MultiPoly homogeneous_condition(const RingMatrix& coeffs) {
  require_square(coeffs, "homogeneous_condition");
  return determinant(coeffs);
}

std::optional<std::vector<Rational>> nullspace_vector(const RingMatrix& coeffs) {
  if (!coeffs.all_constant()) throw UsageError("nullspace_vector: entries must be constants");
  const std::size_t rows = coeffs.rows(), cols = coeffs.cols();
  auto a = to_rationals(coeffs);
  if (rows + 1 == cols) {
    // Cofactor pattern: v_j = (-1)^j * minor_j.
    std::vector<Rational> v(cols);
    bool nonzero = false;
    for (std::size_t j = 0; j < cols; ++j) {
      std::vector<std::vector<Rational>> minor(rows);
      for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < cols; ++k)
          if (k != j) minor[i].push_back(a[i][k]);
      v[j] = det_rational(std::move(minor));
      if (j % 2 == 1) v[j] = -v[j];
      if (v[j] != 0) nonzero = true;
    }
    if (nonzero) return v;
  }
  auto pivots = rref(a);
  if (pivots.size() == cols) return std::nullopt;
  std::size_t free_col = 0;
  for (std::size_t p = 0; free_col < cols; ++free_col) {
    if (p < pivots.size() && pivots[p] == free_col) {
      ++p;
      continue;
    }
    break;
  }
  std::vector<Rational> v(cols, 0);
  v[free_col] = 1;
  for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free_col];
  return v;
}

}  // namespace bezout
