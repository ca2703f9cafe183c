#include <gtest/gtest.h>

#include <cmath>

#include "bezout/errors.hpp"
#include "bezout/resolvent1762.hpp"
#include "oracles.hpp"

using namespace bezout;

namespace {

long double to_ld(const Rational& q) { return static_cast<long double>(q.get_d()); }

// Horner over a univariate-in-x MultiPoly whose other variables are already specialized.
long double eval_ld(const MultiPoly& p, VarId x, long double at) {
  long double s = 0;
  for (const auto& [m, c] : p.terms()) s += to_ld(c) * std::pow(at, static_cast<long double>(m[x]));
  return s;
}

long double max_coeff(const MultiPoly& p) {
  long double mx = 0;
  for (const auto& [m, c] : p.terms()) mx = std::max(mx, std::fabs(to_ld(c)));
  return mx;
}

}  // namespace

TEST(Resolvent1762, CubicClassIsEveryDepressedCubic) {
  oracle::Gen g(61);
  for (int t = 0; t < 40; ++t) {
    Rational p = g.rational(9), q = g.rational(9);
    if (p == 0) continue;
    SolvableClass c = solvable_class(3, p, q);
    EXPECT_EQ(c.coeffsE, (std::vector<Rational>{1, 0, p, q}));
    EXPECT_EQ(c.e2, -p / 3);
    EXPECT_EQ(c.e1, -q / c.e2);
  }
  SolvableClass c = solvable_class(3, -3, 2);
  EXPECT_EQ(c.e2, 1);
  EXPECT_EQ(c.e1, -2);
}

TEST(Resolvent1762, CoefficientsMatchSymbolicExpansion) {
  // Expand with symbolic a, b, then substitute the class's roots of X^2 - e1 X + e2 through e1, e2.
  auto v = make_vars({"x", "a", "b"});
  MultiPoly a = MultiPoly::variable(v, 1), b = MultiPoly::variable(v, 2);
  oracle::Gen g(62);
  for (unsigned n = 3; n <= 7; ++n) {
    MultiPoly sym = class_equation_symbolic(n, a, b, 0);
    // a = 1, b = r keeps everything rational: e1 = 1 + r, e2 = r.
    Rational r = g.rational(5);
    if (r == 0) continue;
    std::vector<Rational> pt{0, 1, r};
    Rational p = -binomial(n, 2) * r, q = -binomial(n, 3) * r * (1 + r);
    SolvableClass c = solvable_class(n, p, q);
    ASSERT_EQ(c.coeffsE.size(), n + 1u);
    for (unsigned k = 0; k <= n; ++k) {
      MultiPoly coeff(v);
      for (const auto& [mon, cf] : sym.terms())
        if (mon[0] == n - k) coeff.add_term({0, mon[1], mon[2]}, cf);
      EXPECT_EQ(eval(coeff, pt), c.coeffsE[k]) << "n=" << n << " k=" << k;
    }
  }
}

TEST(Resolvent1762, QuarticClassData) {
  SolvableClass c = solvable_class(4, -6, -8);
  EXPECT_EQ(c.e2, 1);
  EXPECT_EQ(c.e1, 2);
  // a = b = 1: the x^(4-k) coefficient is -C(4,k) h_{k-2}(1,1) = -C(4,k)(k-1).
  EXPECT_EQ(c.coeffsE, (std::vector<Rational>{1, 0, -6, -8, -3}));
}

TEST(Resolvent1762, Rejections) {
  EXPECT_THROW(solvable_class(2, 1, 1), UsageError);
  EXPECT_THROW(solvable_class(3, 0, 1), DegenerateInput);
  EXPECT_THROW(radical_root(solvable_class(3, -3, 2), 0), UsageError);
  EXPECT_THROW(radical_root(solvable_class(3, -3, 2), kMaxDigits + 1), UsageError);
}

TEST(Resolvent1762, RadicalRootDoubleRootCubic) {
  RadicalRoot r = radical_root(solvable_class(3, -3, 2), 12);
  EXPECT_LT(abs(r.value - Complex(-2)), Real("1e-10"));
  EXPECT_LT(r.residual, Real("1e-10"));
}

TEST(Resolvent1762, RadicalRootResiduals) {
  oracle::Gen g(63);
  for (unsigned n = 3; n <= 6; ++n)
    for (int t = 0; t < 10; ++t) {
      Rational p = g.rational(9), q = g.rational(9);
      if (p == 0) continue;
      SolvableClass c = solvable_class(n, p, q);
      RadicalRoot r = radical_root(c, 20);
      EXPECT_LT(r.residual, Real("1e-18")) << "n=" << n;
      // Independent residual from the coefficient list.
      Complex s = 0;
      Real scale = 0;
      for (const auto& k : c.coeffsE) {
        s = s * r.value + Complex(Real(k.get_d()));
        scale = scale * abs(r.value) + abs(Real(k.get_d()));
      }
      EXPECT_LT(abs(s), Real("1e-12") * (1 + scale)) << "n=" << n;
    }
}

TEST(Resolvent1762, ComplexClassRoot) {
  // e1^2 < 4 e2: a, b complex conjugates.
  SolvableClass c = solvable_class(3, -3, -1);
  EXPECT_LT(c.e1 * c.e1, 4 * c.e2);
  RadicalRoot r = radical_root(c, 15);
  EXPECT_LT(r.residual, Real("1e-13"));
}

TEST(Resolvent1762, TwoRadicalCubicSymbolic) {
  auto v = make_vars({"x", "a", "b"});
  MultiPoly x = MultiPoly::variable(v, 0), a = MultiPoly::variable(v, 1), b = MultiPoly::variable(v, 2);
  TwoRadical t = two_radical_minpoly(3, a, b, 0);
  EXPECT_EQ(t.minpoly, x.pow(3) - Rational(3) * a * b * x - a * b * (a + b));
  EXPECT_EQ(t.minpoly, two_radical_series(3, a, b, 0));
  EXPECT_EQ(t.full.degree_in(0).value(), 9u);
  EXPECT_TRUE(divide_exact(t.full, t.minpoly).has_value());
}

TEST(Resolvent1762, TwoRadicalQuarticMatchesSeries) {
  auto v = make_vars({"x", "a", "b"});
  MultiPoly x = MultiPoly::variable(v, 0), a = MultiPoly::variable(v, 1), b = MultiPoly::variable(v, 2);
  TwoRadical t = two_radical_minpoly(4, a, b, 0);
  MultiPoly want = x.pow(4) - Rational(2) * a * b * x * x - Rational(4) * a * a * b * x - a.pow(3) * b + a * a * b * b;
  EXPECT_EQ(t.minpoly, want);
  EXPECT_EQ(t.minpoly, two_radical_series(4, a, b, 0));
  EXPECT_EQ(t.full.degree_in(0).value(), 16u);
}

TEST(Resolvent1762, TwoRadicalNumericExample) {
  // a = 2, b = 1: x = cbrt(4) + cbrt(2) solves x^3 - 6x - 6.
  auto v = make_vars({"x"});
  MultiPoly x = MultiPoly::variable(v, 0);
  TwoRadical t = two_radical_minpoly(3, MultiPoly(v, 2), MultiPoly(v, 1), 0);
  EXPECT_EQ(t.minpoly, x.pow(3) - Rational(6) * x - MultiPoly(v, 6));
  long double root = std::cbrt(4.0L) + std::cbrt(2.0L);
  EXPECT_LT(std::fabs(eval_ld(t.minpoly, 0, root)), 1e-12L);
}

TEST(Resolvent1762, TwoRadicalRandomResiduals) {
  oracle::Gen g(64);
  auto v = make_vars({"x"});
  for (unsigned n = 3; n <= 4; ++n)
    for (int t = 0; t < 25; ++t) {
      Rational a(g.integer(1, 9), g.integer(1, 5)), b(g.integer(1, 9), g.integer(1, 5));
      a.canonicalize();
      b.canonicalize();
      MultiPoly mp = two_radical_minpoly(n, MultiPoly(v, a), MultiPoly(v, b), 0).minpoly;
      long double la = to_ld(a), lb = to_ld(b);
      long double root = std::pow(std::pow(la, n - 1) * lb, 1.0L / n) + std::pow(std::pow(la, n - 2) * lb * lb, 1.0L / n);
      EXPECT_LT(std::fabs(eval_ld(mp, 0, root)) / (1 + max_coeff(mp)), 1e-10L);
      RadicalRoot r = two_radical_root(n, a, b, 15);
      EXPECT_LT(r.residual, Real("1e-13"));
    }
}

TEST(Resolvent1762, TwoRadicalRejections) {
  auto v = make_vars({"x", "a", "b"});
  MultiPoly a = MultiPoly::variable(v, 1), b = MultiPoly::variable(v, 2);
  EXPECT_THROW(two_radical_minpoly(5, a, b, 0), UsageError);
  EXPECT_THROW(two_radical_minpoly(3, MultiPoly(v), b, 0), DegenerateInput);
}

TEST(Resolvent1762, DecimalRendering) {
  EXPECT_EQ(to_decimal(Real(-2), 5), "-2");
  RadicalRoot r = radical_root(solvable_class(3, -6, -6), 12);
  EXPECT_EQ(to_decimal(r.value.real(), 12), "2.84732210186");
}
