#include "bezout/resolvent1762.hpp"

#include <boost/math/constants/constants.hpp>
#include <sstream>

#include "bezout/errors.hpp"
#include "bezout/resultant2.hpp"

namespace bezout {

namespace {

Real to_real(const Rational& q) {
  return Real(q.get_num().get_str()) / Real(q.get_den().get_str());
}

Complex nth_root(const Complex& z, unsigned n) {
  if (z == Complex(0)) return Complex(0);
  return exp(log(z) / Real(n));
}

Complex horner(const std::vector<Rational>& desc, const Complex& x) {
  Complex acc(0);
  for (const auto& c : desc) acc = acc * x + Complex(to_real(c));
  return acc;
}

Real scaled_residual(const std::vector<Rational>& desc, const Complex& x) {
  Real biggest = 0;
  for (const auto& c : desc) biggest = std::max(biggest, abs(to_real(c)));
  return abs(horner(desc, x)) / (1 + biggest);
}

void check_digits(unsigned digits) {
  if (digits < 1 || digits > kMaxDigits)
    throw UsageError("digits must be in 1.." + std::to_string(kMaxDigits));
}

Real tolerance(unsigned digits) { return pow(Real(10), -static_cast<int>(digits) + 2); }

VarTablePtr extend_with(const VarTablePtr& vars, std::vector<std::string>& fresh) {
  std::vector<std::string> names = vars->names();
  for (auto& f : fresh) {
    std::string cand = f;
    for (int k = 1; vars->find(cand) || std::find(names.begin(), names.end(), cand) != names.end(); ++k)
      cand = f + std::to_string(k);
    f = cand;
    names.push_back(cand);
  }
  return make_vars(std::move(names));
}

}  // namespace

SolvableClass solvable_class(unsigned n, const Rational& p, const Rational& q) {
  if (n < 3) throw UsageError("solvable_class: n must be >= 3");
  if (p == 0) throw DegenerateInput("solvable_class: p = 0 is an exceptional case and is refused");
  SolvableClass c;
  c.n = n;
  c.p = p;
  c.q = q;
  c.e2 = -p / Rational(binomial(n, 2));
  c.e1 = -q / (Rational(binomial(n, 3)) * c.e2);
  std::vector<Rational> h{1};  // h_0
  Rational h_prev = 0;         // h_{-1}
  for (unsigned j = 1; j + 2 <= n; ++j) {
    Rational next = c.e1 * h.back() - c.e2 * h_prev;
    h_prev = h.back();
    h.push_back(next);
  }
  c.coeffsE = {1, 0};
  for (unsigned k = 2; k <= n; ++k) c.coeffsE.push_back(-Rational(binomial(n, k)) * c.e2 * h[k - 2]);
  return c;
}

MultiPoly class_equation_symbolic(unsigned n, const MultiPoly& a, const MultiPoly& b, VarId x) {
  require_same_vars(a, b);
  const VarTablePtr& vars = a.vars();
  MultiPoly X = MultiPoly::variable(vars, x);
  MultiPoly e = X.pow(n);
  for (unsigned k = 2; k <= n; ++k) {
    MultiPoly h(vars);
    for (unsigned i = 0; i <= k - 2; ++i) h += a.pow(i) * b.pow(k - 2 - i);
    e -= Rational(binomial(n, k)) * (a * b * h * X.pow(n - k));
  }
  return e;
}

RadicalRoot radical_root(const SolvableClass& cls, unsigned digits) {
  check_digits(digits);
  const unsigned n = cls.n;
  Complex disc = Complex(to_real(cls.e1 * cls.e1 - 4 * cls.e2));
  Complex root = sqrt(disc);
  Complex a = (Complex(to_real(cls.e1)) + root) / Real(2);
  Complex b = (Complex(to_real(cls.e1)) - root) / Real(2);
  Complex alpha = nth_root(a, n), beta0 = nth_root(b, n);
  const Real two_pi = 2 * boost::math::constants::pi<Real>();
  const Real tol = tolerance(digits);
  for (unsigned j = 0; j < n; ++j) {
    Complex beta = beta0 * exp(Complex(0, two_pi * j / n));
    Complex x(0);
    for (unsigned k = 1; k < n; ++k) x += pow(alpha, static_cast<int>(n - k)) * pow(beta, static_cast<int>(k));
    Real res = scaled_residual(cls.coeffsE, x);
    if (res < tol) return RadicalRoot{x, j, res};
  }
  throw BranchFailure("radical_root: no branch pairing meets the residual bound 1e" +
                      std::to_string(-static_cast<int>(digits) + 2));
}

TwoRadical two_radical_minpoly(unsigned n, const MultiPoly& a, const MultiPoly& b, VarId x) {
  if (n != 3 && n != 4) throw UsageError("two_radical_minpoly: n must be 3 or 4");
  require_same_vars(a, b);
  if (a.is_zero()) throw DegenerateInput("two_radical_minpoly: a = 0");
  std::vector<std::string> fresh{"u", "v"};
  VarTablePtr ext = extend_with(a.vars(), fresh);
  const VarId u = ext->id(fresh[0]), v = ext->id(fresh[1]), xe = ext->id(a.vars()->name(x));
  MultiPoly A = a.rebase(ext), B = b.rebase(ext);
  MultiPoly U = MultiPoly::variable(ext, u), V = MultiPoly::variable(ext, v), X = MultiPoly::variable(ext, xe);
  MultiPoly ru = U.pow(n) - A.pow(n - 1) * B;
  MultiPoly rv = V.pow(n) - A.pow(n - 2) * B.pow(2);

  // Every branch pair: drop v with x = u + v, then u.
  MultiPoly in_u = resultant(rv, X - U - V, v);
  MultiPoly full = resultant(ru, in_u, u);
  // Consistent branches satisfy a v = u^2; with v = x - u this is u^2 + a u - a x.
  MultiPoly linked = resultant(ru, U.pow(2) + A * U - A * X, u);

  UniView lv = collect_wrt(linked, xe);
  if (lv.m != n) throw std::logic_error("branch-linked elimination has unexpected degree");
  std::vector<MultiPoly> monic;
  for (const auto& c : lv.coeffs) monic.push_back(divide_or_throw(c, lv.leading()));
  MultiPoly minpoly = make_uniview(xe, monic).assemble();
  UniView fv = collect_wrt(full, xe);
  MultiPoly full_monic(ext);
  for (std::size_t i = 0; i < fv.coeffs.size(); ++i) {
    Monomial shift(ext->size(), 0);
    shift[xe] = fv.m - static_cast<unsigned>(i);
    full_monic += divide_or_throw(fv.coeffs[i], fv.leading()).mul_monomial(shift);
  }
  MultiPoly extraneous = divide_or_throw(full_monic, minpoly);
  return TwoRadical{minpoly.rebase(a.vars()), full_monic.rebase(a.vars()), extraneous.rebase(a.vars())};
}

MultiPoly two_radical_series(unsigned n, const MultiPoly& a, const MultiPoly& b, VarId x) {
  if (n != 3 && n != 4) throw UsageError("two_radical_series: n must be 3 or 4");
  require_same_vars(a, b);
  MultiPoly X = MultiPoly::variable(a.vars(), x);
  Rational sign = (n % 2 == 1) ? 1 : -1;
  MultiPoly rhs = a.pow(n - 1) * b + sign * (a.pow(n - 2) * b.pow(2)) + Rational(n) * (a.pow(n - 2) * b * X);
  Rational c2(n * (n - 3), 2);
  if (c2 != 0) rhs += c2 * (a.pow(n - 3) * b * X.pow(2));
  return X.pow(n) - rhs;
}

RadicalRoot two_radical_root(unsigned n, const Rational& a, const Rational& b, unsigned digits) {
  check_digits(digits);
  auto vars = make_vars({"x"});
  TwoRadical tr = two_radical_minpoly(n, MultiPoly(vars, a), MultiPoly(vars, b), 0);
  UniView mv = collect_wrt(tr.minpoly, 0);
  std::vector<Rational> desc;
  for (const auto& c : mv.coeffs) desc.push_back(c.constant_value());
  Complex ca(to_real(a)), cb(to_real(b));
  Complex alpha = nth_root(ca, n), beta0 = nth_root(cb, n);
  const Real two_pi = 2 * boost::math::constants::pi<Real>();
  const Real tol = tolerance(digits);
  for (unsigned j = 0; j < n; ++j) {
    Complex beta = beta0 * exp(Complex(0, two_pi * j / n));
    Complex x = pow(alpha, static_cast<int>(n - 1)) * beta + pow(alpha, static_cast<int>(n - 2)) * beta * beta;
    Real res = scaled_residual(desc, x);
    if (res < tol) return RadicalRoot{x, j, res};
  }
  throw BranchFailure("two_radical_root: no branch meets the residual bound");
}

std::string to_decimal(const Real& r, unsigned digits) {
  std::ostringstream os;
  os.precision(digits);
  os << r;
  return os.str();
}

std::string to_decimal(const Complex& z, unsigned digits) {
  Real scale = std::max(Real(1), abs(z));
  Real cut = scale * tolerance(digits + 2);
  Real re = abs(z.real()) < cut ? Real(0) : z.real();
  Real im = abs(z.imag()) < cut ? Real(0) : z.imag();
  if (im == 0) return to_decimal(re, digits);
  std::string s = to_decimal(re, digits);
  s += im < 0 ? " - " : " + ";
  s += to_decimal(abs(im), digits) + "*i";
  return s;
}

}  // namespace bezout
