#include "bezout/resultant2.hpp"

#include "bezout/errors.hpp"

namespace bezout {

namespace {

// Dense univariate polynomial in the main variable, ascending powers.
using UPoly = std::vector<MultiPoly>;

UPoly to_ascending(const UniView& u) { return UPoly(u.coeffs.rbegin(), u.coeffs.rend()); }

UPoly upoly_mul(const UPoly& a, const UPoly& b) {
  UPoly r(a.size() + b.size() - 1, MultiPoly(a.front().vars()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

UPoly upoly_sub(UPoly a, const UPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), MultiPoly(b.front().vars()));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  return a;
}

// Truncation to the i+1 leading coefficients, as an ascending polynomial of degree i.
UPoly truncation(const UniView& u, unsigned i) {
  UPoly t(i + 1, MultiPoly(u.vars()));
  for (unsigned k = 0; k <= i && k < u.coeffs.size(); ++k) t[i - k] = u.coeffs[k];
  return t;
}

MultiPoly assemble_ascending(const UPoly& p, VarId main) {
  MultiPoly r(p.front().vars());
  Monomial shift(r.vars()->size(), 0);
  for (std::size_t k = 0; k < p.size(); ++k) {
    shift[main] = static_cast<unsigned>(k);
    r += p[k].mul_monomial(shift);
  }
  return r;
}

void require_shared_main(const UniView& f, const UniView& g) {
  if (f.main != g.main) throw UsageError("polynomials are viewed in different main variables");
  require_same_vars(f.leading(), g.leading());
}

// Rational univariate polynomial, ascending, no trailing zeros.
using QPoly = std::vector<Rational>;

QPoly to_qpoly(const UniView& u) {
  QPoly q;
  for (auto it = u.coeffs.rbegin(); it != u.coeffs.rend(); ++it) {
    if (!it->is_constant()) throw UsageError("expected rational coefficients, got " + it->to_string());
    q.push_back(it->constant_value());
  }
  while (!q.empty() && q.back() == 0) q.pop_back();
  return q;
}

QPoly qpoly_mod(QPoly a, const QPoly& b) {
  while (a.size() >= b.size() && !a.empty()) {
    Rational f = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    a.pop_back();
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  return a;
}

Rational qpow(const Rational& b, unsigned long e) {
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), b.get_num_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), b.get_den_mpz_t(), e);
  r.canonicalize();
  return r;
}

Rational qpoly_resultant(const QPoly& f, const QPoly& g) {
  if (f.empty() || g.empty()) return 0;
  const std::size_t m = f.size() - 1, n = g.size() - 1;
  if (n == 0) return qpow(g.back(), m);
  if (m == 0) return qpow(f.back(), n);
  QPoly r = qpoly_mod(f, g);
  if (r.empty()) return 0;
  // res(f,g) = (-1)^{mn} res(g,f) and res(g,f) = lc(g)^{m - deg r} res(g,r).
  Rational out = qpow(g.back(), m - (r.size() - 1)) * qpoly_resultant(g, r);
  if ((m * n) % 2 == 1) out = -out;
  return out;
}

UniView qpoly_to_view(const QPoly& q, VarId main, const VarTablePtr& vars) {
  std::vector<MultiPoly> desc;
  for (auto it = q.rbegin(); it != q.rend(); ++it) desc.emplace_back(vars, *it);
  return make_uniview(main, std::move(desc));
}

}  // namespace

SylvesterLayout sylvester_matrix(const UniView& f, const UniView& g) {
  require_shared_main(f, g);
  if (f.m == 0 || g.m == 0) throw UsageError("sylvester_matrix: both polynomials need degree >= 1 in the main variable");
  const std::size_t m = f.m, m2 = g.m, n = m + m2;
  RingMatrix s(f.vars(), n, n);
  for (std::size_t c = 0; c < m2; ++c)
    for (std::size_t i = 0; i <= m; ++i) s.at(i + c, c) = f.coeffs[i];
  for (std::size_t c = 0; c < m; ++c)
    for (std::size_t i = 0; i <= m2; ++i) s.at(i + c, m2 + c) = g.coeffs[i];
  return SylvesterLayout{f, g, std::move(s)};
}

MultiPoly resultant(const UniView& f, const UniView& g) { return determinant(sylvester_matrix(f, g).matrix); }

MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, VarId main) {
  UniView fv = collect_wrt(f, main), gv = collect_wrt(g, main);
  if (fv.m == 0) return fv.leading().pow(gv.m);
  if (gv.m == 0) return gv.leading().pow(fv.m);
  return resultant(fv, gv);
}

BezoutianLayout bezoutian_matrix(const UniView& f, const UniView& g) {
  require_shared_main(f, g);
  if (f.m != g.m) throw UsageError("bezoutian_matrix: degrees differ; use bezoutian_unequal");
  if (f.m == 0) throw UsageError("bezoutian_matrix: degree must be >= 1");
  const unsigned m = f.m;
  BezoutianLayout out{f, g, RingMatrix(f.vars(), m, m), {}};
  const UPoly fa = to_ascending(f), ga = to_ascending(g);
  for (unsigned i = 0; i < m; ++i) {
    UPoly fi = truncation(f, i), gi = truncation(g, i);
    UPoly row = upoly_sub(upoly_mul(gi, fa), upoly_mul(fi, ga));
    for (std::size_t k = m; k < row.size(); ++k)
      if (!row[k].is_zero()) throw std::logic_error("bezoutian row kept a power >= m");
    for (unsigned c = 0; c < m; ++c) out.matrix.at(i, c) = row[m - 1 - c];
    out.row_provenance.emplace_back(assemble_ascending(fi, f.main), assemble_ascending(gi, f.main));
  }
  return out;
}

int bezoutian_sign(unsigned m) { return ((m * (m + 1) / 2) % 2 == 0) ? 1 : -1; }

int bezoutian_unequal_sign(unsigned m, unsigned n) {
  // Equal-degree sign for the n x n core, times the parity of lifting g by x^(m-n).
  int s = bezoutian_sign(n);
  return (static_cast<unsigned long>(n) * (m - n) % 2 == 0) ? s : -s;
}

UnequalBezoutian bezoutian_unequal(const UniView& f, const UniView& g) {
  require_shared_main(f, g);
  if (!(f.m > g.m)) throw UsageError("bezoutian_unequal: need deg f > deg g");
  if (g.m == 0) throw UsageError("bezoutian_unequal: deg g must be >= 1");
  const unsigned m = f.m, n = g.m;
  const VarTablePtr& vars = f.vars();
  // G = x^(m-n) g has degree m; its truncations of length <= n are those of g.
  std::vector<MultiPoly> lifted(g.coeffs);
  lifted.resize(m + 1, MultiPoly(vars));
  UniView G{g.main, lifted, m, {}};
  const UPoly fa = to_ascending(f), Ga = to_ascending(G);
  const MultiPoly& lc = g.leading();
  UnequalBezoutian out{RingMatrix(vars, n, n), lc.pow((n - 1) * (m - n)), bezoutian_unequal_sign(m, n),
                       lc.pow(m - n)};
  for (unsigned i = 0; i < n; ++i) {
    UPoly row = upoly_sub(upoly_mul(truncation(G, i), fa), upoly_mul(truncation(f, i), Ga));
    row.resize(m, MultiPoly(vars));  // degree <= m-1
    // Exactly m-n substitutions of x^n = -(B'x^(n-1) + ...)/A', polynomial form.
    for (unsigned top = m - 1; top >= n; --top) {
      MultiPoly t = row[top];
      for (auto& c : row) c *= lc;
      for (unsigned k = 0; k <= n; ++k) row[top - k] -= t * g.coeffs[k];
      row.pop_back();
    }
    for (unsigned c = 0; c < n; ++c) out.matrix.at(i, c) = row[n - 1 - c];
  }
  return out;
}

long degree_bound_two(long m, long m2, long p, long p2) {
  if (m < 1 || m2 < 1) throw UsageError("degree_bound_two: degrees must be >= 1");
  if (p < 0 || p2 < 0) throw UsageError("degree_bound_two: offsets must be >= 0");
  return m * m2 + m * p2 + m2 * p;
}

IdentityWitness bezout_identity(const UniView& P, const UniView& Q) {
  require_shared_main(P, Q);
  QPoly pq = to_qpoly(P), qq = to_qpoly(Q);
  const VarTablePtr& vars = P.vars();
  const VarId x = P.main;
  if (P.m == 0 || Q.m == 0) {
    // A constant member is a unit: L = 1/c on it, 0 on the other.
    bool p_const = P.m == 0;
    Rational c = p_const ? pq.front() : qq.front();
    UniView unit = qpoly_to_view({1 / c}, x, vars);
    UniView zero{x, {MultiPoly(vars)}, 0, {std::nullopt}};
    return p_const ? IdentityWitness{unit, zero} : IdentityWitness{zero, unit};
  }
  SylvesterLayout s = sylvester_matrix(P, Q);
  const std::size_t n = P.m + Q.m;
  std::vector<MultiPoly> rhs(n, MultiPoly(vars));
  rhs.back() = MultiPoly(vars, 1);
  LinearSolveResult sol = lines_rule_solve(s.matrix, rhs);
  if (!sol.solvable) throw NotCoprime("resultant vanishes: the polynomials share a root");
  Rational den = sol.denominator.constant_value();
  auto coefficients = [&](std::size_t from, std::size_t count) {
    std::vector<MultiPoly> desc;
    for (std::size_t k = 0; k < count; ++k) desc.push_back(sol.values[from + k] * (1 / den));
    std::size_t lead = 0;
    while (lead + 1 < desc.size() && desc[lead].is_zero()) ++lead;
    desc.erase(desc.begin(), desc.begin() + static_cast<long>(lead));
    UniView v{x, desc, static_cast<unsigned>(desc.size() - 1), {}};
    for (const auto& c : v.coeffs) v.p_offsets.push_back(c.total_degree());
    return v;
  };
  return IdentityWitness{coefficients(0, Q.m), coefficients(Q.m, P.m)};
}

UniView gcd_euclid(const UniView& P, const UniView& Q) {
  require_shared_main(P, Q);
  QPoly a = to_qpoly(P), b = to_qpoly(Q);
  if (a.empty() && b.empty()) throw UsageError("gcd_euclid: both polynomials are zero");
  while (!b.empty()) {
    QPoly r = qpoly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  Rational lc = a.back();
  for (auto& c : a) c /= lc;
  return qpoly_to_view(a, P.main, P.vars());
}

MultiPoly gcd_euclid(const MultiPoly& P, const MultiPoly& Q, VarId main) {
  if (P.is_zero() && Q.is_zero()) throw UsageError("gcd_euclid: both polynomials are zero");
  if (P.is_zero()) return collect_wrt(Q, main).assemble().monic();
  if (Q.is_zero()) return collect_wrt(P, main).assemble().monic();
  return gcd_euclid(collect_wrt(P, main), collect_wrt(Q, main)).assemble();
}

Rational euclid_resultant(const UniView& f, const UniView& g) {
  require_shared_main(f, g);
  return qpoly_resultant(to_qpoly(f), to_qpoly(g));
}

Agreement specialization_oracle(const UniView& f, const UniView& g, VarId y, const Rational& y0) {
  require_shared_main(f, g);
  auto only_y = [&](const UniView& u) {
    for (const auto& c : u.coeffs)
      for (VarId v : c.support_vars())
        if (v != y) throw UsageError("specialization_oracle: coefficient involves a variable other than y");
  };
  only_y(f);
  only_y(g);
  if (f.leading().specialize(y, y0).is_zero() || g.leading().specialize(y, y0).is_zero()) return Agreement::Skipped;
  Rational symbolic = resultant(f, g).specialize(y, y0).constant_value();
  auto spec = [&](const UniView& u) {
    std::vector<MultiPoly> desc;
    for (const auto& c : u.coeffs) desc.push_back(c.specialize(y, y0));
    return make_uniview(u.main, std::move(desc));
  };
  Rational direct = euclid_resultant(spec(f), spec(g));
  return symbolic == direct ? Agreement::Equal : Agreement::Different;
}

}  // namespace bezout
