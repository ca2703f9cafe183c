#include "bezout/polyring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "bezout/errors.hpp"

namespace bezout {

VarTable::VarTable(std::vector<std::string> names) : names_(std::move(names)) {
  std::unordered_set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw UsageError("empty variable name");
    if (!seen.insert(n).second) throw UsageError("duplicate variable '" + n + "'");
  }
}

std::optional<VarId> VarTable::find(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<VarId>(it - names_.begin());
}

VarId VarTable::id(const std::string& name) const {
  auto v = find(name);
  if (!v) throw UsageError("unknown variable '" + name + "'");
  return *v;
}

VarTablePtr make_vars(std::vector<std::string> names) {
  return std::make_shared<const VarTable>(std::move(names));
}

unsigned total_degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0u); }

bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Monomial monomial_mul(const Monomial& a, const Monomial& b) {
  Monomial r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Monomial monomial_div(const Monomial& a, const Monomial& b) {
  Monomial r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const {
  unsigned da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

MultiPoly::MultiPoly(VarTablePtr vars) : vars_(std::move(vars)) {
  if (!vars_) throw UsageError("polynomial without a variable table");
}

MultiPoly::MultiPoly(VarTablePtr vars, const Rational& c) : MultiPoly(std::move(vars)) {
  if (c != 0) terms_.emplace(Monomial(vars_->size(), 0), c);
}

MultiPoly MultiPoly::variable(VarTablePtr vars, VarId v) {
  if (v >= vars->size()) throw UsageError("variable id out of range");
  Monomial m(vars->size(), 0);
  m[v] = 1;
  return term(std::move(vars), std::move(m), 1);
}

MultiPoly MultiPoly::variable(VarTablePtr vars, const std::string& name) {
  VarId v = vars->id(name);
  return variable(std::move(vars), v);
}

MultiPoly MultiPoly::term(VarTablePtr vars, Monomial m, const Rational& c) {
  MultiPoly p(std::move(vars));
  if (m.size() != p.vars_->size()) throw UsageError("monomial length does not match variable table");
  p.add_term(m, c);
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && bezout::total_degree(terms_.begin()->first) == 0);
}

Rational MultiPoly::constant_value() const {
  if (!is_constant()) throw UsageError("polynomial is not a constant: " + to_string());
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

std::optional<unsigned> MultiPoly::total_degree() const {
  if (terms_.empty()) return std::nullopt;
  return bezout::total_degree(terms_.begin()->first);
}

std::optional<unsigned> MultiPoly::degree_in(VarId v) const {
  if (terms_.empty()) return std::nullopt;
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[v]);
  return d;
}

std::optional<unsigned> MultiPoly::degree_in(const std::vector<VarId>& vs) const {
  if (terms_.empty()) return std::nullopt;
  unsigned d = 0;
  for (const auto& [m, c] : terms_) {
    unsigned s = 0;
    for (VarId v : vs) s += m[v];
    d = std::max(d, s);
  }
  return d;
}

bool MultiPoly::involves(VarId v) const {
  for (const auto& [m, c] : terms_)
    if (m[v] > 0) return true;
  return false;
}

std::vector<VarId> MultiPoly::support_vars() const {
  std::vector<VarId> out;
  for (VarId v = 0; v < vars_->size(); ++v)
    if (involves(v)) out.push_back(v);
  return out;
}

const Monomial& MultiPoly::leading_monomial() const {
  if (terms_.empty()) throw DegenerateInput("leading term of the zero polynomial");
  return terms_.begin()->first;
}

const Rational& MultiPoly::leading_coefficient() const {
  if (terms_.empty()) throw DegenerateInput("leading coefficient of the zero polynomial");
  return terms_.begin()->second;
}

Rational MultiPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  // Callers may build mpq values from (num, den) pairs; keep stored coefficients canonical.
  if (inserted) it->second.canonicalize();
  else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void require_same_vars(const MultiPoly& p, const MultiPoly& q) {
  if (p.vars() != q.vars() && !(*p.vars() == *q.vars()))
    throw UsageError("polynomials over different variable tables");
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(*this);
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& q) {
  require_same_vars(*this, q);
  for (const auto& [m, c] : q.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& q) {
  require_same_vars(*this, q);
  for (const auto& [m, c] : q.terms_) add_term(m, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& p, const MultiPoly& q) {
  require_same_vars(p, q);
  MultiPoly r(p.vars_);
  if (p.is_zero() || q.is_zero()) return r;
  Monomial buf(p.vars_->size());
  Rational prod;
  for (const auto& [mp, cp] : p.terms_) {
    for (const auto& [mq, cq] : q.terms_) {
      for (std::size_t i = 0; i < buf.size(); ++i) buf[i] = mp[i] + mq[i];
      mpq_mul(prod.get_mpq_t(), cp.get_mpq_t(), cq.get_mpq_t());
      r.add_term(buf, prod);
    }
  }
  return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& q) {
  *this = *this * q;
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& [m, coef] : terms_) coef *= c;
  }
  return *this;
}

bool MultiPoly::operator==(const MultiPoly& q) const {
  return (vars_ == q.vars_ || *vars_ == *q.vars_) && terms_ == q.terms_;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result(vars_, 1);
  MultiPoly base(*this);
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e > 0) base *= base;
  }
  return result;
}

MultiPoly MultiPoly::mul_monomial(const Monomial& m) const {
  MultiPoly r(vars_);
  for (const auto& [mm, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), monomial_mul(mm, m), c);
  return r;
}

MultiPoly MultiPoly::substitute(VarId v, const MultiPoly& value) const {
  require_same_vars(*this, value);
  std::map<unsigned, MultiPoly> by_power;
  for (const auto& [m, c] : terms_) {
    Monomial rest(m);
    unsigned e = rest[v];
    rest[v] = 0;
    by_power.try_emplace(e, vars_).first->second.add_term(rest, c);
  }
  MultiPoly result(vars_);
  MultiPoly power(vars_, 1);
  unsigned at = 0;
  for (const auto& [e, coef] : by_power) {
    while (at < e) {
      power *= value;
      ++at;
    }
    result += coef * power;
  }
  return result;
}

MultiPoly MultiPoly::specialize(VarId v, const Rational& value) const {
  MultiPoly r(vars_);
  for (const auto& [m, c] : terms_) {
    Monomial rest(m);
    unsigned e = rest[v];
    rest[v] = 0;
    Rational f;
    mpz_pow_ui(f.get_num_mpz_t(), value.get_num_mpz_t(), e);
    mpz_pow_ui(f.get_den_mpz_t(), value.get_den_mpz_t(), e);
    r.add_term(rest, c * f);
  }
  return r;
}

MultiPoly MultiPoly::rebase(VarTablePtr target) const {
  std::vector<std::optional<VarId>> map(vars_->size());
  for (VarId v = 0; v < vars_->size(); ++v) map[v] = target->find(vars_->name(v));
  MultiPoly r(target);
  for (const auto& [m, c] : terms_) {
    Monomial out(target->size(), 0);
    for (VarId v = 0; v < m.size(); ++v) {
      if (m[v] == 0) continue;
      if (!map[v]) throw UsageError("variable '" + vars_->name(v) + "' missing from target table");
      out[*map[v]] = m[v];
    }
    r.add_term(out, c);
  }
  return r;
}

MultiPoly MultiPoly::primitive_normalized() const {
  if (terms_.empty()) return *this;
  Integer num_gcd = 0, den_lcm = 1;
  for (const auto& [m, c] : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (leading_coefficient() < 0) scale = -scale;
  return *this * scale;
}

MultiPoly MultiPoly::monic() const {
  if (terms_.empty()) return *this;
  Rational inv = 1 / leading_coefficient();
  return *this * inv;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool constant = bezout::total_degree(m) == 0;
    bool wrote = false;
    if (a != 1 || constant) {
      os << to_short_string(a);
      wrote = true;
    }
    for (VarId v = 0; v < m.size(); ++v) {
      if (m[v] == 0) continue;
      if (wrote) os << "*";
      os << vars_->name(v);
      if (m[v] > 1) os << "^" << m[v];
      wrote = true;
    }
  }
  return os.str();
}

MultiPoly add(const MultiPoly& p, const MultiPoly& q) { return p + q; }
MultiPoly mul(const MultiPoly& p, const MultiPoly& q) { return p * q; }

Rational eval(const MultiPoly& p, const std::vector<Rational>& point) {
  if (point.size() != p.vars()->size()) throw UsageError("evaluation point has the wrong arity");
  Rational total = 0;
  Rational term, f;
  for (const auto& [m, c] : p.terms()) {
    term = c;
    for (VarId v = 0; v < m.size(); ++v) {
      if (m[v] == 0) continue;
      mpz_pow_ui(f.get_num_mpz_t(), point[v].get_num_mpz_t(), m[v]);
      mpz_pow_ui(f.get_den_mpz_t(), point[v].get_den_mpz_t(), m[v]);
      term *= f;
    }
    total += term;
  }
  return total;
}

Rational eval(const MultiPoly& p, const std::map<std::string, Rational>& point) {
  std::vector<Rational> values(p.vars()->size(), 0);
  for (VarId v : p.support_vars()) {
    auto it = point.find(p.vars()->name(v));
    if (it == point.end()) throw UsageError("unbound variable '" + p.vars()->name(v) + "'");
    values[v] = it->second;
  }
  return eval(p, values);
}

std::optional<MultiPoly> divide_exact(const MultiPoly& p, const MultiPoly& q) {
  require_same_vars(p, q);
  if (q.is_zero()) throw DegenerateInput("division by the zero polynomial");
  MultiPoly quotient(p.vars());
  MultiPoly rem(p);
  const Monomial& lq = q.leading_monomial();
  const Rational& cq = q.leading_coefficient();
  while (!rem.is_zero()) {
    const Monomial& lr = rem.leading_monomial();
    if (!divides(lq, lr)) return std::nullopt;
    Monomial t = monomial_div(lr, lq);
    Rational c = rem.leading_coefficient() / cq;
    quotient.add_term(t, c);
    rem -= q.mul_monomial(t) * c;
  }
  return quotient;
}

MultiPoly divide_or_throw(const MultiPoly& p, const MultiPoly& q) {
  auto r = divide_exact(p, q);
  if (!r) throw std::logic_error("expected exact division failed: (" + p.to_string() + ") / (" + q.to_string() + ")");
  return *r;
}

MultiPoly UniView::assemble() const {
  MultiPoly r(vars());
  Monomial shift(vars()->size(), 0);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    shift[main] = m - static_cast<unsigned>(i);
    r += coeffs[i].mul_monomial(shift);
  }
  return r;
}

UniView make_uniview(VarId main, std::vector<MultiPoly> coeffs_desc) {
  std::size_t lead = 0;
  while (lead < coeffs_desc.size() && coeffs_desc[lead].is_zero()) ++lead;
  if (lead == coeffs_desc.size()) throw DegenerateInput("zero polynomial has no univariate view");
  UniView u;
  u.main = main;
  u.coeffs.assign(coeffs_desc.begin() + static_cast<long>(lead), coeffs_desc.end());
  u.m = static_cast<unsigned>(u.coeffs.size() - 1);
  for (const auto& c : u.coeffs) {
    if (c.involves(main)) throw UsageError("univariate coefficient involves the main variable");
    u.p_offsets.push_back(c.total_degree());
  }
  return u;
}

UniView collect_wrt(const MultiPoly& p, VarId main) {
  if (p.is_zero()) throw DegenerateInput("collect_wrt of the zero polynomial");
  if (main >= p.vars()->size()) throw UsageError("main variable out of range");
  unsigned m = *p.degree_in(main);
  std::vector<MultiPoly> coeffs(m + 1, MultiPoly(p.vars()));
  for (const auto& [mono, c] : p.terms()) {
    Monomial rest(mono);
    unsigned e = rest[main];
    rest[main] = 0;
    coeffs[m - e].add_term(rest, c);
  }
  return make_uniview(main, std::move(coeffs));
}

namespace {

// Fixed-count pseudo-remainder on descending coefficient vectors.
std::vector<MultiPoly> prem_desc(std::vector<MultiPoly> a, const std::vector<MultiPoly>& b, unsigned* steps_out) {
  const std::size_t k = b.size() - 1;
  const MultiPoly& lc = b.front();
  unsigned steps = 0;
  while (a.size() > k) {
    MultiPoly top = a.front();
    for (std::size_t i = 0; i < a.size(); ++i) a[i] *= lc;
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= top * b[i];
    a.erase(a.begin());
    ++steps;
  }
  if (steps_out) *steps_out = steps;
  return a;
}

}  // namespace

PowerReduction substitute_power(const UniView& p, const UniView& relation) {
  if (relation.m == 0) throw UsageError("substitute_power: relation has degree 0 in the main variable");
  if (p.main != relation.main) throw UsageError("substitute_power: different main variables");
  require_same_vars(p.leading(), relation.leading());
  unsigned steps = 0;
  auto rest = prem_desc(p.coeffs, relation.coeffs, &steps);
  PowerReduction out{MultiPoly(p.vars()), relation.leading().pow(steps), steps};
  Monomial shift(p.vars()->size(), 0);
  for (std::size_t i = 0; i < rest.size(); ++i) {
    shift[p.main] = static_cast<unsigned>(rest.size() - 1 - i);
    out.value += rest[i].mul_monomial(shift);
  }
  return out;
}

MultiPoly prem(const MultiPoly& a, const MultiPoly& b, VarId main) {
  if (b.is_zero()) throw DegenerateInput("pseudo-remainder by zero");
  if (a.is_zero()) return a;
  UniView bv = collect_wrt(b, main);
  if (bv.m == 0) return MultiPoly(a.vars());
  return substitute_power(collect_wrt(a, main), bv).value;
}

}  // namespace bezout
