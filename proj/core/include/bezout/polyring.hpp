#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bezout/rational.hpp"

namespace bezout {

using VarId = std::size_t;

// Ordered, duplicate-free variable names. Position i is exponent slot i.
class VarTable {
 public:
  explicit VarTable(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(VarId v) const { return names_.at(v); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<VarId> find(const std::string& name) const;
  VarId id(const std::string& name) const;  // throws UsageError when absent

  bool operator==(const VarTable& other) const { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
};

using VarTablePtr = std::shared_ptr<const VarTable>;

VarTablePtr make_vars(std::vector<std::string> names);

using Monomial = std::vector<unsigned>;

unsigned total_degree(const Monomial& m);
bool divides(const Monomial& a, const Monomial& b);
Monomial monomial_mul(const Monomial& a, const Monomial& b);
Monomial monomial_div(const Monomial& a, const Monomial& b);  // requires divides(b, a)

// Graded-lex "greater": higher total degree first, ties broken lexicographically
// by VarTable order. Term maps iterate from the leading term down.
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

class MultiPoly {
 public:
  using TermMap = std::map<Monomial, Rational, GrlexGreater>;

  explicit MultiPoly(VarTablePtr vars);
  MultiPoly(VarTablePtr vars, const Rational& c);

  static MultiPoly variable(VarTablePtr vars, VarId v);
  static MultiPoly variable(VarTablePtr vars, const std::string& name);
  static MultiPoly term(VarTablePtr vars, Monomial m, const Rational& c);

  const VarTablePtr& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Requires is_constant().
  Rational constant_value() const;

  // nullopt is the zero polynomial's undefined degree.
  std::optional<unsigned> total_degree() const;
  std::optional<unsigned> degree_in(VarId v) const;
  // Total degree counting only the listed variables.
  std::optional<unsigned> degree_in(const std::vector<VarId>& vs) const;
  bool involves(VarId v) const;
  std::vector<VarId> support_vars() const;

  // Leading term in grlex; requires nonzero.
  const Monomial& leading_monomial() const;
  const Rational& leading_coefficient() const;
  Rational coefficient(const Monomial& m) const;

  void add_term(const Monomial& m, const Rational& c);

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& q);
  MultiPoly& operator-=(const MultiPoly& q);
  MultiPoly& operator*=(const MultiPoly& q);
  MultiPoly& operator*=(const Rational& c);
  friend MultiPoly operator+(MultiPoly p, const MultiPoly& q) { return p += q; }
  friend MultiPoly operator-(MultiPoly p, const MultiPoly& q) { return p -= q; }
  friend MultiPoly operator*(const MultiPoly& p, const MultiPoly& q);
  friend MultiPoly operator*(MultiPoly p, const Rational& c) { return p *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly p) { return p *= c; }
  bool operator==(const MultiPoly& q) const;
  bool operator!=(const MultiPoly& q) const { return !(*this == q); }

  MultiPoly pow(unsigned e) const;
  MultiPoly mul_monomial(const Monomial& m) const;

  // Replace variable v by a polynomial over the same table.
  MultiPoly substitute(VarId v, const MultiPoly& value) const;
  MultiPoly specialize(VarId v, const Rational& value) const;
  // Move to another table by variable name; every used name must exist there.
  MultiPoly rebase(VarTablePtr target) const;

  // Scaled so coefficients are coprime integers and the leading one is positive.
  MultiPoly primitive_normalized() const;
  // Scaled so the leading coefficient is 1.
  MultiPoly monic() const;

  std::string to_string() const;

 private:
  VarTablePtr vars_;
  TermMap terms_;
};

void require_same_vars(const MultiPoly& p, const MultiPoly& q);

MultiPoly add(const MultiPoly& p, const MultiPoly& q);
MultiPoly mul(const MultiPoly& p, const MultiPoly& q);

// Evaluation at a point keyed by variable name; every used variable must be bound.
Rational eval(const MultiPoly& p, const std::map<std::string, Rational>& point);
Rational eval(const MultiPoly& p, const std::vector<Rational>& point);  // indexed by VarId

// Exact division; nullopt when q does not divide p. Throws on q == 0.
std::optional<MultiPoly> divide_exact(const MultiPoly& p, const MultiPoly& q);
// Same, but a failed division is an internal error.
MultiPoly divide_or_throw(const MultiPoly& p, const MultiPoly& q);

// Multivariate gcd over Q, result primitive_normalized (gcd(0,0) = 0).
MultiPoly gcd(const MultiPoly& p, const MultiPoly& q);

// p as a polynomial in one main variable with polynomial coefficients.
struct UniView {
  VarId main = 0;
  std::vector<MultiPoly> coeffs;  // coeffs[0] leads; coeffs[i] multiplies main^(m-i)
  unsigned m = 0;
  std::vector<std::optional<unsigned>> p_offsets;  // degree of each coefficient, nullopt if zero

  const VarTablePtr& vars() const { return coeffs.front().vars(); }
  const MultiPoly& leading() const { return coeffs.front(); }
  // coefficient of main^k
  const MultiPoly& coeff_of_power(unsigned k) const { return coeffs.at(m - k); }
  MultiPoly assemble() const;
};

UniView collect_wrt(const MultiPoly& p, VarId main);
// Build a view from descending coefficients; leading zeros are stripped.
UniView make_uniview(VarId main, std::vector<MultiPoly> coeffs_desc);

struct PowerReduction {
  MultiPoly value;       // multiplier * p reduced below the relation's degree
  MultiPoly multiplier;  // relation leading coefficient ^ steps
  unsigned steps = 0;
};

// Eliminates main^k, main^(k+1), ... from p using relation (degree k in main)
// while keeping arithmetic polynomial. Steps = max(0, deg p - k + 1).
PowerReduction substitute_power(const UniView& p, const UniView& relation);

// Pseudo-remainder in the main variable: lc(b)^(deg a - deg b + 1) * a mod b.
MultiPoly prem(const MultiPoly& a, const MultiPoly& b, VarId main);

}  // namespace bezout
