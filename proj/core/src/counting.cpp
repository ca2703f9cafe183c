#include "bezout/counting.hpp"

#include <functional>
#include <set>

#include "bezout/errors.hpp"

namespace bezout {

Integer num_terms_complete(long n, long T) {
  if (n < 1) throw UsageError("num_terms_complete: n must be >= 1");
  if (T < 0) return 0;
  return binomial(T + n, n);
}

MultiPoly finite_difference(const MultiPoly& p, const DiffSpec& spec) {
  MultiPoly x(p);
  for (const auto& [v, k] : spec.steps) {
    if (v >= p.vars()->size()) throw UsageError("finite_difference: unknown variable id");
    x = x.substitute(v, MultiPoly::variable(p.vars(), v) + k) - x;
  }
  return x;
}

Integer terms_after_removals(long n, long T, const RemovalSpec& spec) {
  std::set<unsigned> seen;
  for (const auto& [var, power] : spec.bounds) {
    if (power < 1) throw UsageError("terms_after_removals: powers must be >= 1");
    if (var >= static_cast<unsigned long>(n)) throw UsageError("terms_after_removals: variable index out of range");
    if (!seen.insert(var).second) throw UsageError("terms_after_removals: each variable may be listed once");
  }
  // X_0(T) = N(n,T); X_k(T) = X_{k-1}(T) - X_{k-1}(T - P_k).
  std::function<Integer(std::size_t, long)> X = [&](std::size_t k, long t) -> Integer {
    if (k == 0) return num_terms_complete(n, t);
    long P = spec.bounds[k - 1].second;
    return X(k - 1, t) - X(k - 1, t - P);
  };
  return X(spec.bounds.size(), T);
}

Rational progression_lemma_sum(const std::vector<Rational>& first_row, const Rational& k) {
  if (first_row.empty()) throw UsageError("progression_lemma_sum: n must be >= 1");
  Rational s = 0;
  for (const auto& v : first_row) s += v;
  long n = static_cast<long>(first_row.size());
  return s + k * Rational(n * (n - 1) / 2);
}

MultiPoly degree_theorem_difference(const std::vector<unsigned>& degrees) {
  if (degrees.empty()) throw UsageError("degree list is empty");
  for (unsigned d : degrees)
    if (d < 1) throw UsageError("degrees must be >= 1");
  auto vars = make_vars({"T"});
  const unsigned n = static_cast<unsigned>(degrees.size());
  MultiPoly T = MultiPoly::variable(vars, 0);
  MultiPoly x = (T + MultiPoly(vars, degrees.front())).pow(n);
  DiffSpec spec;
  for (unsigned d : degrees) spec.steps.emplace_back(0, MultiPoly(vars, d));
  Integer fact = 1;
  for (unsigned i = 2; i <= n; ++i) fact *= i;
  return finite_difference(x, spec) * Rational(1, fact);
}

Integer resultant_degree_complete(const std::vector<unsigned>& degrees) {
  Integer product = 1;
  for (unsigned d : degrees) product *= d;
  MultiPoly form = degree_theorem_difference(degrees);
  if (!form.is_constant() || form.constant_value() != Rational(product))
    throw std::logic_error("difference form disagrees with the degree product: " + form.to_string());
  return product;
}

bool degree_bound_3eq_feasible(long m, long m1, long m2, long n2) {
  const long n = m1 - n2 - 2;  // degree of the multiplier of the first equation
  const long n1 = m - n2 - 2;  // degree of the multiplier of the second equation
  return n2 >= 0 && n >= 0 && n1 >= 0 && m + n >= m2 + n2;
}

long degree_bound_3eq_1764(long m, long m1, long m2, long p, long p1, long p2, long n2) {
  if (!degree_bound_3eq_feasible(m, m1, m2, n2))
    throw UsageError("degree_bound_3eq_1764: n'' = " + std::to_string(n2) + " violates the feasibility constraints");
  return m * m1 + p * m1 + p1 * m - m - m1 + m2 - p - p1 + p2 + 1 - (p + p1 - p2 + m + m1 - m2 - n2 - 2) * n2;
}

Rational degree_bound_3eq_optimizer(long m, long m1, long m2, long p, long p1, long p2) {
  return Rational(m + m1 + m2 + p + p1 + p2) / 2 - m2 - p2 - 1;
}

std::vector<std::pair<long, long>> degree_bound_3eq_sweep(long m, long m1, long m2, long p, long p1, long p2) {
  std::vector<std::pair<long, long>> out;
  for (long n2 = 0; n2 <= std::max(m, m1); ++n2)
    if (degree_bound_3eq_feasible(m, m1, m2, n2))
      out.emplace_back(n2, degree_bound_3eq_1764(m, m1, m2, p, p1, p2, n2));
  return out;
}

}  // namespace bezout
