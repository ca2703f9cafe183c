// Recursive primitive-PRS gcd over Q[vars].

#include <algorithm>

#include "bezout/errors.hpp"
#include "bezout/polyring.hpp"

namespace bezout {

namespace {

MultiPoly content_wrt(const MultiPoly& p, VarId v) {
  UniView u = collect_wrt(p, v);
  MultiPoly c(p.vars());
  for (const auto& coef : u.coeffs) {
    if (coef.is_zero()) continue;
    c = c.is_zero() ? coef.primitive_normalized() : gcd(c, coef);
    if (c.is_constant()) break;
  }
  return c;
}

MultiPoly primitive_part_wrt(const MultiPoly& p, VarId v) {
  return divide_or_throw(p, content_wrt(p, v));
}

// Cheapest splitting variable: present in both, smallest combined degree.
std::optional<VarId> pick_variable(const MultiPoly& p, const MultiPoly& q) {
  std::optional<VarId> best;
  unsigned best_cost = 0;
  for (VarId v = 0; v < p.vars()->size(); ++v) {
    unsigned dp = *p.degree_in(v), dq = *q.degree_in(v);
    if (dp == 0 || dq == 0) continue;
    unsigned cost = dp + dq;
    if (!best || cost < best_cost) {
      best = v;
      best_cost = cost;
    }
  }
  return best;
}

}  // namespace

MultiPoly gcd(const MultiPoly& p, const MultiPoly& q) {
  require_same_vars(p, q);
  if (p.is_zero()) return q.primitive_normalized();
  if (q.is_zero()) return p.primitive_normalized();
  if (p.is_constant() || q.is_constant()) return MultiPoly(p.vars(), 1);

  auto shared = pick_variable(p, q);
  if (!shared) {
    // No common variable: the gcd lives in the coefficients w.r.t. any variable of p.
    VarId v = p.support_vars().front();
    return gcd(content_wrt(p, v), q);
  }
  VarId v = *shared;
  MultiPoly cp = content_wrt(p, v), cq = content_wrt(q, v);
  MultiPoly c = gcd(cp, cq);
  MultiPoly a = divide_or_throw(p, cp), b = divide_or_throw(q, cq);
  if (*a.degree_in(v) < *b.degree_in(v)) std::swap(a, b);
  while (!b.is_zero() && *b.degree_in(v) > 0) {
    MultiPoly r = prem(a, b, v);
    a = std::move(b);
    b = r.is_zero() ? r : primitive_part_wrt(r, v);
  }
  MultiPoly g = b.is_zero() ? primitive_part_wrt(a, v) : MultiPoly(p.vars(), 1);
  return (c * g).primitive_normalized();
}

}  // namespace bezout
