#include "bezout/multielim.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "bezout/errors.hpp"

namespace bezout {

namespace {

constexpr std::size_t kMaxVariables = 4;
constexpr std::size_t kMaxEquations = 4;
constexpr unsigned kMaxDegree = 6;
constexpr std::size_t kMaxUnknowns = 400;
constexpr std::size_t kMaxVariations = 64;

using Split = std::map<Monomial, MultiPoly, GrlexGreater>;

std::string monomial_string(const Monomial& m, const VarTable& vars) {
  std::string s;
  for (VarId v = 0; v < m.size(); ++v) {
    if (m[v] == 0) continue;
    if (!s.empty()) s += "*";
    s += vars.name(v);
    if (m[v] > 1) s += "^" + std::to_string(m[v]);
  }
  return s.empty() ? "1" : s;
}

void validate(const PolySystem& sys) {
  if (!sys.vars) throw UsageError("system has no variable table");
  if (sys.equations.empty()) throw UsageError("system has no equations");
  if (sys.keep >= sys.vars->size()) throw UsageError("keep variable out of range");
  std::set<VarId> seen;
  for (VarId v : sys.eliminate) {
    if (v >= sys.vars->size()) throw UsageError("eliminated variable out of range");
    if (v == sys.keep) throw UsageError("the kept variable cannot also be eliminated");
    if (!seen.insert(v).second) throw UsageError("variable listed twice for elimination");
  }
  if (sys.equations.size() != sys.eliminate.size() + 1)
    throw UsageError("system is not square: " + std::to_string(sys.equations.size()) + " equations for " +
                     std::to_string(sys.eliminate.size()) + " eliminated unknowns");
  std::vector<VarId> sysvars(sys.eliminate);
  sysvars.push_back(sys.keep);
  for (const auto& f : sys.equations) {
    require_same_vars(f, MultiPoly(sys.vars));
    if (f.is_zero()) throw DegenerateInput("system contains the zero equation");
  }
  if (!size_guard_enabled()) return;
  if (sysvars.size() > kMaxVariables)
    throw SizeGuardExceeded("desk-scale guard: more than " + std::to_string(kMaxVariables) + " variables");
  if (sys.equations.size() > kMaxEquations)
    throw SizeGuardExceeded("desk-scale guard: more than " + std::to_string(kMaxEquations) + " equations");
  for (const auto& f : sys.equations)
    if (*f.degree_in(sysvars) > kMaxDegree)
      throw SizeGuardExceeded("desk-scale guard: an equation exceeds total degree " + std::to_string(kMaxDegree));
}

struct Setup {
  const PolySystem* sys = nullptr;
  std::vector<VarId> mvars;  // variables the multipliers range over
  std::vector<bool> in_m;
  std::vector<Split> split;  // per equation: monomial in mvars -> coefficient
  std::vector<unsigned> t;
};

Setup prepare(const PolySystem& sys, bool with_keep) {
  validate(sys);
  Setup s;
  s.sys = &sys;
  s.mvars = sys.eliminate;
  if (with_keep) s.mvars.push_back(sys.keep);
  std::sort(s.mvars.begin(), s.mvars.end());
  s.in_m.assign(sys.vars->size(), false);
  for (VarId v : s.mvars) s.in_m[v] = true;
  for (const auto& f : sys.equations) {
    Split sp;
    for (const auto& [m, c] : f.terms()) {
      Monomial key(m.size(), 0), rest(m);
      for (VarId v = 0; v < m.size(); ++v)
        if (s.in_m[v]) {
          key[v] = m[v];
          rest[v] = 0;
        }
      sp.try_emplace(key, sys.vars).first->second.add_term(rest, c);
    }
    // Checked on the eliminated unknowns alone: under method 1 the kept variable
    // would otherwise mask an equation that is already an eliminant.
    if (!f.degree_in(sys.eliminate).value_or(0)) throw UsageError("an equation does not involve the eliminated unknowns");
    unsigned deg = total_degree(sp.begin()->first);
    s.t.push_back(deg);
    s.split.push_back(std::move(sp));
  }
  return s;
}

std::vector<Monomial> complete_monomials(std::size_t width, const std::vector<VarId>& vars, unsigned degree) {
  std::vector<Monomial> out;
  Monomial cur(width, 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
    if (i == vars.size()) {
      out.push_back(cur);
      return;
    }
    for (unsigned e = 0; e <= left; ++e) {
      cur[vars[i]] = e;
      rec(i + 1, left - e);
    }
    cur[vars[i]] = 0;
  };
  rec(0, degree);
  std::sort(out.begin(), out.end(), GrlexGreater());
  return out;
}

// Options for the arbitrary equation attached to equation l: its designated
// monomial, then its other monomials; the index one past the end rejects.
std::vector<Monomial> nu_options(const Setup& s, const MultiplierPlan& plan, std::size_t l) {
  std::vector<Monomial> opts{plan.designated[l]};
  for (const auto& [m, c] : s.split[l])
    if (m != plan.designated[l]) opts.push_back(m);
  return opts;
}

// Every equation takes a pure power of its own multiplier variable; false if
// no assignment has all designated coefficients present.
bool designate_all_powers(const Setup& s, MultiplierPlan& plan) {
  const std::size_t n = plan.designation_order.size();
  std::vector<VarId> perm = s.mvars;
  do {
    bool present = true;
    std::vector<Monomial> d(n, Monomial(s.sys->vars->size(), 0));
    for (std::size_t pos = 0; pos < n && present; ++pos) {
      std::size_t l = plan.designation_order[pos];
      d[l][perm[pos]] = s.t[l];
      present = s.split[l].count(d[l]) > 0;
    }
    if (present) {
      plan.designated = std::move(d);
      return true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Variation 0 designates every nu. Later variations choose per equation so
// that arbitrary equations sharing unknowns do not move in lockstep.
std::size_t option_pick(unsigned variation, std::size_t index, std::size_t options) {
  if (variation == 0) return 0;
  std::uint64_t z = (static_cast<std::uint64_t>(variation) << 32) ^ index;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  z ^= z >> 31;
  return static_cast<std::size_t>(z % options);
}

MultiplierPlan build_plan(const Setup& s, const std::string& method, unsigned S, unsigned variation) {
  const PolySystem& sys = *s.sys;
  const std::size_t n = sys.equations.size();
  const std::size_t width = sys.vars->size();
  MultiplierPlan plan;
  plan.method = method;
  plan.multiplier_vars = s.mvars;
  plan.equation_degrees = s.t;
  plan.somme_degree = S;
  plan.variation = variation;
  for (std::size_t l = 0; l < n; ++l) {
    if (S < s.t[l]) throw std::logic_error("equation-somme degree below an equation degree");
    plan.multiplier_degrees.push_back(S - s.t[l]);
    plan.multiplier_monomials.push_back(complete_monomials(width, s.mvars, S - s.t[l]));
    plan.unknowns += plan.multiplier_monomials.back().size();
  }
  plan.designation_order.resize(n);
  std::iota(plan.designation_order.begin(), plan.designation_order.end(), 0);
  std::stable_sort(plan.designation_order.begin(), plan.designation_order.end(),
                   [&](std::size_t a, std::size_t b) { return s.t[a] > s.t[b]; });
  // Later equations take pure powers of the eliminated unknowns; prefer the
  // first assignment in which every designated coefficient is present.
  std::vector<VarId> order = sys.eliminate;
  auto designate = [&](const std::vector<VarId>& assign) {
    plan.designated.assign(n, Monomial(width, 0));
    bool present = true;
    for (std::size_t pos = 0; pos < n; ++pos) {
      std::size_t l = plan.designation_order[pos];
      if (pos == 0) {
        plan.designated[l] = s.split[l].begin()->first;
      } else {
        plan.designated[l][assign[pos - 1]] = s.t[l];
        present = present && s.split[l].count(plan.designated[l]) > 0;
      }
    }
    return present;
  };
  std::vector<VarId> perm = order;
  std::sort(perm.begin(), perm.end());
  bool found = false;
  do {
    if (designate(perm)) {
      order = perm;
      found = true;
      break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  // Method 1 may also designate pure powers of the kept variable.
  bool all_powers = !found && method == "somme1" && s.mvars.size() == n && designate_all_powers(s, plan);
  if (!all_powers) designate(found ? order : sys.eliminate);
  plan.removable.assign(n, {});
  for (std::size_t pos = 0; pos < n; ++pos) {
    std::size_t l = plan.designation_order[pos];
    for (const auto& mu : plan.multiplier_monomials[l]) {
      bool absorbable = false;
      for (std::size_t later = std::max<std::size_t>(pos + 1, 1); later < n && !absorbable; ++later)
        absorbable = divides(plan.designated[plan.designation_order[later]], mu);
      if (absorbable) plan.removable[l].push_back(mu);
    }
    plan.surplus_count += static_cast<unsigned>(plan.removable[l].size());
  }
  std::size_t index = 0;
  for (std::size_t pos = 0; pos < n; ++pos) {
    std::size_t l = plan.designation_order[pos];
    for (const auto& mu : plan.removable[l]) {
      ArbitraryEquation a;
      a.equation = l;
      a.mu = mu;
      for (std::size_t k = 0; k < n; ++k)
        if (s.t[k] == s.t[l]) a.partners.push_back(k);
      auto opts = nu_options(s, plan, l);
      std::size_t pick = option_pick(variation, index++, opts.size() + 1);
      if (pick < opts.size()) a.nu = opts[pick];
      plan.arbitrary_equations.push_back(std::move(a));
    }
  }
  return plan;
}

struct Assembled {
  RingMatrix matrix;
  std::vector<std::string> row_labels;
  std::vector<std::string> column_labels;
  std::vector<MultiPoly> keep_row;  // method 1 only: pure-keep part per column
};

// Rows: monomials of the equation-somme (minus pure-keep ones for method 1),
// each arbitrary equation right after the row of mu*nu. Columns: multiplier
// monomial (grlex, descending), then equation index.
Assembled assemble(const Setup& s, const MultiplierPlan& plan, bool drop_pure_keep) {
  const PolySystem& sys = *s.sys;
  const VarTable& vt = *sys.vars;
  const std::size_t width = vt.size();
  auto pure_keep = [&](const Monomial& m) {
    for (VarId v = 0; v < width; ++v)
      if (v != sys.keep && m[v] > 0) return false;
    return true;
  };

  std::vector<std::pair<Monomial, std::size_t>> cols;
  for (std::size_t l = 0; l < plan.multiplier_monomials.size(); ++l)
    for (const auto& mu : plan.multiplier_monomials[l]) cols.emplace_back(mu, l);
  std::sort(cols.begin(), cols.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return GrlexGreater()(a.first, b.first);
    return a.second < b.second;
  });
  std::map<std::pair<Monomial, std::size_t>, std::size_t> col_index;
  for (std::size_t j = 0; j < cols.size(); ++j) col_index[cols[j]] = j;

  struct RowSpec {
    std::string label;
    std::optional<Monomial> mono;
    const ArbitraryEquation* arb = nullptr;
  };
  std::vector<RowSpec> rows;
  std::vector<Monomial> somme = complete_monomials(width, s.mvars, plan.somme_degree);
  std::vector<const ArbitraryEquation*> pending;
  for (const auto& a : plan.arbitrary_equations) pending.push_back(&a);
  auto anchor = [&](const ArbitraryEquation& a) {
    return monomial_mul(a.mu, a.nu ? *a.nu : plan.designated[a.equation]);
  };
  auto arb_label = [&](const ArbitraryEquation& a) {
    std::string lbl = "arbitrary: ";
    if (!a.nu) return lbl + "M" + std::to_string(a.equation + 1) + "[" + monomial_string(a.mu, vt) + "] = 0";
    for (std::size_t i = 0; i < a.partners.size(); ++i) {
      if (i) lbl += " + ";
      lbl += "M" + std::to_string(a.partners[i] + 1) + "[" + monomial_string(a.mu, vt) + "]*F" +
             std::to_string(a.partners[i] + 1) + "[" + monomial_string(*a.nu, vt) + "]";
    }
    return lbl + " = 0";
  };
  for (const auto& m : somme) {
    if (drop_pure_keep && pure_keep(m)) continue;
    rows.push_back({monomial_string(m, vt), m, nullptr});
    for (auto& p : pending) {
      if (p && anchor(*p) == m) {
        rows.push_back({arb_label(*p), std::nullopt, p});
        p = nullptr;
      }
    }
  }
  for (auto* p : pending)
    if (p) rows.push_back({arb_label(*p), std::nullopt, p});

  Assembled out{RingMatrix(sys.vars, rows.size(), cols.size()), {}, {}, {}};
  std::map<Monomial, std::size_t> row_of;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out.row_labels.push_back(rows[i].label);
    if (rows[i].mono) row_of[*rows[i].mono] = i;
  }
  out.keep_row.assign(cols.size(), MultiPoly(sys.vars));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    const auto& [mu, l] = cols[j];
    out.column_labels.push_back("M" + std::to_string(l + 1) + "[" + monomial_string(mu, vt) + "]");
    for (const auto& [kappa, c] : s.split[l]) {
      Monomial rho = monomial_mul(mu, kappa);
      auto it = row_of.find(rho);
      if (it != row_of.end()) {
        out.matrix.at(it->second, j) += c;
      } else if (drop_pure_keep && pure_keep(rho)) {
        out.keep_row[j] += c.mul_monomial(rho);
      } else {
        throw std::logic_error("equation-somme monomial without a row");
      }
    }
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const ArbitraryEquation* a = rows[i].arb;
    if (!a) continue;
    if (!a->nu) {
      out.matrix.at(i, col_index.at({a->mu, a->equation})) = MultiPoly(sys.vars, 1);
      continue;
    }
    for (std::size_t l : a->partners) {
      auto it = s.split[l].find(*a->nu);
      if (it != s.split[l].end()) out.matrix.at(i, col_index.at({a->mu, l})) = it->second;
    }
  }
  return out;
}

unsigned product_of(const std::vector<unsigned>& t) {
  return std::accumulate(t.begin(), t.end(), 1u, std::multiplies<>());
}

unsigned system_degree_ceiling(const PolySystem& sys) {
  std::vector<VarId> sysvars(sys.eliminate);
  sysvars.push_back(sys.keep);
  unsigned c = 1;
  for (const auto& f : sys.equations) c *= *f.degree_in(sysvars);
  return c;
}

void trace_plan(std::vector<std::string>& tr, const PolySystem& sys, const MultiplierPlan& plan) {
  const VarTable& vt = *sys.vars;
  std::ostringstream os;
  os << "method: " << plan.method << " (variation " << plan.variation << ")";
  tr.push_back(os.str());
  std::string elim;
  for (VarId v : sys.eliminate) elim += (elim.empty() ? "" : " ") + vt.name(v);
  tr.push_back("eliminate: " + elim + "; keep: " + vt.name(sys.keep));
  std::string mv;
  for (VarId v : plan.multiplier_vars) mv += (mv.empty() ? "" : " ") + vt.name(v);
  tr.push_back("multiplier variables: " + mv);
  for (std::size_t l = 0; l < sys.equations.size(); ++l)
    tr.push_back("F" + std::to_string(l + 1) + " (degree " + std::to_string(plan.equation_degrees[l]) +
                 "): " + sys.equations[l].to_string());
  tr.push_back("equation-somme degree: " + std::to_string(plan.somme_degree));
  for (std::size_t l = 0; l < plan.multiplier_monomials.size(); ++l) {
    std::string ms;
    for (const auto& m : plan.multiplier_monomials[l]) ms += (ms.empty() ? "" : " ") + monomial_string(m, vt);
    tr.push_back("M" + std::to_string(l + 1) + " degree " + std::to_string(plan.multiplier_degrees[l]) + ": " + ms);
  }
  std::string eq = "equation-somme: ";
  for (std::size_t l = 0; l < sys.equations.size(); ++l) eq += (l ? " + " : "") + ("M" + std::to_string(l + 1) + "*F" + std::to_string(l + 1));
  tr.push_back(eq);
  tr.push_back("unknown coefficients: " + std::to_string(plan.unknowns) +
               ", surplus coefficients: " + std::to_string(plan.surplus_count));
  for (std::size_t l = 0; l < plan.removable.size(); ++l)
    for (const auto& m : plan.removable[l])
      tr.push_back("removable: M" + std::to_string(l + 1) + "[" + monomial_string(m, vt) + "]");
}

void trace_matrix(std::vector<std::string>& tr, const Assembled& a) {
  tr.push_back("coefficient system: " + std::to_string(a.matrix.rows()) + " x " + std::to_string(a.matrix.cols()));
  std::string head = "columns:";
  for (const auto& c : a.column_labels) head += " " + c;
  tr.push_back(head);
  for (std::size_t i = 0; i < a.matrix.rows(); ++i) {
    std::string line = "  " + a.row_labels[i] + " |";
    for (std::size_t j = 0; j < a.matrix.cols(); ++j) line += " " + a.matrix.at(i, j).to_string();
    tr.push_back(line);
  }
}

struct CoreResult {
  MultiplierPlan plan;
  Assembled assembled;
  MultiPoly apparent;
};

CoreResult method2_core(const Setup& s, unsigned variation) {
  unsigned S = 1;
  for (unsigned d : s.t) S += d - 1;
  MultiplierPlan plan = build_plan(s, "somme2", S, variation);
  Assembled a = assemble(s, plan, false);
  plan.conditions = a.matrix.rows();
  if (!a.matrix.square())
    throw UsageError("inconsistent system shape: " + std::to_string(a.matrix.rows()) + " conditions for " +
                     std::to_string(a.matrix.cols()) + " coefficients");
  MultiPoly det = determinant(a.matrix);
  return CoreResult{std::move(plan), std::move(a), std::move(det)};
}

CoreResult method1_core(const Setup& s, unsigned variation) {
  const PolySystem& sys = *s.sys;
  unsigned S = product_of(s.t);
  MultiplierPlan plan = build_plan(s, "somme1", S, variation);
  if (size_guard_enabled() && plan.unknowns > kMaxUnknowns)
    throw SizeGuardExceeded("desk-scale guard: method 1 needs " + std::to_string(plan.unknowns) + " coefficients");
  Assembled a = assemble(s, plan, true);
  plan.conditions = a.matrix.rows();
  const std::size_t U = a.matrix.cols();
  if (a.matrix.rows() + 1 != U)
    throw UsageError("inconsistent system shape: " + std::to_string(a.matrix.rows()) + " conditions for " +
                     std::to_string(U) + " coefficients (expected one free scale)");
  MultiPoly det(sys.vars);
  if (a.matrix.all_constant()) {
    // det [A; r] = lambda * sum v_j r_j with v spanning ker A and lambda fixed by one cofactor.
    auto rows = to_rationals(a.matrix);
    if (rank_rational(rows) == U - 1) {
      auto v = *nullspace_vector(a.matrix);
      std::size_t j = 0;
      while (v[j] == 0) ++j;
      std::vector<std::vector<Rational>> minor(rows.size());
      for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t k = 0; k < U; ++k)
          if (k != j) minor[i].push_back(rows[i][k]);
      Rational cof = det_rational(std::move(minor));
      if ((U - 1 + j) % 2 == 1) cof = -cof;
      Rational lambda = cof / v[j];
      for (std::size_t k = 0; k < U; ++k)
        if (v[k] != 0) det += a.keep_row[k] * (lambda * v[k]);
    }
  } else {
    det = determinant(a.matrix.with_row(a.keep_row));
  }
  return CoreResult{std::move(plan), std::move(a), std::move(det)};
}

EliminationReport base_report(const PolySystem& sys, const std::string& method, CoreResult core) {
  EliminationReport r{method, sys.vars, sys.keep, core.apparent, core.apparent, MultiPoly(sys.vars, 1),
                      std::nullopt, std::move(core.plan), std::move(core.assembled.matrix),
                      std::move(core.assembled.row_labels), std::move(core.assembled.column_labels),
                      {}, {}, {}, system_degree_ceiling(sys), {}};
  r.run_variations.push_back(r.plan.variation);
  r.run_apparents.push_back(r.apparent);
  return r;
}

}  // namespace

PolySystem make_system(std::vector<MultiPoly> equations, VarId keep, std::vector<VarId> eliminate) {
  if (equations.empty()) throw UsageError("system has no equations");
  PolySystem s{std::move(equations), nullptr, keep, std::move(eliminate)};
  s.vars = s.equations.front().vars();
  if (s.eliminate.empty())
    for (VarId v = 0; v < s.vars->size(); ++v)
      if (v != keep) s.eliminate.push_back(v);
  return s;
}

unsigned keep_degree(const MultiPoly& p, VarId keep) { return p.is_zero() ? 0 : *p.degree_in(keep); }

MultiplierPlan plan_method1(const PolySystem& sys, unsigned variation) {
  Setup s = prepare(sys, true);
  return build_plan(s, "somme1", product_of(s.t), variation);
}

MultiplierPlan plan_method2(const PolySystem& sys, unsigned variation) {
  Setup s = prepare(sys, false);
  unsigned S = 1;
  for (unsigned d : s.t) S += d - 1;
  return build_plan(s, "somme2", S, variation);
}

unsigned surplus_count(const MultiplierPlan& plan) { return plan.surplus_count; }

unsigned surplus_count(const PolySystem& sys, const std::string& method) {
  if (method == "somme1") return plan_method1(sys).surplus_count;
  if (method == "somme2") return plan_method2(sys).surplus_count;
  throw UsageError("surplus_count: unknown method '" + method + "'");
}

unsigned variation_count(const MultiplierPlan& plan, const PolySystem& sys) {
  if (plan.arbitrary_equations.empty()) return 1;
  Setup s = prepare(sys, plan.method == "somme1");
  // Distinct combinations of per-equation choices, capped.
  std::size_t combos = 1;
  for (const auto& a : plan.arbitrary_equations) {
    combos *= nu_options(s, plan, a.equation).size() + 1;
    if (combos >= kMaxVariations) return static_cast<unsigned>(kMaxVariations);
  }
  return static_cast<unsigned>(combos);
}

namespace {

std::vector<std::string> full_trace(const PolySystem& sys, const EliminationReport& r) {
  std::vector<std::string> tr;
  trace_plan(tr, sys, r.plan);
  if (r.matrix) {
    Assembled a{*r.matrix, r.row_labels, r.column_labels, {}};
    trace_matrix(tr, a);
  }
  return tr;
}

// First variation at or after `variation` whose apparent resultant is nonzero.
// Coincident coefficients can make one choice of arbitrary equations singular;
// if every choice vanishes the zero is reported as is.
template <class Core>
EliminationReport first_nondegenerate(const PolySystem& sys, const std::string& method, const Setup& s,
                                      unsigned variation, Core core_fn) {
  CoreResult core = core_fn(s, variation);
  std::vector<unsigned> degenerate;
  if (core.apparent.is_zero()) {
    unsigned count = variation_count(core.plan, sys);
    for (unsigned k = 1; k < count; ++k) {
      CoreResult alt = core_fn(s, variation + k);
      if (alt.apparent.is_zero()) continue;
      for (unsigned d = 0; d < k; ++d) degenerate.push_back(variation + d);
      core = std::move(alt);
      break;
    }
  }
  EliminationReport r = base_report(sys, method, std::move(core));
  r.degenerate_variations = std::move(degenerate);
  return r;
}

}  // namespace

EliminationReport method1_eliminate(const PolySystem& sys, unsigned variation) {
  Setup s = prepare(sys, true);
  EliminationReport r = first_nondegenerate(sys, "somme1", s, variation, method1_core);
  if (r.apparent.is_zero())
    throw CommonComponent("method 1 determinant vanishes under every arbitrary-equation variation: the equations "
                          "share a component or a common point at infinity once the kept variable is homogenized");
  r.trace = full_trace(sys, r);
  for (unsigned d : r.degenerate_variations)
    r.trace.push_back("variation " + std::to_string(d) + " degenerate (zero determinant)");
  r.trace.push_back("final line: " + r.apparent.to_string());
  return r;
}

EliminationReport method2_eliminate(const PolySystem& sys, unsigned variation) {
  Setup s = prepare(sys, false);
  EliminationReport r = first_nondegenerate(sys, "somme2", s, variation, method2_core);
  variation = r.plan.variation;
  r.trace = full_trace(sys, r);
  for (unsigned d : r.degenerate_variations)
    r.trace.push_back("variation " + std::to_string(d) + " degenerate (zero determinant)");
  r.trace.push_back("final line: " + r.apparent.to_string());
  if (r.apparent.is_zero() || r.plan.surplus_count == 0) return r;
  // Flag the factor that changes under the next non-degenerate variation.
  unsigned count = variation_count(r.plan, sys);
  for (unsigned k = 1; k < count; ++k) {
    CoreResult alt = method2_core(s, variation + k);
    if (alt.apparent.is_zero()) {
      r.degenerate_variations.push_back(variation + k);
      continue;
    }
    MultiPoly g = gcd(r.apparent, alt.apparent);
    r.candidate_superfluous = divide_or_throw(r.apparent, g);
    r.resultant = g;
    r.stripped_factor = *r.candidate_superfluous;
    r.run_variations.push_back(variation + k);
    r.run_apparents.push_back(alt.apparent);
    r.trace.push_back("candidate superfluous factor (moves under variation " + std::to_string(variation + k) +
                      "): " + r.candidate_superfluous->to_string());
    break;
  }
  return r;
}

EliminationReport strip_superfluous(const PolySystem& sys, unsigned runs, unsigned seed) {
  if (runs < 1) throw UsageError("strip_superfluous: runs must be >= 1");
  Setup s = prepare(sys, false);
  std::optional<EliminationReport> first;
  std::vector<MultiPoly> apparents;
  std::vector<unsigned> used, degenerate;
  unsigned count = 1;
  for (unsigned k = 0; k < count && apparents.size() < runs; ++k) {
    CoreResult core = method2_core(s, seed + k);
    if (k == 0) count = variation_count(core.plan, sys);
    if (core.apparent.is_zero()) {
      degenerate.push_back(seed + k);
      continue;
    }
    apparents.push_back(core.apparent);
    used.push_back(seed + k);
    if (!first) first = base_report(sys, "strip", std::move(core));
  }
  if (apparents.empty())
    throw CommonComponent("every arbitrary-equation variation gives a zero apparent resultant: "
                          "the equations share a common component (remove their common divisor first)");
  EliminationReport r = std::move(*first);
  MultiPoly g = apparents.front().primitive_normalized();
  for (std::size_t i = 1; i < apparents.size(); ++i) g = gcd(g, apparents[i]);
  r.resultant = g;
  r.stripped_factor = divide_or_throw(r.apparent, g);
  r.run_variations = used;
  r.run_apparents = apparents;
  r.degenerate_variations = degenerate;
  r.trace = full_trace(sys, r);
  for (std::size_t i = 0; i < apparents.size(); ++i)
    r.trace.push_back("run " + std::to_string(i + 1) + " (variation " + std::to_string(used[i]) +
                      ") apparent: " + apparents[i].to_string());
  for (unsigned d : degenerate) r.trace.push_back("variation " + std::to_string(d) + " degenerate (zero determinant)");
  r.trace.push_back("gcd over runs: " + g.to_string());
  r.trace.push_back("stripped factor: " + r.stripped_factor.to_string());
  return r;
}

}  // namespace bezout
