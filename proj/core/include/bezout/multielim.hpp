#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bezout/exactla.hpp"
#include "bezout/polyring.hpp"

namespace bezout {

// n equations; `eliminate` lists the n-1 unknowns to remove, `keep` survives.
// Every other variable of the table is a symbolic parameter.
struct PolySystem {
  std::vector<MultiPoly> equations;
  VarTablePtr vars;
  VarId keep = 0;
  std::vector<VarId> eliminate;
};

// Defaults `eliminate` to every variable except keep.
PolySystem make_system(std::vector<MultiPoly> equations, VarId keep, std::vector<VarId> eliminate = {});

// Constraint on multiplier coefficients that the elimination leaves free.
// With nu set: sum over partners l of coef(M_l, mu) * coef(F_l, nu) = 0.
// Without nu the coefficient coef(M_equation, mu) is rejected (set to zero).
struct ArbitraryEquation {
  std::size_t equation = 0;
  Monomial mu;
  std::optional<Monomial> nu;
  std::vector<std::size_t> partners;
};

struct MultiplierPlan {
  std::string method;
  std::vector<VarId> multiplier_vars;
  std::vector<unsigned> equation_degrees;
  unsigned somme_degree = 0;
  std::vector<unsigned> multiplier_degrees;
  std::vector<std::vector<Monomial>> multiplier_monomials;
  // Equations in designation order; position s >= 1 owns eliminate[s-1]^t.
  std::vector<std::size_t> designation_order;
  std::vector<Monomial> designated;
  std::vector<std::vector<Monomial>> removable;
  unsigned surplus_count = 0;
  std::vector<ArbitraryEquation> arbitrary_equations;
  unsigned variation = 0;
  std::size_t unknowns = 0;
  std::size_t conditions = 0;
};

struct EliminationReport {
  std::string method;
  VarTablePtr vars;
  VarId keep = 0;
  MultiPoly resultant;
  MultiPoly apparent;
  MultiPoly stripped_factor;
  // Factor of the apparent resultant that moved under a second variation.
  std::optional<MultiPoly> candidate_superfluous;
  MultiplierPlan plan;
  std::optional<RingMatrix> matrix;
  std::vector<std::string> row_labels;
  std::vector<std::string> column_labels;
  std::vector<unsigned> run_variations;
  std::vector<MultiPoly> run_apparents;
  std::vector<unsigned> degenerate_variations;
  unsigned degree_ceiling = 0;
  std::vector<std::string> trace;
};

MultiplierPlan plan_method1(const PolySystem& sys, unsigned variation = 0);
MultiplierPlan plan_method2(const PolySystem& sys, unsigned variation = 0);

unsigned surplus_count(const MultiplierPlan& plan);
unsigned surplus_count(const PolySystem& sys, const std::string& method);

// Number of distinct arbitrary-equation choices the family cycles through.
unsigned variation_count(const MultiplierPlan& plan, const PolySystem& sys);

EliminationReport method1_eliminate(const PolySystem& sys, unsigned variation = 0);
EliminationReport method2_eliminate(const PolySystem& sys, unsigned variation = 0);
EliminationReport strip_superfluous(const PolySystem& sys, unsigned runs = 3, unsigned seed = 0);

// Degree of p in the keep variable (0 for zero).
unsigned keep_degree(const MultiPoly& p, VarId keep);

}  // namespace bezout
