#pragma once

#include <utility>
#include <vector>

#include "bezout/polyring.hpp"

namespace bezout {

// Steps are applied in listed order: X -> X(v + k) - X.
struct DiffSpec {
  std::vector<std::pair<VarId, MultiPoly>> steps;
};

// Remove monomials divisible by var^power for each listed (var, power).
struct RemovalSpec {
  std::vector<std::pair<unsigned, unsigned>> bounds;
};

// Terms of a complete polynomial of degree T in n variables; 0 for T < 0.
Integer num_terms_complete(long n, long T);

MultiPoly finite_difference(const MultiPoly& p, const DiffSpec& spec);

// Iterated difference of T -> N(n, T) with steps the removal powers.
Integer terms_after_removals(long n, long T, const RemovalSpec& spec);

Rational progression_lemma_sum(const std::vector<Rational>& first_row, const Rational& k);

// Product of the degrees; throws std::logic_error if the difference form disagrees.
Integer resultant_degree_complete(const std::vector<unsigned>& degrees);

// (1/n!) d^n [(T+t)^n] with steps t, t1, ..., as a polynomial in a fresh variable T.
MultiPoly degree_theorem_difference(const std::vector<unsigned>& degrees);

// Three-equation degree bound for a chosen n''.
long degree_bound_3eq_1764(long m, long m1, long m2, long p, long p1, long p2, long n2);
bool degree_bound_3eq_feasible(long m, long m1, long m2, long n2);
// Stationary point of the bound in n''.
Rational degree_bound_3eq_optimizer(long m, long m1, long m2, long p, long p1, long p2);
// All feasible n'' with their bounds.
std::vector<std::pair<long, long>> degree_bound_3eq_sweep(long m, long m1, long m2, long p, long p1, long p2);

}  // namespace bezout
