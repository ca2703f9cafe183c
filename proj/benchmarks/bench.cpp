#include <benchmark/benchmark.h>

#include <random>

#include "bezout/counting.hpp"
#include "bezout/multielim.hpp"
#include "bezout/resultant2.hpp"

using namespace bezout;

namespace {

UniView random_uni(std::mt19937_64& rng, const VarTablePtr& v, unsigned deg) {
  std::uniform_int_distribution<long> d(-9, 9);
  MultiPoly p(v);
  for (unsigned k = 0; k <= deg; ++k) p.add_term({k}, Rational(k == deg ? d(rng) | 1 : d(rng)));
  return collect_wrt(p, 0);
}

void BM_SylvesterResultant(benchmark::State& state) {
  auto v = make_vars({"x"});
  std::mt19937_64 rng(1);
  unsigned m = static_cast<unsigned>(state.range(0));
  UniView f = random_uni(rng, v, m), g = random_uni(rng, v, m);
  for (auto _ : state) benchmark::DoNotOptimize(resultant(f, g));
}
BENCHMARK(BM_SylvesterResultant)->DenseRange(2, 8, 2);

void BM_BezoutianDeterminant(benchmark::State& state) {
  auto v = make_vars({"x"});
  std::mt19937_64 rng(2);
  unsigned m = static_cast<unsigned>(state.range(0));
  UniView f = random_uni(rng, v, m), g = random_uni(rng, v, m);
  for (auto _ : state) benchmark::DoNotOptimize(determinant(bezoutian_matrix(f, g).matrix));
}
BENCHMARK(BM_BezoutianDeterminant)->DenseRange(2, 8, 2);

void BM_SymbolicQuadraticPair(benchmark::State& state) {
  auto v = make_vars({"x", "A", "B", "C", "A'", "B'", "C'"});
  auto s = [&](VarId i) { return MultiPoly::variable(v, i); };
  MultiPoly x = s(0), f = s(1) * x * x + s(2) * x + s(3), g = s(4) * x * x + s(5) * x + s(6);
  for (auto _ : state) benchmark::DoNotOptimize(resultant(f, g, 0));
}
BENCHMARK(BM_SymbolicQuadraticPair);

void BM_TermsAfterRemovals(benchmark::State& state) {
  RemovalSpec spec{{{0, 3}, {1, 2}, {2, 2}}};
  for (auto _ : state) benchmark::DoNotOptimize(terms_after_removals(6, state.range(0), spec));
}
BENCHMARK(BM_TermsAfterRemovals)->Arg(10)->Arg(40);

void BM_QuadricAndPlanes(benchmark::State& state) {
  auto v = make_vars({"x", "y", "z"});
  MultiPoly x = MultiPoly::variable(v, 0), y = MultiPoly::variable(v, 1), z = MultiPoly::variable(v, 2), one(v, 1);
  PolySystem sys = make_system({x * x + Rational(2) * y * z - z * z + x - one, x + Rational(3) * y - z + Rational(2) * one,
                                Rational(2) * x - y + Rational(5) * z - one},
                               0);
  bool strip = state.range(0) == 1;
  for (auto _ : state) benchmark::DoNotOptimize(strip ? strip_superfluous(sys) : method1_eliminate(sys));
}
BENCHMARK(BM_QuadricAndPlanes)->Arg(0)->Arg(1);

}  // namespace
BENCHMARK_MAIN();
