#include <benchmark/benchmark.h>

#include <cstddef>

#include "laddermat/determinantal.hpp"
#include "laddermat/groebner.hpp"
#include "laddermat/ladder.hpp"
#include "laddermat/matrix.hpp"
#include "laddermat/recovery.hpp"
#include "laddermat/sampling.hpp"

namespace {

using namespace laddermat;

RationalMatrix random_square(std::size_t n, std::uint64_t seed) {
  SplitRng rng(seed);
  RationalMatrix X(n, n);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) X.at(i, j) = Rational(rng.uniform_int(-99, 99));
  return X;
}

void BM_determinant_bareiss(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  RationalMatrix X = random_square(n, 7);
  for (auto _ : state) benchmark::DoNotOptimize(determinant(X));
}
BENCHMARK(BM_determinant_bareiss)->Arg(4)->Arg(6)->Arg(8);

void BM_rank(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  RationalMatrix X = random_low_rank(n, n, n / 2, 7);
  for (auto _ : state) benchmark::DoNotOptimize(rank(X));
}
BENCHMARK(BM_rank)->Arg(4)->Arg(6)->Arg(8);

void BM_minor_groebner_certification(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  VariableGrid grid(Ladder::trivial(n, n));
  for (auto _ : state) {
    OpBudget budget(100000000);
    benchmark::DoNotOptimize(verify_gb_minors(grid, 1, &budget));
  }
}
BENCHMARK(BM_minor_groebner_certification)->Arg(3)->Arg(4);

void BM_buchberger_minors(benchmark::State& state) {
  VariableGrid grid(Ladder::trivial(3, 3));
  IdealBasis gens = det_ideal(grid, 1);
  VarOrder ord = diagonal_order(grid);
  for (auto _ : state) {
    OpBudget budget(100000000);
    benchmark::DoNotOptimize(buchberger(gens, ord, &budget));
  }
}
BENCHMARK(BM_buchberger_minors);

void BM_enumerate_ladders(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_ladders(3, n));
}
BENCHMARK(BM_enumerate_ladders)->Arg(3)->Arg(4);

void BM_verify_uniqueness(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  RationalMatrix X = random_low_rank(n, n, 1, 1);
  Ladder L = Ladder::trivial(n, n);
  for (auto _ : state) benchmark::DoNotOptimize(verify_uniqueness(X, L, 1));
}
BENCHMARK(BM_verify_uniqueness)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
