// Throughput of the match samplers. The informal target is >= 1e6
// sequential constant-regime matches per second at n = 50 on one core.

#include <benchmark/benchmark.h>

#include "bestofn/exact.hpp"
#include "bestofn/montecarlo.hpp"

using namespace bestofn;

static void BM_SequentialConstant(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Regime regime = Regime::constant(n, Rational(3, 5));
  Xoshiro256pp rng(7);
  for (auto _ : state)
    benchmark::DoNotOptimize(play_match(regime, rng));
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_SequentialConstant)->Arg(5)->Arg(50)->Arg(500);

static void BM_SequentialPolya(benchmark::State& state) {
  const Regime regime = Regime::polya(static_cast<int>(state.range(0)), 1, 1);
  Xoshiro256pp rng(7);
  for (auto _ : state)
    benchmark::DoNotOptimize(play_match(regime, rng));
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_SequentialPolya)->Arg(5)->Arg(50);

static void BM_PoissonRace(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Xoshiro256pp rng(7);
  for (auto _ : state)
    benchmark::DoNotOptimize(poisson_race_sample(n, 0.6, rng));
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_PoissonRace)->Arg(5)->Arg(50)->Arg(500);

static void BM_ExactRationalDP(benchmark::State& state) {
  const Regime regime =
      Regime::constant(static_cast<int>(state.range(0)), Rational(3, 5));
  for (auto _ : state)
    benchmark::DoNotOptimize(exact_distribution(regime));
}
BENCHMARK(BM_ExactRationalDP)->Arg(16)->Arg(64)->Arg(256)
    ->Unit(benchmark::kMillisecond);

static void BM_ExactFloatDP(benchmark::State& state) {
  const Regime regime =
      Regime::constant(static_cast<int>(state.range(0)), Rational(3, 5));
  for (auto _ : state)
    benchmark::DoNotOptimize(exact_distribution_float(regime));
}
BENCHMARK(BM_ExactFloatDP)->Arg(100)->Arg(1000)->Arg(10000)
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
