#include "maxvisit/bounds.hpp"
#include "maxvisit/oracle.hpp"
#include "maxvisit/walk.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace maxvisit;

void BM_RecursiveBound(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Rational x(2 * n + 1, 7);
  for (auto _ : state) {
    BoundTable table;
    benchmark::DoNotOptimize(d_recursive(n, x, table));
  }
}
BENCHMARK(BM_RecursiveBound)->Arg(10)->Arg(20)->Arg(30);

void BM_ClosedFormBound(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Rational x(2 * n + 1, 7);
  for (auto _ : state) benchmark::DoNotOptimize(d_value(n, x, Method::Closed));
}
BENCHMARK(BM_ClosedFormBound)->Arg(10)->Arg(20)->Arg(30);

void BM_ExactChain(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Rational x(2 * n + 1, 7);
  for (auto _ : state) benchmark::DoNotOptimize(exact_chain_probability(n, x));
}
BENCHMARK(BM_ExactChain)->Arg(10)->Arg(20);

void BM_MonteCarlo(benchmark::State& state) {
  long long paths = state.range(0);
  for (auto _ : state)
    benchmark::DoNotOptimize(monte_carlo_estimate(8, Rational(3), paths, 7));
  state.SetItemsProcessed(state.iterations() * paths);
}
BENCHMARK(BM_MonteCarlo)->Arg(1000)->Arg(10000);

void BM_EnvelopeLevel(benchmark::State& state) {
  for (auto _ : state) {
    EnvelopeOracle oracle(static_cast<int>(state.range(0)), 1e-2, 5.0);
    benchmark::DoNotOptimize(oracle.value(static_cast<int>(state.range(0)), 1.5));
  }
}
BENCHMARK(BM_EnvelopeLevel)->Arg(2)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
