#include <benchmark/benchmark.h>

#include "nci/degree_solver.hpp"
#include "nci/netgen.hpp"

namespace {

using namespace nci;

void BM_greedy_max(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  CounterRng rng(3);
  const WeightVector w = sample_simplex_uniform(n, rng);
  const DegreeSequence d(erdos_renyi(n, 0.3, 11).degrees());
  for (auto _ : state) {
    benchmark::DoNotOptimize(greedy_max(w, d));
  }
}
BENCHMARK(BM_greedy_max)->Arg(10)->Arg(50)->Arg(200);

void BM_greedy_rewire(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  CounterRng rng(4);
  const WeightVector w = sample_simplex_uniform(n, rng);
  const DegreeSequence d(erdos_renyi(n, 0.3, 12).degrees());
  for (auto _ : state) {
    benchmark::DoNotOptimize(rewire_refine(greedy_max(w, d), w, 100000));
  }
}
BENCHMARK(BM_greedy_rewire)->Arg(10)->Arg(50);

void BM_exact_max(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  CounterRng rng(5);
  const WeightVector w = sample_simplex_uniform(n, rng);
  const DegreeSequence d(erdos_renyi(n, 0.4, 13).degrees());
  for (auto _ : state) {
    benchmark::DoNotOptimize(exact_max(w, d, 9));
  }
}
BENCHMARK(BM_exact_max)->Arg(6)->Arg(7)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
