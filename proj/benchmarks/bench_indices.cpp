#include <benchmark/benchmark.h>

#include "nci/indices.hpp"
#include "nci/netgen.hpp"

namespace {

using namespace nci;

WeightVector sized_weights(int n) {
  CounterRng rng(1);
  return sample_simplex_uniform(n, rng);
}

void BM_baseline(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const WeightVector w = sized_weights(n);
  const BinaryGraph g = erdos_renyi(n, 0.3, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(nci_baseline(w, g));
  }
}
BENCHMARK(BM_baseline)->Arg(10)->Arg(100)->Arg(1000);

void BM_weighted(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const WeightVector w = sized_weights(n);
  const InteractionMatrix m =
      InteractionMatrix::from_graph(erdos_renyi(n, 0.3, 7));
  for (auto _ : state) {
    benchmark::DoNotOptimize(nci_weighted(w, m));
  }
}
BENCHMARK(BM_weighted)->Arg(10)->Arg(100)->Arg(500);

void BM_null_model_exact(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const WeightVector w = sized_weights(n);
  const BinaryGraph g = erdos_renyi(n, 0.3, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(nci_null_model(w, g, 0.3));
  }
}
BENCHMARK(BM_null_model_exact)->Arg(10)->Arg(100);

void BM_erdos_renyi(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(erdos_renyi(n, 0.3, seed++));
  }
}
BENCHMARK(BM_erdos_renyi)->Arg(10)->Arg(100);

void BM_simplex_sample(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_simplex_uniform(n, seed++));
  }
}
BENCHMARK(BM_simplex_sample)->Arg(10)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
