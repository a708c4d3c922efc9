#include <benchmark/benchmark.h>

#include <cmath>
#include <string>
#include <vector>

#include "nci/netbuild.hpp"
#include "nci/rng.hpp"

namespace {

using namespace nci;

ReturnPanel synthetic_panel(int t, int n) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("A" + std::to_string(i));
  std::vector<std::string> stamps;
  for (int r = 0; r < t; ++r) stamps.push_back("t" + std::to_string(100000 + r));
  CounterRng rng(6);
  std::vector<double> data(static_cast<std::size_t>(t) * n);
  for (double& v : data) v = rng.next_unit() - 0.5;
  return ReturnPanel(labels, stamps, data);
}

void BM_correlation(benchmark::State& state) {
  const ReturnPanel panel =
      synthetic_panel(static_cast<int>(state.range(0)), 20);
  for (auto _ : state) {
    benchmark::DoNotOptimize(correlation_matrix(panel));
  }
}
BENCHMARK(BM_correlation)->Arg(252)->Arg(1000);

void BM_mst(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  CounterRng rng(8);
  std::vector<double> dense(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double d = 0.1 + rng.next_unit();
      dense[static_cast<std::size_t>(i) * n + j] = d;
      dense[static_cast<std::size_t>(j) * n + i] = d;
    }
  }
  const SymmetricMatrix dist(n, dense);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mst(dist));
  }
}
BENCHMARK(BM_mst)->Arg(20)->Arg(100)->Arg(500);

void BM_window_pipeline(benchmark::State& state) {
  const ReturnPanel panel =
      synthetic_panel(static_cast<int>(state.range(0)), 20);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        mst(mantegna_distances(correlation_matrix(panel))));
  }
}
BENCHMARK(BM_window_pipeline)->Arg(126)->Arg(252)->Arg(504);

}  // namespace

BENCHMARK_MAIN();
