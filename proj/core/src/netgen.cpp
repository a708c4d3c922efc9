#include "nci/netgen.hpp"

#include <algorithm>
#include <numeric>

namespace nci {

namespace {

constexpr int kScenarioNodes = 10;
constexpr int kScenarioEdges = 12;

void require_scenario_size(int n, const char* what) {
  if (n != kScenarioNodes) {
    throw UnsupportedSize(std::string(what) + " is defined for n=10 only, got " +
                          std::to_string(n));
  }
}

// The 15 unordered pairs within the peripheral block {4..9}.
std::vector<std::pair<int, int>> peripheral_pairs() {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 4; i < kScenarioNodes; ++i)
    for (int j = i + 1; j < kScenarioNodes; ++j) pairs.emplace_back(i, j);
  return pairs;
}

std::vector<std::pair<int, int>> core_clique() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) edges.emplace_back(i, j);
  return edges;
}

// Choose k of the candidate pairs uniformly (partial Fisher-Yates).
std::vector<std::pair<int, int>> sample_pairs(
    std::vector<std::pair<int, int>> pool, int k, CounterRng& rng) {
  for (int i = 0; i < k; ++i) {
    const std::size_t pick =
        static_cast<std::size_t>(i) +
        static_cast<std::size_t>(rng.next_below(pool.size() - static_cast<std::size_t>(i)));
    std::swap(pool[static_cast<std::size_t>(i)], pool[pick]);
  }
  pool.resize(static_cast<std::size_t>(k));
  return pool;
}

}  // namespace

std::string to_string(ScenarioSpec::Kind kind) {
  switch (kind) {
    case ScenarioSpec::Kind::core_periphery:
      return "core_periphery";
    case ScenarioSpec::Kind::peripheral:
      return "peripheral";
    case ScenarioSpec::Kind::er_random:
      return "er_random";
  }
  return "?";
}

const WeightVector& reference_weights() {
  static const WeightVector w(std::vector<double>{
      0.30, 0.20, 0.15, 0.10, 0.08, 0.06, 0.04, 0.03, 0.02, 0.02});
  return w;
}

BinaryGraph scenario_core_periphery(int n) {
  require_scenario_size(n, "core-periphery scenario");
  std::vector<std::pair<int, int>> edges = core_clique();
  for (int lo : {4, 7}) {
    const int hi = lo + 3;
    for (int i = lo; i < hi; ++i)
      for (int j = i + 1; j < hi; ++j) edges.emplace_back(i, j);
  }
  return BinaryGraph(n, std::move(edges));
}

BinaryGraph scenario_peripheral(int n) {
  require_scenario_size(n, "peripheral scenario");
  const WeightVector& w = reference_weights();
  std::vector<std::pair<int, int>> pool = peripheral_pairs();
  std::stable_sort(pool.begin(), pool.end(), [&](const auto& a, const auto& b) {
    const double pa = w[a.first] * w[a.second];
    const double pb = w[b.first] * w[b.second];
    if (pa != pb) return pa < pb;
    return a < b;
  });
  pool.resize(kScenarioEdges);
  return BinaryGraph(n, std::move(pool));
}

BinaryGraph scenario_core_periphery_random(int n, CounterRng& rng) {
  require_scenario_size(n, "core-periphery scenario");
  std::vector<std::pair<int, int>> edges = core_clique();
  const int cluster_edges = kScenarioEdges - static_cast<int>(edges.size());
  for (auto e : sample_pairs(peripheral_pairs(), cluster_edges, rng)) {
    edges.push_back(e);
  }
  return BinaryGraph(n, std::move(edges));
}

BinaryGraph scenario_core_periphery_random(int n, std::uint64_t seed) {
  CounterRng rng(seed);
  return scenario_core_periphery_random(n, rng);
}

BinaryGraph scenario_peripheral_random(int n, CounterRng& rng) {
  require_scenario_size(n, "peripheral scenario");
  return BinaryGraph(n, sample_pairs(peripheral_pairs(), kScenarioEdges, rng));
}

BinaryGraph scenario_peripheral_random(int n, std::uint64_t seed) {
  CounterRng rng(seed);
  return scenario_peripheral_random(n, rng);
}

BinaryGraph erdos_renyi(int n, double p, CounterRng& rng) {
  if (!(p > 0.0 && p < 1.0)) {
    throw InvalidProbability("link probability must lie in (0,1), got " +
                             std::to_string(p));
  }
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rng.next_bernoulli(p)) edges.emplace_back(i, j);
    }
  }
  return BinaryGraph(n, std::move(edges));
}

BinaryGraph erdos_renyi(int n, double p, std::uint64_t seed) {
  CounterRng rng(seed);
  return erdos_renyi(n, p, rng);
}

WeightVector sample_simplex_uniform(int n, CounterRng& rng) {
  if (n < 2) {
    throw ValidationError("simplex sampling needs n >= 2, got " +
                          std::to_string(n));
  }
  std::vector<double> cuts(static_cast<std::size_t>(n - 1));
  for (double& u : cuts) u = rng.next_unit();
  std::sort(cuts.begin(), cuts.end());
  std::vector<double> gaps(static_cast<std::size_t>(n));
  double prev = 0.0;
  for (std::size_t i = 0; i + 1 < gaps.size(); ++i) {
    gaps[i] = cuts[i] - prev;
    prev = cuts[i];
  }
  gaps.back() = 1.0 - prev;
  return WeightVector(std::move(gaps));
}

WeightVector sample_simplex_uniform(int n, std::uint64_t seed) {
  CounterRng rng(seed);
  return sample_simplex_uniform(n, rng);
}

BinaryGraph generate(const ScenarioSpec& spec) {
  switch (spec.kind) {
    case ScenarioSpec::Kind::core_periphery:
      return scenario_core_periphery(spec.n);
    case ScenarioSpec::Kind::peripheral:
      return scenario_peripheral(spec.n);
    case ScenarioSpec::Kind::er_random: {
      if (!spec.p) {
        throw InvalidProbability("er_random scenario needs a link probability");
      }
      return erdos_renyi(spec.n, *spec.p, spec.seed);
    }
  }
  throw OutOfRange("unknown scenario kind");
}

}  // namespace nci
