#include <doctest.h>

#include <cmath>

#include "nci/indices.hpp"
#include "nci/measures.hpp"
#include "nci/netgen.hpp"
#include "test_support.hpp"

using namespace nci;

TEST_SUITE_BEGIN("indices");

TEST_CASE("psi_general is one when numerator and benchmark coincide") {
  CounterRng rng(21);
  for (int rep = 0; rep < 200; ++rep) {
    const int n = 2 + static_cast<int>(rng.next_below(9));
    const WeightVector w = testsup::random_weights(n, rng);
    const InteractionMatrix m(n, testsup::random_sym_dense(n, rng));
    CHECK(psi_general(w, m, m) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("psi_general homogeneity in the numerator matrix") {
  CounterRng rng(22);
  const WeightVector w = testsup::random_weights(8, rng);
  const InteractionMatrix b(8, testsup::random_sym_dense(8, rng));
  const InteractionMatrix half = b.scaled(0.5);
  CHECK(psi_general(w, half, b) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("psi_general reproduces the scenario value") {
  const WeightVector& w = reference_weights();
  const InteractionMatrix m = InteractionMatrix::from_graph(scenario_core_periphery());
  const InteractionMatrix b = InteractionMatrix::complete(10);
  CHECK(psi_general(w, m, b) == doctest::Approx(0.514).epsilon(1e-3));
  CHECK(psi_general(w, m, b) == doctest::Approx(nci_baseline(w, scenario_core_periphery()))
                                    .epsilon(1e-12));
}

TEST_CASE("psi_general rejects a degenerate benchmark") {
  const WeightVector w({0.5, 0.5});
  const InteractionMatrix zero(2, {0.0, 0.0, 0.0, 0.0});
  const InteractionMatrix b = InteractionMatrix::complete(2);
  CHECK_THROWS_AS(psi_general(w, b, zero), DegenerateBenchmark);
}

TEST_CASE("baseline on the core-periphery scenario, frozen") {
  // Numerator 2 x 0.212 = 0.424 over the 12 edges, denominator 0.8242.
  CHECK(nci_baseline(reference_weights(), scenario_core_periphery()) ==
        doctest::Approx(0.5144382431448677).epsilon(1e-12));
}

TEST_CASE("baseline with equal weights equals density") {
  CounterRng rng(23);
  for (int rep = 0; rep < 1000; ++rep) {
    const int n = 2 + static_cast<int>(rng.next_below(14));
    const WeightVector w(std::vector<double>(static_cast<std::size_t>(n), 1.0 / n));
    const BinaryGraph g = testsup::random_graph(n, rng.next_unit(), rng);
    CHECK(nci_baseline(w, g) == doctest::Approx(density(g)).epsilon(1e-12));
  }
}

TEST_CASE("baseline on a complete network is one") {
  CounterRng rng(24);
  for (int rep = 0; rep < 200; ++rep) {
    const int n = 2 + static_cast<int>(rng.next_below(12));
    const WeightVector w = testsup::random_weights(n, rng);
    CHECK(nci_baseline(w, BinaryGraph::complete(n)) ==
          doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("baseline raises when all weight sits on one node") {
  const WeightVector w({1.0, 1e-13});
  CHECK_THROWS_AS(nci_baseline(w, BinaryGraph::complete(2)), DegenerateBenchmark);
}

TEST_CASE("weighted-average representation") {
  CounterRng rng(25);
  for (int rep = 0; rep < 2000; ++rep) {
    const int n = 2 + static_cast<int>(rng.next_below(11));
    const WeightVector w = testsup::random_weights(n, rng);
    const std::vector<double> dense = testsup::random_sym_dense(n, rng);
    const InteractionMatrix m(n, dense);

    double num = 0.0, den = 0.0;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        num += w[i] * w[j] * dense[static_cast<std::size_t>(i) * n + j];
        den += w[i] * w[j];
      }
    }
    CHECK(nci_weighted(w, m) == doctest::Approx(num / den).epsilon(1e-12));
  }
}

TEST_CASE("assortative-connectivity decomposition") {
  CounterRng rng(26);
  for (int rep = 0; rep < 1000; ++rep) {
    const int n = 3 + static_cast<int>(rng.next_below(10));
    const WeightVector w = testsup::random_weights(n, rng);
    const BinaryGraph g = testsup::random_graph(n, 0.3 + 0.5 * rng.next_unit(), rng);
    if (g.edge_count() == 0) continue;

    double linked_sum = 0.0, all_sum = 0.0;
    long long linked_pairs = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        all_sum += w[i] * w[j];
        if (g.has_edge(i, j)) {
          linked_sum += w[i] * w[j];
          ++linked_pairs;
        }
      }
    }
    const double mean_linked = linked_sum / static_cast<double>(linked_pairs);
    const double mean_all = all_sum / (static_cast<double>(n) * (n - 1));
    const double decomposed = density(g) * mean_linked / mean_all;
    CHECK(nci_baseline(w, g) == doctest::Approx(decomposed).epsilon(1e-12));
  }
}

TEST_CASE("permutation invariance of the baseline") {
  CounterRng rng(27);
  for (int rep = 0; rep < 1000; ++rep) {
    const int n = 3 + static_cast<int>(rng.next_below(10));
    const WeightVector w = testsup::random_weights(n, rng);
    const BinaryGraph g = testsup::random_graph(n, 0.5, rng);

    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t k = perm.size(); k > 1; --k) {
      std::swap(perm[k - 1], perm[rng.next_below(k)]);
    }
    std::vector<double> pw(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pw[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = w[i];
    std::vector<std::pair<int, int>> pe;
    for (auto [i, j] : g.edges()) {
      pe.emplace_back(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
    }
    CHECK(nci_baseline(WeightVector(pw), BinaryGraph(n, pe)) ==
          doctest::Approx(nci_baseline(w, g)).epsilon(1e-12));
  }
}

TEST_CASE("baseline bounds under binary adjacency") {
  CounterRng rng(28);
  for (int rep = 0; rep < 2000; ++rep) {
    const int n = 2 + static_cast<int>(rng.next_below(14));
    const WeightVector w = testsup::random_weights(n, rng);
    const BinaryGraph g = testsup::random_graph(n, rng.next_unit(), rng);
    const double psi = nci_baseline(w, g);
    CHECK(psi >= 0.0);
    CHECK(psi <= 1.0 + 1e-12);
  }
}

TEST_CASE("adding an edge never decreases the baseline") {
  CounterRng rng(29);
  for (int rep = 0; rep < 500; ++rep) {
    const int n = 3 + static_cast<int>(rng.next_below(8));
    const WeightVector w = testsup::random_weights(n, rng);
    const BinaryGraph g = testsup::random_graph(n, 0.5, rng);
    std::vector<std::pair<int, int>> absent;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (!g.has_edge(i, j)) absent.emplace_back(i, j);
      }
    }
    if (absent.empty()) continue;
    auto edges = g.edges();
    edges.push_back(absent[rng.next_below(absent.size())]);
    CHECK(nci_baseline(w, BinaryGraph(n, edges)) >= nci_baseline(w, g) - 1e-15);
  }
}

TEST_CASE("null model matches observation exactly at the benchmark") {
  // Equal weights and a graph whose density equals p: expectation is met.
  const int n = 10;
  const WeightVector w(std::vector<double>(n, 0.1));
  CounterRng rng(30);
  const BinaryGraph g = testsup::random_graph(n, 0.5, rng);
  const double p = density(g);
  if (p > 0.0 && p < 1.0) {
    const NullModelResult res = nci_null_model(w, g, p);
    CHECK(res.psi_null == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(*res.z == doctest::Approx(0.0).epsilon(1e-9));
  }
}

TEST_CASE("null model equals baseline over p under the closed form") {
  CounterRng rng(31);
  for (int rep = 0; rep < 500; ++rep) {
    const int n = 3 + static_cast<int>(rng.next_below(10));
    const WeightVector w = testsup::random_weights(n, rng);
    const BinaryGraph g = testsup::random_graph(n, 0.5, rng);
    const double p = 0.05 + 0.9 * rng.next_unit();
    const NullModelResult res = nci_null_model(w, g, p);
    CHECK(res.psi_null ==
          doctest::Approx(nci_baseline(w, g) / p).epsilon(1e-12));
  }
}

TEST_CASE("null model rejects probabilities outside (0,1)") {
  const WeightVector& w = reference_weights();
  const BinaryGraph g = scenario_core_periphery();
  CHECK_THROWS_AS(nci_null_model(w, g, 0.0), InvalidProbability);
  CHECK_THROWS_AS(nci_null_model(w, g, 1.0), InvalidProbability);
  CHECK_THROWS_AS(nci_null_model(w, g, -0.2), InvalidProbability);
  CHECK_THROWS_AS(nci_null_model(w, g, 1.2), InvalidProbability);
}

TEST_CASE("null-model variance formula against a simulation estimate") {
  const WeightVector& w = reference_weights();
  const double p = 0.3;
  const int r = 20000;
  CounterRng rng(32);
  double sum = 0.0, sum_sq = 0.0;
  for (int k = 0; k < r; ++k) {
    const double theta = quadratic_form(w, erdos_renyi(10, p, rng));
    sum += theta;
    sum_sq += theta * theta;
  }
  const double mean = sum / r;
  const double sample_var = (sum_sq - r * mean * mean) / (r - 1);

  const NullModelResult res = nci_null_model(w, scenario_core_periphery(), p);
  const double formula_var = (*res.sd) * (*res.sd);
  // Sampling error of a variance estimate is of order var * sqrt(2/r).
  CHECK(sample_var == doctest::Approx(formula_var).epsilon(0.1));
  CHECK(mean == doctest::Approx(p * (1.0 - hhi(w))).epsilon(0.02));
}

TEST_CASE("configuration-model benchmark on a complete graph is exact") {
  // No valid degree-preserving swap exists, so every draw is the graph itself.
  CounterRng rng(33);
  const WeightVector w = testsup::random_weights(6, rng);
  const BinaryGraph g = BinaryGraph::complete(6);
  const NullModelResult res =
      nci_null_model_mc(w, g, McNullModel::configuration, 200, 7);
  CHECK(res.psi_null == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(!res.sd.has_value());
}

TEST_CASE("density-preserving benchmark expectation matches delta * lambda") {
  CounterRng rng(34);
  const WeightVector& w = reference_weights();
  const BinaryGraph g = scenario_core_periphery();
  const int r = 4000;
  const NullModelResult res =
      nci_null_model_mc(w, g, McNullModel::density_preserving, r, 99);
  // Under uniform placement of the observed edge count, E[w'Aw] is
  // density * (1 - HHI).
  const double expected = density(g) * (1.0 - hhi(w));
  const double se = *res.sd / std::sqrt(static_cast<double>(r));
  CHECK(std::abs(res.expected - expected) < 3.0 * se);
}

TEST_CASE("mc null model is deterministic in the seed") {
  const WeightVector& w = reference_weights();
  const BinaryGraph g = scenario_core_periphery();
  const NullModelResult a =
      nci_null_model_mc(w, g, McNullModel::configuration, 300, 5);
  const NullModelResult b =
      nci_null_model_mc(w, g, McNullModel::configuration, 300, 5);
  CHECK(a.psi_null == b.psi_null);
  CHECK(a.expected == b.expected);
}

TEST_CASE("weighted index normalizes to one on the complete benchmark") {
  CounterRng rng(35);
  for (int rep = 0; rep < 200; ++rep) {
    const int n = 2 + static_cast<int>(rng.next_below(10));
    const WeightVector w = testsup::random_weights(n, rng);
    CHECK(nci_weighted(w, InteractionMatrix::complete(n)) ==
          doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("weighted index homogeneity against the baseline") {
  CounterRng rng(36);
  for (int rep = 0; rep < 200; ++rep) {
    const int n = 3 + static_cast<int>(rng.next_below(8));
    const WeightVector w = testsup::random_weights(n, rng);
    const BinaryGraph g = testsup::random_graph(n, 0.5, rng);
    const InteractionMatrix doubled = InteractionMatrix::from_graph(g).scaled(2.0);
    CHECK(nci_weighted(w, doubled) ==
          doctest::Approx(2.0 * nci_baseline(w, g)).epsilon(1e-12));
  }
}

TEST_CASE("transformed index is the baseline on the transformed graph") {
  const WeightVector& w = reference_weights();
  const BinaryGraph g = scenario_core_periphery();
  CHECK(nci_transformed(w, g) == nci_baseline(w, g));
  CHECK(nci_transformed(w, BinaryGraph::empty(10)) == 0.0);
}

TEST_CASE("multi-layer index with one layer is the baseline") {
  const WeightVector& w = reference_weights();
  const BinaryGraph g = scenario_core_periphery();
  CHECK(nci_multilayer(w, {g}, LayerWeights({1.0})) ==
        doctest::Approx(nci_baseline(w, g)).epsilon(1e-12));
}

TEST_CASE("multi-layer index on identical layers is the single-layer value") {
  const WeightVector& w = reference_weights();
  const BinaryGraph g = scenario_core_periphery();
  CHECK(nci_multilayer(w, {g, g}, LayerWeights({0.3, 0.7})) ==
        doctest::Approx(nci_baseline(w, g)).epsilon(1e-12));
}

TEST_CASE("multi-layer convex-combination identity") {
  CounterRng rng(37);
  for (int rep = 0; rep < 1000; ++rep) {
    const int n = 3 + static_cast<int>(rng.next_below(8));
    const WeightVector w = testsup::random_weights(n, rng);
    const int layers_n = 2 + static_cast<int>(rng.next_below(3));
    std::vector<BinaryGraph> layers;
    std::vector<double> alphas(static_cast<std::size_t>(layers_n));
    double alpha_sum = 0.0;
    for (int l = 0; l < layers_n; ++l) {
      layers.push_back(testsup::random_graph(n, 0.5, rng));
      alphas[static_cast<std::size_t>(l)] = rng.next_unit() + 0.01;
      alpha_sum += alphas[static_cast<std::size_t>(l)];
    }
    for (double& a : alphas) a /= alpha_sum;
    const LayerWeights lw(alphas);

    double convex = 0.0;
    for (int l = 0; l < layers_n; ++l) {
      convex += lw[l] * nci_baseline(w, layers[static_cast<std::size_t>(l)]);
    }
    CHECK(nci_multilayer(w, layers, lw) == doctest::Approx(convex).epsilon(1e-12));
  }
}

TEST_CASE("multi-layer node-count mismatch raises") {
  const WeightVector& w = reference_weights();
  const BinaryGraph g = scenario_core_periphery();
  const BinaryGraph small = BinaryGraph::complete(5);
  CHECK_THROWS_AS(nci_multilayer(w, {g, small}, LayerWeights({0.5, 0.5})),
                  LayerMismatch);
  CHECK_THROWS_AS(nci_multilayer(w, {g}, LayerWeights({0.5, 0.5})),
                  LayerMismatch);
}

TEST_SUITE_END();
