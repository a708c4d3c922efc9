#include <doctest.h>

#include "nci/measures.hpp"
#include "nci/netgen.hpp"
#include "test_support.hpp"

using namespace nci;

TEST_SUITE_BEGIN("measures");

TEST_CASE("hhi on the reference profile") {
  CHECK(hhi(reference_weights()) == doctest::Approx(0.1758).epsilon(1e-12));
}

TEST_CASE("hhi at the equal-weight lower bound") {
  const WeightVector w(std::vector<double>(10, 0.1));
  CHECK(hhi(w) == doctest::Approx(0.1).epsilon(1e-14));
  CHECK(hhi(WeightVector({0.5, 0.5})) == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("hhi bounds and equality condition") {
  CounterRng rng(11);
  for (int rep = 0; rep < 2000; ++rep) {
    const int n = 2 + static_cast<int>(rng.next_below(29));
    const WeightVector w = testsup::random_weights(n, rng);
    const double h = hhi(w);
    CHECK(h >= 1.0 / n - 1e-12);
    CHECK(h <= 1.0 + 1e-12);
  }
  // Any unequal vector sits strictly above 1/N.
  CHECK(hhi(WeightVector({0.6, 0.4})) > 0.5 + 1e-3);
}

TEST_CASE("1 - hhi equals the off-diagonal double sum") {
  CounterRng rng(12);
  for (int rep = 0; rep < 2000; ++rep) {
    const int n = 2 + static_cast<int>(rng.next_below(19));
    const WeightVector w = testsup::random_weights(n, rng);
    double cross = 0.0;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i != j) cross += w[i] * w[j];
      }
    }
    CHECK(1.0 - hhi(w) == doctest::Approx(cross).epsilon(1e-12));
  }
}

TEST_CASE("gini of equal weights is zero") {
  CHECK(gini(WeightVector(std::vector<double>(7, 1.0 / 7))) ==
        doctest::Approx(0.0).epsilon(1e-13));
}

TEST_CASE("gini approaches 1 - 1/N for a near-degenerate pair") {
  CHECK(gini(WeightVector({0.999999, 0.000001})) ==
        doctest::Approx(0.499999).epsilon(1e-9));
}

TEST_CASE("gini of the reference profile matches the pairwise oracle") {
  const WeightVector& w = reference_weights();
  const double oracle = testsup::oracle_gini_pairwise(w.values());
  CHECK(oracle == doctest::Approx(0.458).epsilon(1e-12));  // frozen
  CHECK(gini(w) == doctest::Approx(oracle).epsilon(1e-12));
}

TEST_CASE("gini matches the pairwise oracle on random vectors") {
  CounterRng rng(13);
  for (int rep = 0; rep < 500; ++rep) {
    const int n = 2 + static_cast<int>(rng.next_below(29));
    const WeightVector w = testsup::random_weights(n, rng);
    CHECK(gini(w) ==
          doctest::Approx(testsup::oracle_gini_pairwise(w.values())).epsilon(1e-12));
  }
}

TEST_CASE("gini is permutation invariant") {
  CounterRng rng(14);
  for (int rep = 0; rep < 200; ++rep) {
    const int n = 3 + static_cast<int>(rng.next_below(12));
    const WeightVector w = testsup::random_weights(n, rng);
    std::vector<double> shuffled(w.values());
    for (std::size_t k = shuffled.size(); k > 1; --k) {
      std::swap(shuffled[k - 1], shuffled[rng.next_below(k)]);
    }
    CHECK(gini(WeightVector(shuffled)) == doctest::Approx(gini(w)).epsilon(1e-12));
  }
}

TEST_CASE("density of the named graphs") {
  CHECK(density(scenario_core_periphery()) ==
        doctest::Approx(4.0 / 15.0).epsilon(1e-15));
  CHECK(density(BinaryGraph::complete(5)) == 1.0);
  CHECK(density(BinaryGraph::empty(5)) == 0.0);
}

TEST_CASE("density is invariant under node relabeling") {
  CounterRng rng(15);
  for (int rep = 0; rep < 100; ++rep) {
    const int n = 3 + static_cast<int>(rng.next_below(10));
    const BinaryGraph g = testsup::random_graph(n, 0.4, rng);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t k = perm.size(); k > 1; --k) {
      std::swap(perm[k - 1], perm[rng.next_below(k)]);
    }
    std::vector<std::pair<int, int>> relabeled;
    for (auto [i, j] : g.edges()) {
      relabeled.emplace_back(perm[static_cast<std::size_t>(i)],
                             perm[static_cast<std::size_t>(j)]);
    }
    CHECK(density(BinaryGraph(n, relabeled)) == density(g));
  }
}

TEST_CASE("weight vector construction rules") {
  CHECK_THROWS_AS(WeightVector({0.5}), ValidationError);
  CHECK_THROWS_AS(WeightVector({0.7, -0.1, 0.4}), ValidationError);
  CHECK_THROWS_AS(WeightVector({0.5, 0.4}), ValidationError);  // sum 0.9

  // Round-off within tolerance is renormalized.
  const WeightVector w({0.5, 0.4999995});
  CHECK(w.raw_sum() == doctest::Approx(0.9999995));
  double sum = 0.0;
  for (double v : w.values()) sum += v;
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("binary graph canonicalization") {
  const BinaryGraph g(4, {{2, 0}, {0, 2}, {3, 1}});
  CHECK(g.edge_count() == 2);  // duplicates collapse
  CHECK(g.has_edge(0, 2));
  CHECK(g.has_edge(2, 0));
  CHECK(!g.has_edge(0, 1));
  CHECK(g.degrees() == std::vector<int>{1, 1, 1, 1});
  CHECK_THROWS_AS(BinaryGraph(4, {{1, 1}}), ValidationError);
  CHECK_THROWS_AS(BinaryGraph(4, {{0, 4}}), ValidationError);
}

TEST_CASE("interaction matrix validation") {
  CHECK_THROWS_AS(InteractionMatrix(2, {0.0, 1.0, 2.0, 0.0}), ValidationError);
  CHECK_THROWS_AS(InteractionMatrix(2, {0.5, 1.0, 1.0, 0.0}), ValidationError);
  CHECK_THROWS_AS(InteractionMatrix(2, {0.0, -1.0, -1.0, 0.0}), ValidationError);
  const InteractionMatrix m = InteractionMatrix::complete(3);
  CHECK(m.at(0, 1) == 1.0);
  CHECK(m.at(2, 2) == 0.0);
}

TEST_CASE("degree sequence graphicality") {
  CHECK_THROWS_AS(DegreeSequence({1, 1, 1}), NonGraphicalSequence);
  CHECK_THROWS_AS(DegreeSequence({3, 1}), NonGraphicalSequence);
  CHECK_THROWS_AS(DegreeSequence({3, 3, 1, 1}), NonGraphicalSequence);
  CHECK_NOTHROW(DegreeSequence({2, 2, 2, 2}));
  CHECK_NOTHROW(DegreeSequence({0, 0, 0}));
  CHECK(DegreeSequence::is_graphical({3, 3, 3, 3}));
  CHECK(DegreeSequence::is_graphical({4, 1, 1, 1, 1, 0}));  // star + isolate
  CHECK(!DegreeSequence::is_graphical({4, 4, 1, 1, 1, 1}));
}

TEST_CASE("layer weights validation") {
  CHECK_THROWS_AS(LayerWeights({0.5, 0.4}), ValidationError);
  CHECK_THROWS_AS(LayerWeights({1.5, -0.5}), ValidationError);
  CHECK_NOTHROW(LayerWeights({0.6, 0.4}));
}

TEST_CASE("transformations") {
  CHECK(Transformation::square().apply(-3.0) == 9.0);
  CHECK(Transformation::absolute().apply(-2.0) == 2.0);
  CHECK(Transformation::exceedance(0.0).apply(2.0) == 1.0);
  CHECK(Transformation::exceedance(0.0).apply(-1.0) == 0.0);
  CHECK(Transformation::sqrt_abs().apply(4.0) == 2.0);
  CHECK_THROWS_AS(
      Transformation::exceedance(std::numeric_limits<double>::infinity()),
      ValidationError);
}

TEST_SUITE_END();
