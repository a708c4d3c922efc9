#include "nci/indices.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "nci/degree_solver.hpp"
#include "nci/measures.hpp"

namespace nci {

double quadratic_form(const WeightVector& w, const BinaryGraph& g) {
  if (g.node_count() != w.size()) {
    throw ValidationError("weights have " + std::to_string(w.size()) +
                          " entries but graph has " +
                          std::to_string(g.node_count()) + " nodes");
  }
  double sum = 0.0;
  for (auto [i, j] : g.edges()) sum += w[i] * w[j];
  return 2.0 * sum;
}

double quadratic_form(const WeightVector& w, const InteractionMatrix& m) {
  if (m.node_count() != w.size()) {
    throw ValidationError("weights have " + std::to_string(w.size()) +
                          " entries but matrix has " +
                          std::to_string(m.node_count()) + " nodes");
  }
  const int n = w.size();
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) sum += w[i] * w[j] * m.at(i, j);
  }
  return 2.0 * sum;
}

namespace {

double benchmark_denominator(const WeightVector& w) {
  const double lambda = 1.0 - hhi(w);
  if (lambda <= kDegenerateTolerance) {
    throw DegenerateBenchmark(
        "1 - HHI = " + std::to_string(lambda) +
        ": all weight on one node, no pairwise interaction possible");
  }
  return lambda;
}

}  // namespace

double psi_general(const WeightVector& w, const InteractionMatrix& m,
                   const InteractionMatrix& b) {
  const double denom = quadratic_form(w, b);
  if (denom <= kDegenerateTolerance) {
    throw DegenerateBenchmark("benchmark quadratic form w'Bw = " +
                              std::to_string(denom));
  }
  return quadratic_form(w, m) / denom;
}

double nci_baseline(const WeightVector& w, const BinaryGraph& g) {
  return quadratic_form(w, g) / benchmark_denominator(w);
}

double nci_density_adjusted(const WeightVector& w, const BinaryGraph& g) {
  const double delta = density(g);
  if (delta == 0.0) {
    throw EmptyGraph("density-adjusted index undefined on an empty graph");
  }
  return nci_baseline(w, g) / delta;
}

NullModelResult nci_null_model(const WeightVector& w, const BinaryGraph& g,
                               double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw InvalidProbability("link probability must lie in (0,1), got " +
                             std::to_string(p));
  }
  const double lambda = benchmark_denominator(w);
  const double theta = quadratic_form(w, g);

  NullModelResult res;
  res.expected = p * lambda;
  res.psi_null = theta / res.expected;

  double sum_sq = 0.0;  // sum over unordered pairs of (2 w_i w_j)^2
  const int n = w.size();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double t = 2.0 * w[i] * w[j];
      sum_sq += t * t;
    }
  }
  const double var = p * (1.0 - p) * sum_sq;
  if (var > 0.0) {
    res.sd = std::sqrt(var);
    res.z = (theta - res.expected) / *res.sd;
  }
  return res;
}

NullModelResult nci_null_model_mc(const WeightVector& w, const BinaryGraph& g,
                                  McNullModel model, int replications,
                                  std::uint64_t seed) {
  if (replications < 2) {
    throw OutOfRange("null-model estimation needs at least 2 replications");
  }
  benchmark_denominator(w);  // reject degenerate weights up front
  const double theta = quadratic_form(w, g);
  const int n = g.node_count();
  const int m = g.edge_count();

  CounterRng root(seed);
  std::vector<double> draws;
  draws.reserve(static_cast<std::size_t>(replications));
  for (int r = 0; r < replications; ++r) {
    CounterRng rng = root.split(static_cast<std::uint64_t>(r));
    double draw = 0.0;
    if (model == McNullModel::density_preserving) {
      // Sample m distinct pairs uniformly via partial Fisher-Yates over
      // the pair indices.
      const int total = n * (n - 1) / 2;
      std::vector<int> pairs(static_cast<std::size_t>(total));
      std::iota(pairs.begin(), pairs.end(), 0);
      double acc = 0.0;
      for (int k = 0; k < m; ++k) {
        const int pick =
            k + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(total - k)));
        std::swap(pairs[static_cast<std::size_t>(k)],
                  pairs[static_cast<std::size_t>(pick)]);
        // Decode linear pair index to (i, j), i < j.
        int idx = pairs[static_cast<std::size_t>(k)];
        int i = 0;
        while (idx >= n - 1 - i) {
          idx -= n - 1 - i;
          ++i;
        }
        const int j = i + 1 + idx;
        acc += w[i] * w[j];
      }
      draw = 2.0 * acc;
    } else {
      const BinaryGraph sample = random_rewire(g, 10 * std::max(m, 1), rng);
      draw = quadratic_form(w, sample);
    }
    draws.push_back(draw);
  }

  double mean = 0.0;
  for (double d : draws) mean += d;
  mean /= replications;
  double var = 0.0;
  for (double d : draws) var += (d - mean) * (d - mean);
  var /= replications - 1;

  if (mean <= kDegenerateTolerance) {
    throw DegenerateBenchmark("estimated E[w'Aw | model] = " +
                              std::to_string(mean));
  }
  NullModelResult res;
  res.expected = mean;
  res.psi_null = theta / mean;
  // Accumulation noise from identical draws is not a distribution.
  if (var > 1e-24 * mean * mean) {
    res.sd = std::sqrt(var);
    res.z = (theta - mean) / *res.sd;
  }
  return res;
}

double nci_weighted(const WeightVector& w, const InteractionMatrix& m) {
  return quadratic_form(w, m) / benchmark_denominator(w);
}

double nci_transformed(const WeightVector& w,
                       const BinaryGraph& g_transformed) {
  return nci_baseline(w, g_transformed);
}

double nci_multilayer(const WeightVector& w,
                      const std::vector<BinaryGraph>& layers,
                      const LayerWeights& alphas) {
  if (layers.empty()) throw LayerMismatch("no layers given");
  if (static_cast<int>(layers.size()) != alphas.size()) {
    throw LayerMismatch(std::to_string(layers.size()) + " layers but " +
                        std::to_string(alphas.size()) + " layer weights");
  }
  const int n = layers.front().node_count();
  for (const BinaryGraph& layer : layers) {
    if (layer.node_count() != n) {
      throw LayerMismatch("layers disagree on node count: " +
                          std::to_string(n) + " vs " +
                          std::to_string(layer.node_count()));
    }
  }

  // Aggregate sum_l alpha_l A^(l) into one intensity matrix, then evaluate
  // the quadratic form directly.
  std::vector<double> dense(static_cast<std::size_t>(n) * n, 0.0);
  for (std::size_t l = 0; l < layers.size(); ++l) {
    const double a = alphas[static_cast<int>(l)];
    for (auto [i, j] : layers[l].edges()) {
      dense[static_cast<std::size_t>(i) * n + j] += a;
      dense[static_cast<std::size_t>(j) * n + i] += a;
    }
  }
  const InteractionMatrix aggregate(n, std::move(dense));
  return quadratic_form(w, aggregate) / benchmark_denominator(w);
}

}  // namespace nci
