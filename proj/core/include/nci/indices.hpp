#pragma once

#include <cstdint>
#include <optional>

#include "nci/rng.hpp"
#include "nci/types.hpp"

namespace nci {

/// w' A w over a binary adjacency: twice the sum of w_i w_j over edges.
double quadratic_form(const WeightVector& w, const BinaryGraph& g);

/// w' M w over a symmetric zero-diagonal intensity matrix.
double quadratic_form(const WeightVector& w, const InteractionMatrix& m);

/// Tolerance below which a benchmark quadratic form counts as degenerate.
inline constexpr double kDegenerateTolerance = 1e-12;

/// General two-matrix index: w'Mw / w'Bw.
///
/// Throws DegenerateBenchmark when w'Bw falls below kDegenerateTolerance
/// (for the complete-network benchmark this means all weight on one node).
double psi_general(const WeightVector& w, const InteractionMatrix& m,
                   const InteractionMatrix& b);

/// Baseline index: w'Aw / (1 - HHI), in [0, 1] for binary adjacency.
double nci_baseline(const WeightVector& w, const BinaryGraph& g);

/// Baseline divided by network density; the assortative-connectivity ratio.
/// Throws EmptyGraph when the graph has no edges.
double nci_density_adjusted(const WeightVector& w, const BinaryGraph& g);

struct NullModelResult {
  double psi_null = 0.0;
  /// Standardized deviation of w'Aw from its benchmark expectation.
  std::optional<double> z;
  /// Benchmark expectation E[w'Aw | model].
  double expected = 0.0;
  /// Benchmark standard deviation of w'Aw, when available.
  std::optional<double> sd;
};

/// Null-model index against an Erdos-Renyi benchmark with link probability p.
///
/// Closed form: E[w'Aw] = p(1 - HHI) and
/// Var[w'Aw] = p(1-p) * sum_{i<j} (2 w_i w_j)^2 for independent edges.
NullModelResult nci_null_model(const WeightVector& w, const BinaryGraph& g,
                               double p);

/// Stochastic benchmarks whose expectation has no closed form here and is
/// estimated by Monte Carlo instead.
enum class McNullModel {
  /// Uniform over graphs with the observed number of edges.
  density_preserving,
  /// Degree-preserving randomization of the observed graph (edge swaps).
  configuration,
};

/// Null-model index with a simulated benchmark expectation. The generator
/// stream is derived from (seed), so results are reproducible.
NullModelResult nci_null_model_mc(const WeightVector& w, const BinaryGraph& g,
                                  McNullModel model, int replications = 2000,
                                  std::uint64_t seed = 0);

/// Weighted index: w'Ww / (1 - HHI) for an intensity matrix W.
double nci_weighted(const WeightVector& w, const InteractionMatrix& m);

/// Transformed-data index: baseline arithmetic on the network built from
/// transformed signals. The transformation itself lives in netbuild.
double nci_transformed(const WeightVector& w, const BinaryGraph& g_transformed);

/// Multi-layer index on the convex layer aggregate sum_l alpha_l A^(l),
/// evaluated directly as a quadratic form on the aggregated matrix.
double nci_multilayer(const WeightVector& w,
                      const std::vector<BinaryGraph>& layers,
                      const LayerWeights& alphas);

}  // namespace nci
