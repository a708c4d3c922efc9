#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nci/degree_solver.hpp"
#include "nci/netbuild.hpp"
#include "nci/netgen.hpp"
#include "nci/types.hpp"

namespace nci {

/// One Monte Carlo draw: generator stream, mechanism, and the resulting
/// index report. Failed replications are kept and counted, never dropped.
struct ReplicationRecord {
  std::uint64_t seed = 0;  // per-replication stream id
  ScenarioSpec::Kind scenario = ScenarioSpec::Kind::er_random;
  bool failed = false;
  std::string failure_reason;
  double hhi = 0.0;
  IndexReport report;
};

struct McOptions {
  /// Link probability of the Erdos-Renyi mechanism and of the exact
  /// null-model benchmark (the scenario density 12/45).
  double er_p = 12.0 / 45.0;
  /// Convex weights of the two layers entering the multi-layer variant.
  double alpha1 = 0.6;
  /// Solver mode behind the degree-constrained variant.
  SolverMethod deg_mode = SolverMethod::greedy_rewire;
  int threads = 1;
  /// Abort threshold on the fraction of failed replications.
  double max_failure_fraction = 0.01;
};

/// Experiment with the reference weight profile held fixed: r draws per
/// mechanism (randomized core-periphery, randomized peripheral, Erdos-Renyi),
/// all index variants per draw.
std::vector<ReplicationRecord> experiment_fixed_weights(
    int r, std::uint64_t seed, const McOptions& options = {});

/// Joint experiment: per draw a fresh uniform-simplex weight vector and a
/// fresh graph per mechanism.
std::vector<ReplicationRecord> experiment_joint(int r, std::uint64_t seed,
                                                const McOptions& options = {});

struct ErGridRow {
  double p = 0.0;
  double mean_psi = 0.0;
  double se = 0.0;
  double deviation = 0.0;  // |mean_psi - p|
};

/// Mean baseline index over r Erdos-Renyi draws at every grid probability,
/// with the reference weights held fixed.
std::vector<ErGridRow> validate_er_benchmark(const std::vector<double>& p_grid,
                                             int r, std::uint64_t seed,
                                             const McOptions& options = {});

/// Default validation grid {0.05, 0.10, ..., 0.95}.
std::vector<double> default_er_grid();

struct SummaryRow {
  ScenarioSpec::Kind scenario = ScenarioSpec::Kind::er_random;
  std::string variant;
  int count = 0;
  double mean = 0.0;
  double sd = 0.0;
  double q05 = 0.0, q25 = 0.0, q50 = 0.0, q75 = 0.0, q95 = 0.0;
};

/// Per-mechanism summary statistics of every report column.
std::vector<SummaryRow> summarize(const std::vector<ReplicationRecord>& records);

struct CorrelationTable {
  std::vector<std::string> names;
  std::vector<double> r;  // names.size() x names.size(), row-major

  double at(std::size_t i, std::size_t j) const {
    return r[i * names.size() + j];
  }
};

/// Pearson correlations between the index variants, pooled over mechanisms.
/// Pairwise-complete over non-failed records.
CorrelationTable pooled_variant_correlations(
    const std::vector<ReplicationRecord>& records);

struct ThetaRow {
  double theta = 0.0;
  double nci = 0.0;
  double hhi = 0.0;
  double gini = 0.0;
};

/// Baseline index of the thresholded network along a theta grid. HHI and
/// Gini depend only on the weights and repeat identically on every row.
std::vector<ThetaRow> theta_sweep(const InteractionMatrix& m,
                                  const WeightVector& w,
                                  const std::vector<double>& thetas);

struct RollingResult {
  std::string window_start;
  std::string window_end;
  double nci = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  double hhi = 0.0;
  double gini = 0.0;
  /// Percentile interval missed the point estimate (pathological resamples).
  bool point_outside_ci = false;
};

/// Rolling-window pipeline: correlation -> Mantegna distance -> MST ->
/// baseline index, with a pointwise 95% percentile bootstrap interval from
/// b row-resamples per window.
std::vector<RollingResult> rolling_nci(const ReturnPanel& panel,
                                       const WeightVector& w, int window = 252,
                                       int step = 63, int b = 500,
                                       std::uint64_t seed = 0, int threads = 1);

}  // namespace nci
