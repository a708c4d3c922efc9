#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nci/errors.hpp"

namespace nci {

/// Nonnegative weights on N >= 2 nodes summing to one.
///
/// Inputs whose sum deviates from 1 by more than 1e-6 are rejected; smaller
/// deviations (CSV round-off) are renormalized at construction. The stored
/// vector is immutable.
class WeightVector {
 public:
  explicit WeightVector(std::vector<double> values);

  int size() const { return static_cast<int>(values_.size()); }
  double operator[](int i) const { return values_[static_cast<std::size_t>(i)]; }
  const std::vector<double>& values() const { return values_; }

  /// Sum of the input values before renormalization.
  double raw_sum() const { return raw_sum_; }

  static constexpr double kSumTolerance = 1e-6;

 private:
  std::vector<double> values_;
  double raw_sum_;
};

/// Undirected simple graph: symmetric 0/1 adjacency with zero diagonal.
///
/// Edges are stored as canonical (min, max) pairs, sorted and deduplicated,
/// so symmetry and the empty diagonal hold by construction.
class BinaryGraph {
 public:
  BinaryGraph(int n, std::vector<std::pair<int, int>> edges);

  int node_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  bool has_edge(int i, int j) const;
  std::vector<int> degrees() const;

  static BinaryGraph complete(int n);
  static BinaryGraph empty(int n);

  bool operator==(const BinaryGraph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  int n_;
  std::vector<std::pair<int, int>> edges_;
};

/// Symmetric nonnegative interaction intensities with zero diagonal.
class InteractionMatrix {
 public:
  /// Dense row-major n*n input; must already be symmetric with zero diagonal.
  InteractionMatrix(int n, std::vector<double> dense);

  static InteractionMatrix from_edges(
      int n, const std::vector<std::tuple<int, int, double>>& weighted_edges);
  static InteractionMatrix from_graph(const BinaryGraph& g);
  /// The complete-network benchmark: ones off the diagonal.
  static InteractionMatrix complete(int n);

  int node_count() const { return n_; }
  double at(int i, int j) const {
    return dense_[static_cast<std::size_t>(i) * n_ + j];
  }
  const std::vector<double>& dense() const { return dense_; }

  InteractionMatrix scaled(double c) const;

 private:
  int n_;
  std::vector<double> dense_;
};

/// Degree sequence checked for graphicality (Erdos-Gallai) at construction.
class DegreeSequence {
 public:
  explicit DegreeSequence(std::vector<int> degrees);

  int size() const { return static_cast<int>(degrees_.size()); }
  int operator[](int i) const { return degrees_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& degrees() const { return degrees_; }

  static bool is_graphical(const std::vector<int>& degrees);

 private:
  std::vector<int> degrees_;
};

/// Convex layer weights for the multi-layer index.
class LayerWeights {
 public:
  explicit LayerWeights(std::vector<double> alphas);

  int size() const { return static_cast<int>(alphas_.size()); }
  double operator[](int i) const { return alphas_[static_cast<std::size_t>(i)]; }
  const std::vector<double>& values() const { return alphas_; }

 private:
  std::vector<double> alphas_;
};

/// Elementwise signal transformation applied before network construction.
struct Transformation {
  enum class Kind { square, absolute, exceedance, sqrt_abs };

  Kind kind = Kind::square;
  double tau = 0.0;  // exceedance threshold, must be finite

  static Transformation square() { return {Kind::square, 0.0}; }
  static Transformation absolute() { return {Kind::absolute, 0.0}; }
  static Transformation exceedance(double tau);
  /// Square root of the magnitude (keeps the transform real-valued).
  static Transformation sqrt_abs() { return {Kind::sqrt_abs, 0.0}; }

  double apply(double x) const;
  std::string name() const;
};

/// All concentration measures computed for one (weights, network) pair.
/// Fields are absent when the corresponding variant was not requested or is
/// undefined for the input (e.g. density-adjusted on an empty graph).
struct IndexReport {
  double hhi = 0.0;
  double gini = 0.0;
  double density = 0.0;
  std::optional<double> psi;
  std::optional<double> psi_dens;
  std::optional<double> psi_null;
  std::optional<double> z_null;
  std::optional<double> psi_deg;
  std::optional<double> psi_weighted;
  std::optional<double> psi_transformed;
  std::optional<double> psi_multilayer;
};

}  // namespace nci
