#include "nci/types.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace nci {

WeightVector::WeightVector(std::vector<double> values)
    : values_(std::move(values)) {
  if (values_.size() < 2) {
    throw ValidationError("weight vector needs at least 2 entries, got " +
                          std::to_string(values_.size()));
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    const double v = values_[i];
    if (!std::isfinite(v)) {
      throw ValidationError("weight " + std::to_string(i) + " is not finite");
    }
    if (v < 0.0) {
      throw ValidationError("weight " + std::to_string(i) +
                            " is negative: " + std::to_string(v));
    }
  }
  raw_sum_ = std::accumulate(values_.begin(), values_.end(), 0.0);
  if (std::abs(raw_sum_ - 1.0) > kSumTolerance) {
    throw ValidationError("weights sum to " + std::to_string(raw_sum_) +
                          ", expected 1 within " + std::to_string(kSumTolerance));
  }
  for (double& v : values_) v /= raw_sum_;
}

BinaryGraph::BinaryGraph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
  if (n_ < 2) {
    throw ValidationError("graph needs at least 2 nodes, got " +
                          std::to_string(n_));
  }
  edges_.reserve(edges.size());
  for (auto [i, j] : edges) {
    if (i == j) {
      throw ValidationError("self-loop on node " + std::to_string(i));
    }
    if (i < 0 || j < 0 || i >= n_ || j >= n_) {
      throw ValidationError("edge (" + std::to_string(i) + "," +
                            std::to_string(j) + ") out of range for n=" +
                            std::to_string(n_));
    }
    edges_.emplace_back(std::min(i, j), std::max(i, j));
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool BinaryGraph::has_edge(int i, int j) const {
  if (i == j) return false;
  const std::pair<int, int> e{std::min(i, j), std::max(i, j)};
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::vector<int> BinaryGraph::degrees() const {
  std::vector<int> deg(static_cast<std::size_t>(n_), 0);
  for (auto [i, j] : edges_) {
    ++deg[static_cast<std::size_t>(i)];
    ++deg[static_cast<std::size_t>(j)];
  }
  return deg;
}

BinaryGraph BinaryGraph::complete(int n) {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return BinaryGraph(n, std::move(edges));
}

BinaryGraph BinaryGraph::empty(int n) { return BinaryGraph(n, {}); }

InteractionMatrix::InteractionMatrix(int n, std::vector<double> dense)
    : n_(n), dense_(std::move(dense)) {
  if (n_ < 2) {
    throw ValidationError("interaction matrix needs n >= 2, got " +
                          std::to_string(n_));
  }
  if (dense_.size() != static_cast<std::size_t>(n_) * n_) {
    throw ValidationError("interaction matrix storage has " +
                          std::to_string(dense_.size()) + " entries, expected " +
                          std::to_string(static_cast<std::size_t>(n_) * n_));
  }
  for (int i = 0; i < n_; ++i) {
    if (at(i, i) != 0.0) {
      throw ValidationError("interaction matrix diagonal entry (" +
                            std::to_string(i) + "," + std::to_string(i) +
                            ") is nonzero");
    }
    for (int j = 0; j < n_; ++j) {
      const double v = at(i, j);
      if (!std::isfinite(v) || v < 0.0) {
        throw ValidationError("interaction matrix entry (" + std::to_string(i) +
                              "," + std::to_string(j) + ") invalid: " +
                              std::to_string(v));
      }
      if (v != at(j, i)) {
        throw ValidationError("interaction matrix asymmetric at (" +
                              std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
  }
}

InteractionMatrix InteractionMatrix::from_edges(
    int n, const std::vector<std::tuple<int, int, double>>& weighted_edges) {
  std::vector<double> dense(static_cast<std::size_t>(n) * n, 0.0);
  for (auto [i, j, v] : weighted_edges) {
    if (i == j) throw ValidationError("self-loop on node " + std::to_string(i));
    if (i < 0 || j < 0 || i >= n || j >= n) {
      throw ValidationError("edge (" + std::to_string(i) + "," +
                            std::to_string(j) + ") out of range");
    }
    dense[static_cast<std::size_t>(i) * n + j] = v;
    dense[static_cast<std::size_t>(j) * n + i] = v;
  }
  return InteractionMatrix(n, std::move(dense));
}

InteractionMatrix InteractionMatrix::from_graph(const BinaryGraph& g) {
  const int n = g.node_count();
  std::vector<double> dense(static_cast<std::size_t>(n) * n, 0.0);
  for (auto [i, j] : g.edges()) {
    dense[static_cast<std::size_t>(i) * n + j] = 1.0;
    dense[static_cast<std::size_t>(j) * n + i] = 1.0;
  }
  return InteractionMatrix(n, std::move(dense));
}

InteractionMatrix InteractionMatrix::complete(int n) {
  std::vector<double> dense(static_cast<std::size_t>(n) * n, 1.0);
  for (int i = 0; i < n; ++i) dense[static_cast<std::size_t>(i) * n + i] = 0.0;
  return InteractionMatrix(n, std::move(dense));
}

InteractionMatrix InteractionMatrix::scaled(double c) const {
  std::vector<double> dense(dense_);
  for (double& v : dense) v *= c;
  return InteractionMatrix(n_, std::move(dense));
}

DegreeSequence::DegreeSequence(std::vector<int> degrees)
    : degrees_(std::move(degrees)) {
  if (!is_graphical(degrees_)) {
    throw NonGraphicalSequence("degree sequence is not graphical");
  }
}

bool DegreeSequence::is_graphical(const std::vector<int>& degrees) {
  const int n = static_cast<int>(degrees.size());
  if (n < 1) return false;
  long long sum = 0;
  for (int d : degrees) {
    if (d < 0 || d > n - 1) return false;
    sum += d;
  }
  if (sum % 2 != 0) return false;

  // Erdos-Gallai: for each k, sum of the k largest degrees must not exceed
  // k(k-1) + sum_{i>k} min(d_i, k).
  std::vector<int> d(degrees);
  std::sort(d.begin(), d.end(), std::greater<int>());
  long long head = 0;
  for (int k = 1; k <= n; ++k) {
    head += d[static_cast<std::size_t>(k - 1)];
    long long tail = 0;
    for (int i = k; i < n; ++i) {
      tail += std::min(d[static_cast<std::size_t>(i)], k);
    }
    if (head > static_cast<long long>(k) * (k - 1) + tail) return false;
  }
  return true;
}

LayerWeights::LayerWeights(std::vector<double> alphas)
    : alphas_(std::move(alphas)) {
  if (alphas_.empty()) throw ValidationError("layer weights are empty");
  double sum = 0.0;
  for (std::size_t i = 0; i < alphas_.size(); ++i) {
    const double a = alphas_[i];
    if (!std::isfinite(a) || a < 0.0) {
      throw ValidationError("layer weight " + std::to_string(i) +
                            " invalid: " + std::to_string(a));
    }
    sum += a;
  }
  if (std::abs(sum - 1.0) > WeightVector::kSumTolerance) {
    throw ValidationError("layer weights sum to " + std::to_string(sum) +
                          ", expected 1");
  }
  for (double& a : alphas_) a /= sum;
}

Transformation Transformation::exceedance(double tau) {
  if (!std::isfinite(tau)) {
    throw ValidationError("exceedance threshold must be finite");
  }
  return {Kind::exceedance, tau};
}

double Transformation::apply(double x) const {
  switch (kind) {
    case Kind::square:
      return x * x;
    case Kind::absolute:
      return std::abs(x);
    case Kind::exceedance:
      return x > tau ? 1.0 : 0.0;
    case Kind::sqrt_abs:
      return std::sqrt(std::abs(x));
  }
  return x;
}

std::string Transformation::name() const {
  switch (kind) {
    case Kind::square:
      return "square";
    case Kind::absolute:
      return "absolute";
    case Kind::exceedance:
      return "exceedance(" + std::to_string(tau) + ")";
    case Kind::sqrt_abs:
      return "sqrt_abs";
  }
  return "?";
}

}  // namespace nci
