#include "nci/netbuild.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace nci {

CoefficientMatrix::CoefficientMatrix(std::vector<std::string> labels,
                                     std::vector<double> dense)
    : labels_(std::move(labels)), dense_(std::move(dense)) {
  const std::size_t n = labels_.size();
  if (n < 2) throw ValidationError("coefficient matrix needs n >= 2");
  if (dense_.size() != n * n) {
    throw NonSquare("coefficient matrix has " + std::to_string(dense_.size()) +
                    " entries for " + std::to_string(n) + " labels");
  }
  for (double v : dense_) {
    if (!std::isfinite(v) || v < 0.0) {
      throw ValidationError("coefficient entries must be finite and >= 0, got " +
                            std::to_string(v));
    }
  }
}

ReturnPanel::ReturnPanel(std::vector<std::string> labels,
                         std::vector<std::string> timestamps,
                         std::vector<double> data)
    : labels_(std::move(labels)),
      timestamps_(std::move(timestamps)),
      data_(std::move(data)) {
  if (labels_.empty()) throw ValidationError("panel has no columns");
  if (timestamps_.size() < 2) {
    throw ValidationError("panel needs at least 2 rows, got " +
                          std::to_string(timestamps_.size()));
  }
  if (data_.size() != labels_.size() * timestamps_.size()) {
    throw ValidationError("panel storage size mismatch");
  }
  for (double v : data_) {
    if (!std::isfinite(v)) throw ValidationError("panel contains a non-finite value");
  }
}

ReturnPanel ReturnPanel::slice(int first, int count) const {
  if (first < 0 || count < 2 || first + count > rows()) {
    throw OutOfRange("panel slice [" + std::to_string(first) + ", " +
                     std::to_string(first + count) + ") out of range for T=" +
                     std::to_string(rows()));
  }
  std::vector<std::string> ts(timestamps_.begin() + first,
                              timestamps_.begin() + first + count);
  std::vector<double> data(data_.begin() + static_cast<std::ptrdiff_t>(first) * cols(),
                           data_.begin() + static_cast<std::ptrdiff_t>(first + count) * cols());
  return ReturnPanel(labels_, std::move(ts), std::move(data));
}

SymmetricMatrix::SymmetricMatrix(int n, std::vector<double> dense)
    : n_(n), dense_(std::move(dense)) {
  if (n_ < 2) throw ValidationError("symmetric matrix needs n >= 2");
  if (dense_.size() != static_cast<std::size_t>(n_) * n_) {
    throw ValidationError("symmetric matrix storage size mismatch");
  }
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      if (at(i, j) != at(j, i)) {
        throw ValidationError("matrix asymmetric at (" + std::to_string(i) +
                              "," + std::to_string(j) + ")");
      }
    }
  }
}

InteractionMatrix symmetrize(const CoefficientMatrix& c) {
  const int n = c.size();
  std::vector<double> dense(static_cast<std::size_t>(n) * n, 0.0);
  for (int h = 0; h < n; ++h) {
    for (int k = h + 1; k < n; ++k) {
      const double v = 0.5 * (c.at(h, k) + c.at(k, h));
      dense[static_cast<std::size_t>(h) * n + k] = v;
      dense[static_cast<std::size_t>(k) * n + h] = v;
    }
  }
  return InteractionMatrix(n, std::move(dense));
}

BinaryGraph threshold_graph(const InteractionMatrix& m, double theta) {
  const int n = m.node_count();
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (m.at(i, j) > theta) edges.emplace_back(i, j);
    }
  }
  return BinaryGraph(n, std::move(edges));
}

ReturnPanel log_returns(const ReturnPanel& prices) {
  const int t = prices.rows();
  const int n = prices.cols();
  for (int r = 0; r < t; ++r) {
    for (int i = 0; i < n; ++i) {
      if (!(prices.at(r, i) > 0.0)) {
        throw NonPositivePrice("price at row " + std::to_string(r) +
                               ", column '" + prices.labels()[static_cast<std::size_t>(i)] +
                               "' is not positive: " +
                               std::to_string(prices.at(r, i)));
      }
    }
  }
  std::vector<double> data(static_cast<std::size_t>(t - 1) * n);
  for (int r = 1; r < t; ++r) {
    for (int i = 0; i < n; ++i) {
      data[static_cast<std::size_t>(r - 1) * n + static_cast<std::size_t>(i)] =
          std::log(prices.at(r, i) / prices.at(r - 1, i));
    }
  }
  std::vector<std::string> ts(prices.timestamps().begin() + 1,
                              prices.timestamps().end());
  return ReturnPanel(prices.labels(), std::move(ts), std::move(data));
}

SymmetricMatrix correlation_matrix(const ReturnPanel& panel) {
  const int t = panel.rows();
  const int n = panel.cols();
  if (t < 3) {
    throw InsufficientData("correlation needs at least 3 observations, got " +
                           std::to_string(t));
  }
  std::vector<double> mean(static_cast<std::size_t>(n), 0.0);
  for (int r = 0; r < t; ++r)
    for (int i = 0; i < n; ++i) mean[static_cast<std::size_t>(i)] += panel.at(r, i);
  for (double& m : mean) m /= t;

  std::vector<double> sd(static_cast<std::size_t>(n), 0.0);
  for (int r = 0; r < t; ++r) {
    for (int i = 0; i < n; ++i) {
      const double c = panel.at(r, i) - mean[static_cast<std::size_t>(i)];
      sd[static_cast<std::size_t>(i)] += c * c;
    }
  }
  for (int i = 0; i < n; ++i) {
    if (sd[static_cast<std::size_t>(i)] <= 0.0) {
      throw ZeroVariance("column '" + panel.labels()[static_cast<std::size_t>(i)] +
                         "' has zero variance");
    }
    sd[static_cast<std::size_t>(i)] = std::sqrt(sd[static_cast<std::size_t>(i)]);
  }

  std::vector<double> corr(static_cast<std::size_t>(n) * n, 1.0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      double cov = 0.0;
      for (int r = 0; r < t; ++r) {
        cov += (panel.at(r, i) - mean[static_cast<std::size_t>(i)]) *
               (panel.at(r, j) - mean[static_cast<std::size_t>(j)]);
      }
      double rho = cov / (sd[static_cast<std::size_t>(i)] * sd[static_cast<std::size_t>(j)]);
      rho = std::clamp(rho, -1.0, 1.0);
      corr[static_cast<std::size_t>(i) * n + static_cast<std::size_t>(j)] = rho;
      corr[static_cast<std::size_t>(j) * n + static_cast<std::size_t>(i)] = rho;
    }
  }
  return SymmetricMatrix(n, std::move(corr));
}

double mantegna_distance(double rho) {
  if (!(rho >= -1.0 && rho <= 1.0)) {
    throw OutOfRange("correlation must lie in [-1,1], got " +
                     std::to_string(rho));
  }
  return std::sqrt(2.0 * (1.0 - rho));
}

SymmetricMatrix mantegna_distances(const SymmetricMatrix& corr) {
  const int n = corr.size();
  std::vector<double> dist(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double d = mantegna_distance(corr.at(i, j));
      dist[static_cast<std::size_t>(i) * n + static_cast<std::size_t>(j)] = d;
      dist[static_cast<std::size_t>(j) * n + static_cast<std::size_t>(i)] = d;
    }
  }
  return SymmetricMatrix(n, std::move(dist));
}

BinaryGraph mst(const SymmetricMatrix& dist) {
  const int n = dist.size();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!std::isfinite(dist.at(i, j))) {
        throw NonFinite("distance (" + std::to_string(i) + "," +
                        std::to_string(j) + ") is not finite");
      }
    }
  }

  // Prim from node 0. best[v] is the cheapest crossing edge to v; on equal
  // distance the lexicographically smaller (min,max) edge wins, both when
  // updating keys and when selecting the next vertex.
  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<char> in_tree(static_cast<std::size_t>(n), 0);
  std::vector<double> best(static_cast<std::size_t>(n), kInf);
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  in_tree[0] = 1;
  for (int v = 1; v < n; ++v) {
    best[static_cast<std::size_t>(v)] = dist.at(0, v);
    parent[static_cast<std::size_t>(v)] = 0;
  }

  auto canonical = [](int a, int b) {
    return std::pair<int, int>{std::min(a, b), std::max(a, b)};
  };

  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(n - 1));
  for (int step = 1; step < n; ++step) {
    int pick = -1;
    for (int v = 0; v < n; ++v) {
      if (in_tree[static_cast<std::size_t>(v)]) continue;
      if (pick == -1) {
        pick = v;
        continue;
      }
      const double dv = best[static_cast<std::size_t>(v)];
      const double dp = best[static_cast<std::size_t>(pick)];
      if (dv < dp ||
          (dv == dp && canonical(parent[static_cast<std::size_t>(v)], v) <
                           canonical(parent[static_cast<std::size_t>(pick)], pick))) {
        pick = v;
      }
    }
    edges.push_back(canonical(parent[static_cast<std::size_t>(pick)], pick));
    in_tree[static_cast<std::size_t>(pick)] = 1;
    for (int v = 0; v < n; ++v) {
      if (in_tree[static_cast<std::size_t>(v)]) continue;
      const double d = dist.at(pick, v);
      const double cur = best[static_cast<std::size_t>(v)];
      if (d < cur || (d == cur && canonical(pick, v) <
                                      canonical(parent[static_cast<std::size_t>(v)], v))) {
        best[static_cast<std::size_t>(v)] = d;
        parent[static_cast<std::size_t>(v)] = pick;
      }
    }
  }
  return BinaryGraph(n, std::move(edges));
}

ReturnPanel apply_transformation(const ReturnPanel& panel,
                                 const Transformation& t) {
  std::vector<double> data(panel.data());
  for (double& v : data) v = t.apply(v);
  return ReturnPanel(panel.labels(), panel.timestamps(), std::move(data));
}

}  // namespace nci
