#pragma once

#include <string>
#include <vector>

#include "nci/types.hpp"

namespace nci {

/// Directed technical coefficients a_{hk} (flow from h used by k, relative to
/// k's gross output). Entries are nonnegative; the diagonal is ignored
/// downstream.
class CoefficientMatrix {
 public:
  CoefficientMatrix(std::vector<std::string> labels, std::vector<double> dense);

  int size() const { return static_cast<int>(labels_.size()); }
  double at(int h, int k) const {
    return dense_[static_cast<std::size_t>(h) * labels_.size() + static_cast<std::size_t>(k)];
  }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<double>& dense() const { return dense_; }

 private:
  std::vector<std::string> labels_;
  std::vector<double> dense_;
};

/// Aligned panel of T observations on N series (prices or log-returns).
class ReturnPanel {
 public:
  ReturnPanel(std::vector<std::string> labels,
              std::vector<std::string> timestamps, std::vector<double> data);

  int rows() const { return static_cast<int>(timestamps_.size()); }
  int cols() const { return static_cast<int>(labels_.size()); }
  double at(int t, int i) const {
    return data_[static_cast<std::size_t>(t) * labels_.size() + static_cast<std::size_t>(i)];
  }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<std::string>& timestamps() const { return timestamps_; }
  const std::vector<double>& data() const { return data_; }

  /// Rows [first, first + count) as a new panel.
  ReturnPanel slice(int first, int count) const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::string> timestamps_;
  std::vector<double> data_;
};

/// Plain symmetric dense matrix (correlations, distances); unlike
/// InteractionMatrix its diagonal and sign are unconstrained.
class SymmetricMatrix {
 public:
  SymmetricMatrix(int n, std::vector<double> dense);

  int size() const { return n_; }
  double at(int i, int j) const {
    return dense_[static_cast<std::size_t>(i) * n_ + static_cast<std::size_t>(j)];
  }
  const std::vector<double>& dense() const { return dense_; }

 private:
  int n_;
  std::vector<double> dense_;
};

/// Average the directed coefficients: (a_{hk} + a_{kh}) / 2, diagonal zeroed.
InteractionMatrix symmetrize(const CoefficientMatrix& c);

/// Edge wherever the interaction strictly exceeds theta.
BinaryGraph threshold_graph(const InteractionMatrix& m, double theta);

/// Log-returns log(P_t / P_{t-1}) of a positive price panel; output has one
/// row fewer. Throws NonPositivePrice.
ReturnPanel log_returns(const ReturnPanel& prices);

/// Sample Pearson correlations across columns; unit diagonal.
/// Throws ZeroVariance when a column is constant.
SymmetricMatrix correlation_matrix(const ReturnPanel& panel);

/// d = sqrt(2 (1 - rho)), mapping correlation in [-1,1] to distance in [0,2].
double mantegna_distance(double rho);

/// Elementwise Mantegna distances of a correlation matrix.
SymmetricMatrix mantegna_distances(const SymmetricMatrix& corr);

/// Minimum spanning tree of a finite symmetric distance matrix (Prim).
/// Ties broken by lexicographic edge order, so the result is deterministic.
BinaryGraph mst(const SymmetricMatrix& dist);

/// Apply a signal transformation elementwise.
ReturnPanel apply_transformation(const ReturnPanel& panel,
                                 const Transformation& t);

}  // namespace nci
