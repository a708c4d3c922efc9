#include "nci/measures.hpp"

#include <algorithm>

namespace nci {

double hhi(const WeightVector& w) {
  double sum = 0.0;
  for (double v : w.values()) sum += v * v;
  return sum;
}

double gini(const WeightVector& w) {
  // Sorted form of the pairwise-difference definition:
  // sum_ij |w_i - w_j| = 2 * sum_k (2k - N - 1) w_(k) with k 1-based ascending.
  std::vector<double> sorted(w.values());
  std::sort(sorted.begin(), sorted.end());
  const int n = w.size();
  double acc = 0.0;
  for (int k = 1; k <= n; ++k) {
    acc += (2.0 * k - n - 1.0) * sorted[static_cast<std::size_t>(k - 1)];
  }
  return acc / n;
}

double density(const BinaryGraph& g) {
  const double n = g.node_count();
  return 2.0 * g.edge_count() / (n * (n - 1.0));
}

}  // namespace nci
