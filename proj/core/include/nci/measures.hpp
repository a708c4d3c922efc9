#pragma once

#include "nci/types.hpp"

namespace nci {

/// Sum of squared weight shares, in [1/N, 1].
double hhi(const WeightVector& w);

/// Relative mean absolute difference of the weight distribution:
/// G = sum_ij |w_i - w_j| / (2N), in [0, 1 - 1/N] for shares summing to one.
double gini(const WeightVector& w);

/// Fraction of possible node pairs that are linked: 2|E| / (N(N-1)).
double density(const BinaryGraph& g);

}  // namespace nci
