#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "nci/rng.hpp"
#include "nci/types.hpp"

namespace nci {

/// Parameters of one network-generating mechanism.
struct ScenarioSpec {
  enum class Kind { core_periphery, peripheral, er_random };

  Kind kind = Kind::er_random;
  int n = 10;
  std::optional<double> p;  // required for er_random
  std::uint64_t seed = 0;
};

std::string to_string(ScenarioSpec::Kind kind);

/// The 10-node reference weight profile used by the simulation scenarios
/// (four dominant nodes carrying 75% of total weight).
const WeightVector& reference_weights();

/// Deterministic core-periphery structure on 10 nodes: a clique on nodes
/// {0..3} plus internally complete clusters {4..6} and {7..9}; 12 edges,
/// density 4/15. Throws UnsupportedSize for n != 10.
BinaryGraph scenario_core_periphery(int n = 10);

/// Deterministic peripheral structure on 10 nodes: 12 edges chosen among the
/// 15 pairs within {4..9} preferring the lowest reference-weight products
/// (ties lexicographic), nodes {0..3} isolated. Density 4/15.
/// Throws UnsupportedSize for n != 10.
BinaryGraph scenario_peripheral(int n = 10);

/// Randomized core-periphery draw: the core clique on {0..3} is held fixed
/// and the 6 cluster edges are placed uniformly at random among the pairs
/// within {4..9}. 12 edges, density 4/15.
BinaryGraph scenario_core_periphery_random(int n, CounterRng& rng);
BinaryGraph scenario_core_periphery_random(int n, std::uint64_t seed);

/// Randomized peripheral draw: all 12 edges placed uniformly at random among
/// the pairs within {4..9}.
BinaryGraph scenario_peripheral_random(int n, CounterRng& rng);
BinaryGraph scenario_peripheral_random(int n, std::uint64_t seed);

/// Erdos-Renyi G(n, p): each unordered pair linked independently with
/// probability p. Deterministic for a fixed (seed) or generator state.
BinaryGraph erdos_renyi(int n, double p, CounterRng& rng);
BinaryGraph erdos_renyi(int n, double p, std::uint64_t seed);

/// Uniform draw from the simplex {w >= 0, sum w = 1} via the gaps between
/// order statistics of n-1 independent U[0,1] variates (Dirichlet(1,...,1)).
WeightVector sample_simplex_uniform(int n, CounterRng& rng);
WeightVector sample_simplex_uniform(int n, std::uint64_t seed);

/// Dispatch on a ScenarioSpec (deterministic scenario variants).
BinaryGraph generate(const ScenarioSpec& spec);

}  // namespace nci
