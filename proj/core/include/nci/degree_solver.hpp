#pragma once

#include <cstdint>

#include "nci/rng.hpp"
#include "nci/types.hpp"

namespace nci {

enum class SolverMethod { greedy, greedy_rewire, exact };

/// Outcome of a degree-constrained benchmark computation.
struct SolverResult {
  /// Achieved w'Bw on the returned graph.
  double lambda = 0.0;
  /// A graph realizing exactly the requested degree sequence.
  BinaryGraph graph;
  SolverMethod method = SolverMethod::greedy;
  /// True only for the exhaustive solver.
  bool is_certified_optimal = false;
};

/// Greedy benchmark construction: rank unordered pairs by decreasing
/// w_i w_j (ties broken lexicographically) and assign links subject to the
/// degree constraints. A feasibility repair completes the graph whenever the
/// plain pass strands residual degrees, so the result always realizes d.
SolverResult greedy_max(const WeightVector& w, const DegreeSequence& d);

/// Hill-climb over degree-preserving 2-edge swaps; lambda never decreases.
/// Stops after max_iter accepted swaps or one full pass with no improvement.
SolverResult rewire_refine(const SolverResult& start, const WeightVector& w,
                           int max_iter);

/// Exhaustive search over all labeled graphs realizing d. Certified optimum;
/// throws TooLarge when the instance exceeds node_limit.
SolverResult exact_max(const WeightVector& w, const DegreeSequence& d,
                       int node_limit = 9);

/// Degree-constrained index: w'Aw / max_{B in G(d)} w'Bw with d the degree
/// sequence of g. With a non-certified benchmark the denominator is clamped
/// to at least w'Aw so the [0,1] bound holds; the clamp is logged to stderr.
/// node_limit only applies to the exact mode.
double nci_degree_constrained(const WeightVector& w, const BinaryGraph& g,
                              SolverMethod mode, int node_limit = 9);

/// Uniform degree-preserving randomization: attempts `swaps` random 2-edge
/// swaps starting from g. Used for the configuration-model benchmark.
BinaryGraph random_rewire(const BinaryGraph& g, int swaps, CounterRng& rng);

}  // namespace nci
