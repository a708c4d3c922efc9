#include "nci/degree_solver.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <limits>
#include <numeric>

#include "nci/indices.hpp"

namespace nci {

namespace {

// Minimum fp gain for a rewiring swap to count as an improvement.
constexpr double kMinGain = 1e-15;

struct WorkGraph {
  int n = 0;
  std::vector<char> adj;           // n*n, symmetric
  std::vector<std::pair<int, int>> edges;  // canonical (min,max), unordered
  std::vector<int> deg;

  explicit WorkGraph(int n_) : n(n_), adj(static_cast<std::size_t>(n_) * n_, 0),
                               deg(static_cast<std::size_t>(n_), 0) {}

  bool has(int i, int j) const {
    return adj[static_cast<std::size_t>(i) * n + j] != 0;
  }
  void add(int i, int j) {
    adj[static_cast<std::size_t>(i) * n + j] = 1;
    adj[static_cast<std::size_t>(j) * n + i] = 1;
    edges.emplace_back(std::min(i, j), std::max(i, j));
    ++deg[static_cast<std::size_t>(i)];
    ++deg[static_cast<std::size_t>(j)];
  }
  void remove(int i, int j) {
    adj[static_cast<std::size_t>(i) * n + j] = 0;
    adj[static_cast<std::size_t>(j) * n + i] = 0;
    const std::pair<int, int> e{std::min(i, j), std::max(i, j)};
    edges.erase(std::find(edges.begin(), edges.end(), e));
    --deg[static_cast<std::size_t>(i)];
    --deg[static_cast<std::size_t>(j)];
  }

  BinaryGraph to_graph() const { return BinaryGraph(n, edges); }
};

double lambda_of(const WeightVector& w, const WorkGraph& g) {
  double sum = 0.0;
  for (auto [i, j] : g.edges) sum += w[i] * w[j];
  return 2.0 * sum;
}

std::vector<std::pair<int, int>> ranked_pairs(const WeightVector& w) {
  const int n = w.size();
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::stable_sort(pairs.begin(), pairs.end(),
                   [&](const auto& a, const auto& b) {
                     const double pa = w[a.first] * w[a.second];
                     const double pb = w[b.first] * w[b.second];
                     if (pa != pb) return pa > pb;
                     return a < b;
                   });
  return pairs;
}

// Havel-Hakimi realization from scratch; input must be graphical.
WorkGraph havel_hakimi(const std::vector<int>& d) {
  const int n = static_cast<int>(d.size());
  WorkGraph g(n);
  std::vector<std::pair<int, int>> residual(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) residual[static_cast<std::size_t>(i)] = {d[static_cast<std::size_t>(i)], i};
  for (;;) {
    std::sort(residual.begin(), residual.end(), std::greater<>());
    if (residual.front().first == 0) break;
    auto [r, u] = residual.front();
    residual.front().first = 0;
    if (r > n - 1 || residual[static_cast<std::size_t>(r)].first <= 0) {
      throw NonGraphicalSequence("Havel-Hakimi ran out of partners");
    }
    for (int k = 1; k <= r; ++k) {
      auto& [rv, v] = residual[static_cast<std::size_t>(k)];
      if (rv <= 0) throw NonGraphicalSequence("Havel-Hakimi ran out of partners");
      --rv;
      g.add(u, v);
    }
  }
  return g;
}

// Complete a partially built graph so it realizes d exactly, choosing at
// every step the move with the largest net lambda gain (a blind scan here
// would tear down the very edges the ranked pass just built). Returns false
// if no local move applies (caller falls back to a fresh realization).
bool repair_residual(WorkGraph& g, const std::vector<int>& d,
                     const WeightVector& w) {
  const int n = g.n;
  auto residual = [&](int v) { return d[static_cast<std::size_t>(v)] - g.deg[static_cast<std::size_t>(v)]; };
  for (;;) {
    std::vector<int> open;
    for (int v = 0; v < n; ++v) {
      if (residual(v) > 0) open.push_back(v);
    }
    if (open.empty()) return true;

    // Direct completion: link the best open pair that is not yet adjacent.
    {
      int bu = -1, bv = -1;
      double best = -1.0;
      for (std::size_t a = 0; a < open.size(); ++a) {
        for (std::size_t b = a + 1; b < open.size(); ++b) {
          if (g.has(open[a], open[b])) continue;
          const double gain = w[open[a]] * w[open[b]];
          if (gain > best) {
            best = gain;
            bu = open[a];
            bv = open[b];
          }
        }
      }
      if (bu >= 0) {
        g.add(bu, bv);
        continue;
      }
    }

    // Every open pair is already linked (or one node is left): break the
    // existing edge whose replacement costs the least.
    struct Move {
      double gain;
      int remove_a, remove_b;
      int add1_a, add1_b;
      int add2_a, add2_b;
    };
    Move best{-std::numeric_limits<double>::infinity(), -1, -1, -1, -1, -1, -1};

    if (open.size() >= 2) {
      for (std::size_t oa = 0; oa < open.size(); ++oa) {
        for (std::size_t ob = oa + 1; ob < open.size(); ++ob) {
          const int u = open[oa];
          const int v = open[ob];
          for (auto [a, b] : g.edges) {
            if (a == u || a == v || b == u || b == v) continue;
            if (!g.has(u, a) && !g.has(v, b)) {
              const double gain = w[u] * w[a] + w[v] * w[b] - w[a] * w[b];
              if (gain > best.gain) best = {gain, a, b, u, a, v, b};
            }
            if (!g.has(u, b) && !g.has(v, a)) {
              const double gain = w[u] * w[b] + w[v] * w[a] - w[a] * w[b];
              if (gain > best.gain) best = {gain, a, b, u, b, v, a};
            }
          }
        }
      }
    }
    if (open.size() == 1 || best.remove_a < 0) {
      // Single open node (residual is always even): absorb an edge disjoint
      // from its neighborhood.
      for (int u : open) {
        if (residual(u) < 2) continue;
        for (auto [a, b] : g.edges) {
          if (a == u || b == u) continue;
          if (!g.has(u, a) && !g.has(u, b)) {
            const double gain = w[u] * (w[a] + w[b]) - w[a] * w[b];
            if (gain > best.gain) best = {gain, a, b, u, a, u, b};
          }
        }
      }
    }
    if (best.remove_a < 0) return false;
    g.remove(best.remove_a, best.remove_b);
    g.add(best.add1_a, best.add1_b);
    g.add(best.add2_a, best.add2_b);
  }
}

void verify_degrees(const WorkGraph& g, const std::vector<int>& d) {
  for (int v = 0; v < g.n; ++v) {
    if (g.deg[static_cast<std::size_t>(v)] != d[static_cast<std::size_t>(v)]) {
      throw Error("solver produced degree " +
                  std::to_string(g.deg[static_cast<std::size_t>(v)]) + " at node " +
                  std::to_string(v) + ", expected " +
                  std::to_string(d[static_cast<std::size_t>(v)]));
    }
  }
}

}  // namespace

SolverResult greedy_max(const WeightVector& w, const DegreeSequence& d) {
  const int n = d.size();
  if (w.size() != n) {
    throw ValidationError("weights have " + std::to_string(w.size()) +
                          " entries but degree sequence has " +
                          std::to_string(n));
  }
  WorkGraph g(n);
  for (auto [i, j] : ranked_pairs(w)) {
    if (g.deg[static_cast<std::size_t>(i)] < d[i] && g.deg[static_cast<std::size_t>(j)] < d[j]) {
      g.add(i, j);
    }
  }
  if (!repair_residual(g, d.degrees(), w)) {
    // Local repair exhausted; rebuild feasibly and let rewiring recover
    // quality from there.
    g = havel_hakimi(d.degrees());
  }
  verify_degrees(g, d.degrees());
  return SolverResult{lambda_of(w, g), g.to_graph(), SolverMethod::greedy,
                      false};
}

SolverResult rewire_refine(const SolverResult& start, const WeightVector& w,
                           int max_iter) {
  const int n = start.graph.node_count();
  WorkGraph g(n);
  for (auto [i, j] : start.graph.edges()) g.add(i, j);

  int accepted = 0;
  bool improved = true;
  while (improved && accepted < max_iter) {
    improved = false;
    const std::size_t m = g.edges.size();
    for (std::size_t e1 = 0; e1 < m && !improved; ++e1) {
      for (std::size_t e2 = e1 + 1; e2 < m && !improved; ++e2) {
        const auto [a, b] = g.edges[e1];
        const auto [c, dd] = g.edges[e2];
        if (a == c || a == dd || b == c || b == dd) continue;
        const double base = w[a] * w[b] + w[c] * w[dd];
        // Swap (a,b),(c,d) -> (a,c),(b,d)
        if (!g.has(a, c) && !g.has(b, dd)) {
          const double gain = w[a] * w[c] + w[b] * w[dd] - base;
          if (gain > kMinGain) {
            g.remove(a, b);
            g.remove(c, dd);
            g.add(a, c);
            g.add(b, dd);
            ++accepted;
            improved = true;
            continue;
          }
        }
        // Swap (a,b),(c,d) -> (a,d),(b,c)
        if (!g.has(a, dd) && !g.has(b, c)) {
          const double gain = w[a] * w[dd] + w[b] * w[c] - base;
          if (gain > kMinGain) {
            g.remove(a, b);
            g.remove(c, dd);
            g.add(a, dd);
            g.add(b, c);
            ++accepted;
            improved = true;
          }
        }
      }
    }
  }

  SolverResult out{lambda_of(w, g), g.to_graph(),
                   start.method == SolverMethod::exact ? SolverMethod::exact
                                                       : SolverMethod::greedy_rewire,
                   start.is_certified_optimal};
  // Hill-climbing never loses ground.
  if (out.lambda + kMinGain < start.lambda) {
    throw Error("rewiring decreased lambda, this is a bug");
  }
  return out;
}

namespace {

struct ExactSearch {
  const WeightVector& w;
  const std::vector<int>& target;
  int n;
  WorkGraph g;
  std::vector<int> residual;
  double current = 0.0;
  double best = -1.0;
  std::vector<std::pair<int, int>> best_edges;

  ExactSearch(const WeightVector& w_, const std::vector<int>& d)
      : w(w_), target(d), n(static_cast<int>(d.size())), g(n), residual(d) {}

  // Largest achievable contribution of the pairs among nodes {from..n-1}:
  // take the sum(residual)/2 biggest products, ignoring degree feasibility.
  double upper_bound(int from) const {
    long long rem_degree = 0;
    for (int v = from; v < n; ++v) rem_degree += residual[static_cast<std::size_t>(v)];
    const int budget = static_cast<int>(rem_degree / 2);
    if (budget == 0) return 0.0;
    std::vector<double> products;
    for (int i = from; i < n; ++i) {
      if (residual[static_cast<std::size_t>(i)] == 0) continue;
      for (int j = i + 1; j < n; ++j) {
        if (residual[static_cast<std::size_t>(j)] == 0) continue;
        if (!g.has(i, j)) products.push_back(w[i] * w[j]);
      }
    }
    const std::size_t take = std::min<std::size_t>(products.size(),
                                                   static_cast<std::size_t>(budget));
    std::partial_sort(products.begin(), products.begin() + static_cast<std::ptrdiff_t>(take),
                      products.end(), std::greater<double>());
    double bound = 0.0;
    for (std::size_t k = 0; k < take; ++k) bound += products[k];
    return 2.0 * bound;
  }

  bool residual_graphical(int from) const {
    std::vector<int> tail(residual.begin() + from, residual.end());
    return DegreeSequence::is_graphical(tail);
  }

  void record_if_best() {
    if (current > best) {
      best = current;
      best_edges = g.edges;
    }
  }

  void search(int u) {
    if (u == n) {
      record_if_best();
      return;
    }
    if (current + upper_bound(u) < best - kMinGain) return;
    if (!residual_graphical(u)) return;
    if (residual[static_cast<std::size_t>(u)] == 0) {
      search(u + 1);
      return;
    }
    std::vector<int> candidates;
    for (int v = u + 1; v < n; ++v) {
      if (residual[static_cast<std::size_t>(v)] > 0) candidates.push_back(v);
    }
    choose(u, candidates, 0, residual[static_cast<std::size_t>(u)]);
  }

  void choose(int u, const std::vector<int>& candidates, std::size_t from,
              int need) {
    if (need == 0) {
      const int saved = residual[static_cast<std::size_t>(u)];
      residual[static_cast<std::size_t>(u)] = 0;
      search(u + 1);
      residual[static_cast<std::size_t>(u)] = saved;
      return;
    }
    if (candidates.size() - from < static_cast<std::size_t>(need)) return;
    for (std::size_t k = from; k + static_cast<std::size_t>(need) <= candidates.size(); ++k) {
      const int v = candidates[k];
      g.add(u, v);
      --residual[static_cast<std::size_t>(v)];
      current += 2.0 * w[u] * w[v];
      choose(u, candidates, k + 1, need - 1);
      current -= 2.0 * w[u] * w[v];
      ++residual[static_cast<std::size_t>(v)];
      g.remove(u, v);
    }
  }
};

}  // namespace

SolverResult exact_max(const WeightVector& w, const DegreeSequence& d,
                       int node_limit) {
  const int n = d.size();
  if (n > node_limit) {
    throw TooLarge("exact solver capped at " + std::to_string(node_limit) +
                   " nodes, got " + std::to_string(n));
  }
  if (w.size() != n) {
    throw ValidationError("weights have " + std::to_string(w.size()) +
                          " entries but degree sequence has " +
                          std::to_string(n));
  }
  ExactSearch search(w, d.degrees());
  search.search(0);
  WorkGraph g(n);
  for (auto [i, j] : search.best_edges) g.add(i, j);
  verify_degrees(g, d.degrees());
  return SolverResult{search.best, g.to_graph(), SolverMethod::exact, true};
}

double nci_degree_constrained(const WeightVector& w, const BinaryGraph& g,
                              SolverMethod mode, int node_limit) {
  const DegreeSequence d(g.degrees());
  const double theta = quadratic_form(w, g);

  SolverResult sr = [&] {
    switch (mode) {
      case SolverMethod::greedy:
        return greedy_max(w, d);
      case SolverMethod::greedy_rewire:
        return rewire_refine(greedy_max(w, d), w, 100000);
      case SolverMethod::exact:
        return exact_max(w, d, node_limit);
    }
    throw OutOfRange("unknown solver mode");
  }();

  double lambda = sr.lambda;
  if (lambda <= kDegenerateTolerance) {
    throw DegenerateBenchmark(
        "degree-constrained benchmark is zero (no realizable interaction)");
  }
  if (!sr.is_certified_optimal && lambda < theta) {
    if (theta - lambda > 1e-12 * theta) {
      const std::string msg = "nci: approximate degree benchmark " +
                              std::to_string(lambda) +
                              " below observed interaction " +
                              std::to_string(theta) +
                              "; clamping benchmark to the observed value\n";
      std::cerr << msg;
    }
    lambda = theta;
  }
  return theta / lambda;
}

BinaryGraph random_rewire(const BinaryGraph& g, int swaps, CounterRng& rng) {
  WorkGraph work(g.node_count());
  for (auto [i, j] : g.edges()) work.add(i, j);
  const std::size_t m = work.edges.size();
  if (m < 2) return g;

  for (int s = 0; s < swaps; ++s) {
    const std::size_t e1 = static_cast<std::size_t>(rng.next_below(m));
    const std::size_t e2 = static_cast<std::size_t>(rng.next_below(m));
    if (e1 == e2) continue;
    auto [a, b] = work.edges[e1];
    auto [c, d] = work.edges[e2];
    if (rng.next_below(2) == 1) std::swap(c, d);
    if (a == c || a == d || b == c || b == d) continue;
    if (work.has(a, c) || work.has(b, d)) continue;
    work.remove(a, b);
    work.remove(c, d);
    work.add(a, c);
    work.add(b, d);
  }
  return work.to_graph();
}

}  // namespace nci
