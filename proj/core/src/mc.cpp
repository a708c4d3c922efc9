#include "nci/mc.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>

#include "nci/indices.hpp"
#include "nci/measures.hpp"

namespace nci {

namespace {

constexpr int kScenarioNodes = 10;

const std::array<ScenarioSpec::Kind, 3> kMechanisms = {
    ScenarioSpec::Kind::core_periphery, ScenarioSpec::Kind::peripheral,
    ScenarioSpec::Kind::er_random};

void parallel_for(int n, int threads, const std::function<void(int)>& body) {
  threads = std::max(1, threads);
  if (threads == 1 || n < 2) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      const int i = next.fetch_add(1);
      if (i >= n) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  const int workers = std::min(threads, n);
  pool.reserve(static_cast<std::size_t>(workers));
  for (int k = 0; k < workers; ++k) pool.emplace_back(worker);
  for (std::thread& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

BinaryGraph draw_graph(ScenarioSpec::Kind kind, double er_p, CounterRng& rng) {
  switch (kind) {
    case ScenarioSpec::Kind::core_periphery:
      return scenario_core_periphery_random(kScenarioNodes, rng);
    case ScenarioSpec::Kind::peripheral:
      return scenario_peripheral_random(kScenarioNodes, rng);
    case ScenarioSpec::Kind::er_random:
      return erdos_renyi(kScenarioNodes, er_p, rng);
  }
  throw OutOfRange("unknown mechanism");
}

/// Fixed edge-intensity structure of one experiment: gamma per unordered
/// pair, drawn once from a reserved stream so every replication sees the
/// same intensities on whatever topology it draws. Intensities concentrate
/// around 0.7 (range 0.45..0.95), which reproduces the reported behaviour of
/// the weighted variant relative to the baseline.
std::vector<double> experiment_intensities(std::uint64_t seed) {
  const int n = kScenarioNodes;
  CounterRng rng(seed, ~std::uint64_t{0});
  std::vector<double> gamma(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double v = 0.45 + 0.5 * rng.next_unit();
      gamma[static_cast<std::size_t>(i) * n + j] = v;
      gamma[static_cast<std::size_t>(j) * n + i] = v;
    }
  }
  return gamma;
}

/// All seven variants for one draw. Call order on rng is fixed: weights (in
/// the joint design), graph, second layer.
IndexReport full_report(const WeightVector& w, ScenarioSpec::Kind kind,
                        const McOptions& opt, const std::vector<double>& gamma,
                        CounterRng& rng) {
  const BinaryGraph g = draw_graph(kind, opt.er_p, rng);
  const BinaryGraph layer2 = draw_graph(kind, opt.er_p, rng);

  IndexReport rep;
  rep.hhi = hhi(w);
  rep.gini = gini(w);
  rep.density = density(g);
  rep.psi = nci_baseline(w, g);
  rep.psi_dens = nci_density_adjusted(w, g);

  const NullModelResult nm = nci_null_model(w, g, opt.er_p);
  rep.psi_null = nm.psi_null;
  rep.z_null = nm.z;

  rep.psi_deg = nci_degree_constrained(w, g, opt.deg_mode);

  // Weighted variant masks the fixed intensities with the drawn topology;
  // the transformed variant applies a square root to the same intensities.
  const int n = g.node_count();
  std::vector<double> wdense(static_cast<std::size_t>(n) * n, 0.0);
  std::vector<double> tdense(static_cast<std::size_t>(n) * n, 0.0);
  for (auto [i, j] : g.edges()) {
    const double v = gamma[static_cast<std::size_t>(i) * n + j];
    wdense[static_cast<std::size_t>(i) * n + j] = v;
    wdense[static_cast<std::size_t>(j) * n + i] = v;
    const double root = std::sqrt(v);
    tdense[static_cast<std::size_t>(i) * n + j] = root;
    tdense[static_cast<std::size_t>(j) * n + i] = root;
  }
  rep.psi_weighted = nci_weighted(w, InteractionMatrix(n, std::move(wdense)));
  rep.psi_transformed = nci_weighted(w, InteractionMatrix(n, std::move(tdense)));

  const LayerWeights alphas(std::vector<double>{opt.alpha1, 1.0 - opt.alpha1});
  rep.psi_multilayer = nci_multilayer(w, {g, layer2}, alphas);
  return rep;
}

void check_failure_fraction(const std::vector<ReplicationRecord>& records,
                            double max_fraction) {
  std::size_t failed = 0;
  for (const ReplicationRecord& rec : records) failed += rec.failed ? 1 : 0;
  const double fraction =
      records.empty() ? 0.0 : static_cast<double>(failed) / static_cast<double>(records.size());
  if (fraction > max_fraction) {
    throw Error("discarded replication fraction " + std::to_string(fraction) +
                " exceeds " + std::to_string(max_fraction));
  }
}

std::vector<ReplicationRecord> run_experiment(int r, std::uint64_t seed,
                                              const McOptions& opt,
                                              bool joint_weights) {
  if (r < 1) throw OutOfRange("replication count must be >= 1");
  const int total = r * static_cast<int>(kMechanisms.size());
  std::vector<ReplicationRecord> records(static_cast<std::size_t>(total));
  const std::vector<double> gamma = experiment_intensities(seed);

  parallel_for(total, opt.threads, [&](int idx) {
    const int mech = idx / r;
    const std::uint64_t stream = static_cast<std::uint64_t>(idx);
    CounterRng rng(seed, stream);

    ReplicationRecord& rec = records[static_cast<std::size_t>(idx)];
    rec.seed = stream;
    rec.scenario = kMechanisms[static_cast<std::size_t>(mech)];
    try {
      const WeightVector w = joint_weights
                                 ? sample_simplex_uniform(kScenarioNodes, rng)
                                 : reference_weights();
      rec.report = full_report(w, rec.scenario, opt, gamma, rng);
      rec.hhi = rec.report.hhi;
    } catch (const Error& e) {
      rec.failed = true;
      rec.failure_reason = e.what();
    }
  });

  check_failure_fraction(records, opt.max_failure_fraction);
  return records;
}

double quantile_sorted(const std::vector<double>& sorted, double q) {
  if (sorted.empty()) return 0.0;
  const double h = q * static_cast<double>(sorted.size() - 1);
  const std::size_t lo = static_cast<std::size_t>(h);
  if (lo + 1 >= sorted.size()) return sorted.back();
  const double frac = h - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

struct Column {
  const char* name;
  std::function<std::optional<double>(const IndexReport&)> get;
};

const std::vector<Column>& report_columns() {
  static const std::vector<Column> cols = {
      {"hhi", [](const IndexReport& r) { return std::optional<double>(r.hhi); }},
      {"gini", [](const IndexReport& r) { return std::optional<double>(r.gini); }},
      {"density", [](const IndexReport& r) { return std::optional<double>(r.density); }},
      {"psi", [](const IndexReport& r) { return r.psi; }},
      {"psi_dens", [](const IndexReport& r) { return r.psi_dens; }},
      {"psi_null", [](const IndexReport& r) { return r.psi_null; }},
      {"z_null", [](const IndexReport& r) { return r.z_null; }},
      {"psi_deg", [](const IndexReport& r) { return r.psi_deg; }},
      {"psi_weighted", [](const IndexReport& r) { return r.psi_weighted; }},
      {"psi_transformed", [](const IndexReport& r) { return r.psi_transformed; }},
      {"psi_multilayer", [](const IndexReport& r) { return r.psi_multilayer; }},
  };
  return cols;
}

}  // namespace

std::vector<ReplicationRecord> experiment_fixed_weights(int r,
                                                        std::uint64_t seed,
                                                        const McOptions& opt) {
  return run_experiment(r, seed, opt, /*joint_weights=*/false);
}

std::vector<ReplicationRecord> experiment_joint(int r, std::uint64_t seed,
                                                const McOptions& opt) {
  return run_experiment(r, seed, opt, /*joint_weights=*/true);
}

std::vector<double> default_er_grid() {
  std::vector<double> grid;
  for (int k = 1; k <= 19; ++k) grid.push_back(0.05 * k);
  return grid;
}

std::vector<ErGridRow> validate_er_benchmark(const std::vector<double>& p_grid,
                                             int r, std::uint64_t seed,
                                             const McOptions& opt) {
  if (r < 2) throw OutOfRange("grid validation needs r >= 2");
  for (double p : p_grid) {
    if (!(p > 0.0 && p < 1.0)) {
      throw InvalidProbability("grid probability outside (0,1): " +
                               std::to_string(p));
    }
  }
  const WeightVector& w = reference_weights();
  std::vector<ErGridRow> rows(p_grid.size());

  parallel_for(static_cast<int>(p_grid.size()), opt.threads, [&](int gi) {
    const double p = p_grid[static_cast<std::size_t>(gi)];
    double sum = 0.0;
    double sum_sq = 0.0;
    for (int k = 0; k < r; ++k) {
      CounterRng rng(seed, static_cast<std::uint64_t>(gi) * static_cast<std::uint64_t>(r) +
                               static_cast<std::uint64_t>(k));
      const double psi = nci_baseline(w, erdos_renyi(kScenarioNodes, p, rng));
      sum += psi;
      sum_sq += psi * psi;
    }
    const double mean = sum / r;
    const double var = std::max(0.0, (sum_sq - r * mean * mean) / (r - 1));
    rows[static_cast<std::size_t>(gi)] =
        ErGridRow{p, mean, std::sqrt(var / r), std::abs(mean - p)};
  });
  return rows;
}

std::vector<SummaryRow> summarize(const std::vector<ReplicationRecord>& records) {
  std::vector<SummaryRow> out;
  for (ScenarioSpec::Kind kind : kMechanisms) {
    for (const Column& col : report_columns()) {
      std::vector<double> values;
      for (const ReplicationRecord& rec : records) {
        if (rec.failed || rec.scenario != kind) continue;
        if (auto v = col.get(rec.report)) values.push_back(*v);
      }
      if (values.empty()) continue;
      SummaryRow row;
      row.scenario = kind;
      row.variant = col.name;
      row.count = static_cast<int>(values.size());
      double sum = 0.0;
      for (double v : values) sum += v;
      row.mean = sum / static_cast<double>(values.size());
      double ss = 0.0;
      for (double v : values) ss += (v - row.mean) * (v - row.mean);
      row.sd = values.size() > 1
                   ? std::sqrt(ss / static_cast<double>(values.size() - 1))
                   : 0.0;
      std::sort(values.begin(), values.end());
      row.q05 = quantile_sorted(values, 0.05);
      row.q25 = quantile_sorted(values, 0.25);
      row.q50 = quantile_sorted(values, 0.50);
      row.q75 = quantile_sorted(values, 0.75);
      row.q95 = quantile_sorted(values, 0.95);
      out.push_back(std::move(row));
    }
  }
  return out;
}

CorrelationTable pooled_variant_correlations(
    const std::vector<ReplicationRecord>& records) {
  const std::vector<Column>& cols = report_columns();
  std::vector<const Column*> variants;
  for (const Column& c : cols) {
    const std::string name = c.name;
    if (name.rfind("psi", 0) == 0) variants.push_back(&c);
  }

  CorrelationTable table;
  for (const Column* c : variants) table.names.emplace_back(c->name);
  const std::size_t k = variants.size();
  table.r.assign(k * k, 1.0);

  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) {
      std::vector<double> xs, ys;
      for (const ReplicationRecord& rec : records) {
        if (rec.failed) continue;
        const auto x = variants[a]->get(rec.report);
        const auto y = variants[b]->get(rec.report);
        if (x && y) {
          xs.push_back(*x);
          ys.push_back(*y);
        }
      }
      double r_ab = 0.0;
      const std::size_t n = xs.size();
      if (n >= 2) {
        double mx = 0.0, my = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
          mx += xs[i];
          my += ys[i];
        }
        mx /= static_cast<double>(n);
        my /= static_cast<double>(n);
        double sxy = 0.0, sxx = 0.0, syy = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
          sxy += (xs[i] - mx) * (ys[i] - my);
          sxx += (xs[i] - mx) * (xs[i] - mx);
          syy += (ys[i] - my) * (ys[i] - my);
        }
        if (sxx > 0.0 && syy > 0.0) r_ab = sxy / std::sqrt(sxx * syy);
      }
      table.r[a * k + b] = r_ab;
      table.r[b * k + a] = r_ab;
    }
  }
  return table;
}

std::vector<ThetaRow> theta_sweep(const InteractionMatrix& m,
                                  const WeightVector& w,
                                  const std::vector<double>& thetas) {
  const double h = hhi(w);
  const double g = gini(w);
  std::vector<ThetaRow> rows;
  rows.reserve(thetas.size());
  for (double theta : thetas) {
    const BinaryGraph graph = threshold_graph(m, theta);
    rows.push_back(ThetaRow{theta, nci_baseline(w, graph), h, g});
  }
  return rows;
}

std::vector<RollingResult> rolling_nci(const ReturnPanel& panel,
                                       const WeightVector& w, int window,
                                       int step, int b, std::uint64_t seed,
                                       int threads) {
  const int t = panel.rows();
  if (window < 3) throw OutOfRange("window must be >= 3");
  if (step < 1) throw OutOfRange("step must be >= 1");
  if (b < 2) throw OutOfRange("bootstrap resample count must be >= 2");
  if (t < window) {
    throw InsufficientData("panel has " + std::to_string(t) +
                           " rows but the window needs " +
                           std::to_string(window));
  }
  if (panel.cols() != w.size()) {
    throw ValidationError("weights have " + std::to_string(w.size()) +
                          " entries but panel has " +
                          std::to_string(panel.cols()) + " columns");
  }

  const double h = hhi(w);
  const double g = gini(w);
  const int n_windows = (t - window) / step + 1;
  std::vector<RollingResult> results(static_cast<std::size_t>(n_windows));
  std::atomic<long long> failed_resamples{0};

  auto window_nci = [&](const ReturnPanel& rows) {
    const SymmetricMatrix corr = correlation_matrix(rows);
    const BinaryGraph tree = mst(mantegna_distances(corr));
    return nci_baseline(w, tree);
  };

  parallel_for(n_windows, threads, [&](int wi) {
    const int first = wi * step;
    const ReturnPanel rows = panel.slice(first, window);
    const double point = window_nci(rows);

    const int cols = rows.cols();
    std::vector<double> draws;
    draws.reserve(static_cast<std::size_t>(b));
    std::vector<double> buffer(static_cast<std::size_t>(window) * cols);
    std::vector<std::string> stamps(rows.timestamps());
    for (int k = 0; k < b; ++k) {
      CounterRng rng(seed, static_cast<std::uint64_t>(wi) * static_cast<std::uint64_t>(b) +
                               static_cast<std::uint64_t>(k));
      for (int row = 0; row < window; ++row) {
        const int pick = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(window)));
        for (int c = 0; c < cols; ++c) {
          buffer[static_cast<std::size_t>(row) * cols + static_cast<std::size_t>(c)] =
              rows.at(pick, c);
        }
      }
      try {
        draws.push_back(window_nci(ReturnPanel(rows.labels(), stamps, buffer)));
      } catch (const Error&) {
        failed_resamples.fetch_add(1);
      }
    }
    if (draws.size() < 2) {
      throw Error("window " + std::to_string(wi) +
                  ": too few successful bootstrap resamples");
    }
    std::sort(draws.begin(), draws.end());

    RollingResult& res = results[static_cast<std::size_t>(wi)];
    res.window_start = rows.timestamps().front();
    res.window_end = rows.timestamps().back();
    res.nci = point;
    res.ci_low = quantile_sorted(draws, 0.025);
    res.ci_high = quantile_sorted(draws, 0.975);
    res.hhi = h;
    res.gini = g;
    res.point_outside_ci = point < res.ci_low || point > res.ci_high;
  });

  const long long total = static_cast<long long>(n_windows) * b;
  if (total > 0 &&
      static_cast<double>(failed_resamples.load()) / static_cast<double>(total) > 0.01) {
    throw Error("bootstrap resample failure fraction exceeds 1%");
  }
  return results;
}

}  // namespace nci
