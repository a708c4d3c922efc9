// Command-line front end: computes concentration indices on user-supplied
// weight/network files and runs the simulation, sweep, and rolling pipelines.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nci/degree_solver.hpp"
#include "nci/indices.hpp"
#include "nci/io.hpp"
#include "nci/mc.hpp"
#include "nci/measures.hpp"
#include "nci/netbuild.hpp"
#include "nci/netgen.hpp"

namespace {

using nci::BinaryGraph;
using nci::InteractionMatrix;
using nci::ReturnPanel;
using nci::Transformation;
using nci::WeightVector;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("NCI_SEED")) {
    return std::strtoull(env, nullptr, 10);
  }
  return 0;
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw nci::Error("cannot open output file '" + path + "'");
  return file;
}

void warn(const std::string& msg) { std::cerr << "nci: warning: " << msg << "\n"; }

void notice_renormalized(const nci::io::WeightsFile& wf) {
  if (std::abs(wf.raw_sum - 1.0) > 1e-9) {
    warn("weights sum to " + nci::io::format_number(wf.raw_sum) +
         "; renormalized to 1");
  }
}

nci::SolverMethod parse_deg_mode(const std::string& mode) {
  if (mode == "greedy") return nci::SolverMethod::greedy;
  if (mode == "rewire" || mode == "greedy+rewire")
    return nci::SolverMethod::greedy_rewire;
  if (mode == "exact") return nci::SolverMethod::exact;
  throw nci::OutOfRange("unknown solver mode '" + mode + "'");
}

Transformation parse_transform(const std::string& name, double tau) {
  if (name == "square") return Transformation::square();
  if (name == "absolute" || name == "abs") return Transformation::absolute();
  if (name == "sqrt") return Transformation::sqrt_abs();
  if (name == "exceedance") return Transformation::exceedance(tau);
  throw nci::OutOfRange("unknown transformation '" + name + "'");
}

/// Permute file-ordered weights onto the label order of another input.
WeightVector align_weights(const nci::io::WeightsFile& wf,
                           const std::vector<std::string>& target_labels) {
  std::map<std::string, double> by_label;
  for (std::size_t i = 0; i < wf.labels.size(); ++i) {
    by_label.emplace(wf.labels[i], wf.weights[static_cast<int>(i)]);
  }
  std::set<std::string> missing;
  std::vector<double> values;
  values.reserve(target_labels.size());
  for (const std::string& label : target_labels) {
    const auto it = by_label.find(label);
    if (it == by_label.end()) {
      missing.insert(label);
    } else {
      values.push_back(it->second);
      by_label.erase(it);
    }
  }
  if (!missing.empty() || !by_label.empty()) {
    std::string msg = "label sets differ.";
    if (!missing.empty()) {
      msg += " Missing from weights:";
      for (const std::string& l : missing) msg += " '" + l + "'";
    }
    if (!by_label.empty()) {
      msg += " Only in weights:";
      for (const auto& [l, v] : by_label) msg += " '" + l + "'";
    }
    throw nci::LabelMismatch(msg);
  }
  return WeightVector(std::move(values));
}

nlohmann::json report_to_json(const nci::IndexReport& r) {
  nlohmann::json j;
  j["hhi"] = r.hhi;
  j["gini"] = r.gini;
  j["density"] = r.density;
  auto set = [&j](const char* key, const std::optional<double>& v) {
    if (v) {
      j[key] = *v;
    } else {
      j[key] = nullptr;
    }
  };
  set("psi", r.psi);
  set("psi_dens", r.psi_dens);
  set("psi_null", r.psi_null);
  set("z_null", r.z_null);
  set("psi_deg", r.psi_deg);
  set("psi_weighted", r.psi_weighted);
  set("psi_transformed", r.psi_transformed);
  set("psi_multilayer", r.psi_multilayer);
  return j;
}

struct ComputeArgs {
  std::string weights_path;
  std::string network_path;
  std::string transformed_path;
  std::vector<std::string> layer_paths;
  std::vector<double> alphas;
  std::optional<double> null_p;
  std::string null_model;  // "density" or "config"
  int null_r = 2000;
  std::string deg_mode;
  int deg_node_limit = 9;
  std::uint64_t seed = 0;
  std::string output;
  bool json = false;
};

int run_compute(const ComputeArgs& args) {
  const nci::io::WeightsFile wf = nci::io::read_weights(args.weights_path);
  notice_renormalized(wf);
  const WeightVector& w = wf.weights;

  const nci::io::EdgeListFile ef = nci::io::read_edge_list(args.network_path);
  const BinaryGraph g = nci::io::to_graph(ef, wf.labels);

  nci::IndexReport report;
  report.hhi = nci::hhi(w);
  report.gini = nci::gini(w);
  report.density = nci::density(g);

  // Library raises on a degenerate benchmark; the command maps it to zero
  // with a warning instead.
  try {
    report.psi = nci::nci_baseline(w, g);
  } catch (const nci::DegenerateBenchmark& e) {
    warn(std::string(e.what()) + "; reporting psi = 0 by convention");
    report.psi = 0.0;
  }
  if (report.density > 0.0 && report.psi) {
    report.psi_dens = *report.psi / report.density;
  } else if (report.density == 0.0) {
    warn("network has no edges; density-adjusted index left empty");
  }

  if (args.null_p && !args.null_model.empty()) {
    throw nci::OutOfRange("--null-p and --null-model are mutually exclusive");
  }
  if (args.null_p) {
    const nci::NullModelResult nm = nci::nci_null_model(w, g, *args.null_p);
    report.psi_null = nm.psi_null;
    report.z_null = nm.z;
  } else if (!args.null_model.empty()) {
    const nci::McNullModel model =
        args.null_model == "density" ? nci::McNullModel::density_preserving
        : args.null_model == "config"
            ? nci::McNullModel::configuration
            : throw nci::OutOfRange("unknown null model '" + args.null_model +
                                    "' (use density|config)");
    const nci::NullModelResult nm =
        nci::nci_null_model_mc(w, g, model, args.null_r, args.seed);
    report.psi_null = nm.psi_null;
    report.z_null = nm.z;
  }

  if (!args.deg_mode.empty()) {
    report.psi_deg = nci::nci_degree_constrained(
        w, g, parse_deg_mode(args.deg_mode), args.deg_node_limit);
  }

  if (ef.weighted) {
    report.psi_weighted =
        nci::nci_weighted(w, nci::io::to_interaction(ef, wf.labels));
  }

  if (!args.transformed_path.empty()) {
    const nci::io::EdgeListFile tf = nci::io::read_edge_list(args.transformed_path);
    report.psi_transformed =
        nci::nci_transformed(w, nci::io::to_graph(tf, wf.labels));
  }

  if (!args.layer_paths.empty()) {
    if (args.layer_paths.size() != args.alphas.size()) {
      throw nci::LayerMismatch(std::to_string(args.layer_paths.size()) +
                               " --layer flags but " +
                               std::to_string(args.alphas.size()) +
                               " --alpha flags");
    }
    std::vector<BinaryGraph> layers;
    layers.reserve(args.layer_paths.size());
    for (const std::string& path : args.layer_paths) {
      layers.push_back(nci::io::to_graph(nci::io::read_edge_list(path), wf.labels));
    }
    report.psi_multilayer =
        nci::nci_multilayer(w, layers, nci::LayerWeights(args.alphas));
  }

  std::ofstream file;
  std::ostream& os = open_output(file, args.output);
  if (args.json) {
    os << report_to_json(report).dump() << '\n';
  } else {
    nci::io::write_report_csv(os, report);
  }
  return 0;
}

struct SimulateArgs {
  std::string experiment = "fixed";
  int r = 0;
  std::uint64_t seed = 0;
  double p = 12.0 / 45.0;
  std::string deg_mode = "rewire";
  int threads = 1;
  std::string out_replications;
  std::string out_summary;
  std::string out_correlations;
};

int run_simulate(const SimulateArgs& args) {
  nci::McOptions opt;
  opt.er_p = args.p;
  opt.deg_mode = parse_deg_mode(args.deg_mode);
  opt.threads = args.threads;

  const bool joint = args.experiment == "joint";
  if (!joint && args.experiment != "fixed") {
    throw nci::OutOfRange("unknown experiment '" + args.experiment +
                          "' (use fixed|joint)");
  }
  const int r = args.r > 0 ? args.r : (joint ? 800 : 5000);

  const std::vector<nci::ReplicationRecord> records =
      joint ? nci::experiment_joint(r, args.seed, opt)
            : nci::experiment_fixed_weights(r, args.seed, opt);

  std::size_t failed = 0;
  for (const nci::ReplicationRecord& rec : records) failed += rec.failed ? 1 : 0;
  if (failed > 0) {
    warn(std::to_string(failed) + " of " + std::to_string(records.size()) +
         " replications failed (fraction " +
         nci::io::format_number(static_cast<double>(failed) /
                                static_cast<double>(records.size())) +
         "); kept in the output with empty index fields");
  }

  {
    std::ofstream file;
    std::ostream& os = open_output(file, args.out_replications);
    nci::io::write_replications_csv(os, records);
  }
  if (!args.out_summary.empty()) {
    std::ofstream file(args.out_summary);
    if (!file) throw nci::Error("cannot open '" + args.out_summary + "'");
    nci::io::write_summary_csv(file, nci::summarize(records));
  }
  if (!args.out_correlations.empty()) {
    std::ofstream file(args.out_correlations);
    if (!file) throw nci::Error("cannot open '" + args.out_correlations + "'");
    nci::io::write_correlations_csv(file, nci::pooled_variant_correlations(records));
  }
  return 0;
}

struct ValidateErArgs {
  int r = 5000;
  std::uint64_t seed = 0;
  std::vector<double> grid;
  int threads = 1;
  std::string output;
};

int run_validate_er(const ValidateErArgs& args) {
  nci::McOptions opt;
  opt.threads = args.threads;
  const std::vector<double> grid =
      args.grid.empty() ? nci::default_er_grid() : args.grid;
  const auto rows = nci::validate_er_benchmark(grid, args.r, args.seed, opt);
  std::ofstream file;
  std::ostream& os = open_output(file, args.output);
  nci::io::write_er_grid_csv(os, rows);
  return 0;
}

struct SweepArgs {
  std::string coefficients_path;
  std::string weights_path;
  std::vector<double> thetas;
  double theta_min = 0.0;
  double theta_max = 0.0;
  int theta_count = 0;
  bool log_grid = false;
  std::string output;
};

int run_sweep(const SweepArgs& args) {
  const nci::CoefficientMatrix coeff =
      nci::io::read_coefficient_matrix(args.coefficients_path);
  const nci::io::WeightsFile wf = nci::io::read_weights(args.weights_path);
  notice_renormalized(wf);
  const WeightVector w = align_weights(wf, coeff.labels());

  std::vector<double> thetas = args.thetas;
  if (thetas.empty()) {
    if (args.theta_count < 2 || !(args.theta_max > args.theta_min)) {
      throw nci::OutOfRange(
          "give --thetas or a grid via --theta-min/--theta-max/--theta-count");
    }
    if (args.log_grid && !(args.theta_min > 0.0)) {
      throw nci::OutOfRange("log grid needs --theta-min > 0");
    }
    for (int k = 0; k < args.theta_count; ++k) {
      const double t = static_cast<double>(k) / (args.theta_count - 1);
      thetas.push_back(args.log_grid
                           ? args.theta_min *
                                 std::pow(args.theta_max / args.theta_min, t)
                           : args.theta_min + t * (args.theta_max - args.theta_min));
    }
  }
  std::sort(thetas.begin(), thetas.end());

  const auto rows = nci::theta_sweep(symmetrize(coeff), w, thetas);
  std::ofstream file;
  std::ostream& os = open_output(file, args.output);
  nci::io::write_theta_csv(os, rows);
  return 0;
}

struct PanelArgs {
  std::string prices_path;
  std::string returns_path;
  std::string transform;
  double tau = 0.0;
};

ReturnPanel load_return_panel(const PanelArgs& args) {
  if (args.prices_path.empty() == args.returns_path.empty()) {
    throw nci::OutOfRange("give exactly one of --prices or --returns");
  }
  const std::string& path =
      args.prices_path.empty() ? args.returns_path : args.prices_path;
  nci::io::PanelFile pf = nci::io::read_panel(path);
  if (pf.dropped_rows > 0) {
    warn(std::to_string(pf.dropped_rows) + " rows with missing values dropped");
  }
  ReturnPanel panel = args.prices_path.empty() ? pf.panel : log_returns(pf.panel);
  if (!args.transform.empty()) {
    panel = apply_transformation(panel, parse_transform(args.transform, args.tau));
  }
  return panel;
}

struct MstArgs {
  PanelArgs panel;
  std::string output;
};

int run_mst(const MstArgs& args) {
  const ReturnPanel panel = load_return_panel(args.panel);
  const nci::SymmetricMatrix dist =
      mantegna_distances(correlation_matrix(panel));
  const BinaryGraph tree = nci::mst(dist);
  std::ofstream file;
  std::ostream& os = open_output(file, args.output);
  nci::io::write_mst_edge_list(os, tree, dist, panel.labels());
  return 0;
}

struct RollingArgs {
  PanelArgs panel;
  std::string weights_path;
  int window = 252;
  int step = 63;
  int b = 500;
  std::uint64_t seed = 0;
  int threads = 1;
  std::string output;
};

int run_rolling(const RollingArgs& args) {
  const ReturnPanel panel = load_return_panel(args.panel);
  const nci::io::WeightsFile wf = nci::io::read_weights(args.weights_path);
  notice_renormalized(wf);
  const WeightVector w = align_weights(wf, panel.labels());

  const auto rows = nci::rolling_nci(panel, w, args.window, args.step, args.b,
                                     args.seed, args.threads);
  for (const nci::RollingResult& row : rows) {
    if (row.point_outside_ci) {
      warn("window " + row.window_start + ".." + row.window_end +
           ": bootstrap interval does not cover the point estimate");
    }
  }
  std::ofstream file;
  std::ostream& os = open_output(file, args.output);
  nci::io::write_rolling_csv(os, rows);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Network concentration indices on weighted networks"};
  app.require_subcommand(1);

  const std::uint64_t env_seed = default_seed();

  ComputeArgs compute;
  compute.seed = env_seed;
  CLI::App* c = app.add_subcommand(
      "compute", "Index report for one weights file + network file");
  c->add_option("--weights", compute.weights_path, "weights CSV (node,weight)")
      ->required();
  c->add_option("--network", compute.network_path,
                "edge-list CSV (source,target[,intensity])")
      ->required();
  c->add_option("--null-p", compute.null_p,
                "Erdos-Renyi benchmark probability for the null-model index");
  c->add_option("--null-model", compute.null_model,
                "simulated null model: density|config");
  c->add_option("--null-r", compute.null_r,
                "replications for the simulated null model (default 2000)");
  c->add_option("--deg-mode", compute.deg_mode,
                "degree-constrained benchmark: greedy|rewire|exact");
  c->add_option("--deg-node-limit", compute.deg_node_limit,
                "node cap of the exact benchmark (default 9)");
  c->add_option("--transformed-network", compute.transformed_path,
                "edge list built from transformed data");
  c->add_option("--layer", compute.layer_paths, "edge list of one layer")
      ->take_all();
  c->add_option("--alpha", compute.alphas, "layer weight (one per --layer)")
      ->take_all();
  c->add_option("--seed", compute.seed, "generator seed");
  c->add_option("--output", compute.output, "output path (default stdout)");
  c->add_flag("--json", compute.json, "emit a JSON line instead of CSV");

  SimulateArgs simulate;
  simulate.seed = env_seed;
  CLI::App* s = app.add_subcommand("simulate", "Monte Carlo experiments");
  s->add_option("--experiment", simulate.experiment, "fixed|joint")->required();
  s->add_option("--r", simulate.r, "replications per mechanism");
  s->add_option("--seed", simulate.seed, "generator seed");
  s->add_option("--p", simulate.p, "Erdos-Renyi mechanism probability");
  s->add_option("--deg-mode", simulate.deg_mode, "greedy|rewire|exact");
  s->add_option("--threads", simulate.threads, "worker threads");
  s->add_option("--out-replications", simulate.out_replications,
                "per-replication CSV (default stdout)");
  s->add_option("--out-summary", simulate.out_summary, "summary CSV");
  s->add_option("--out-correlations", simulate.out_correlations,
                "pooled variant correlation CSV");

  ValidateErArgs validate;
  validate.seed = env_seed;
  CLI::App* v = app.add_subcommand(
      "validate-er", "Mean index vs link probability on a grid");
  v->add_option("--r", validate.r, "replications per grid point");
  v->add_option("--seed", validate.seed, "generator seed");
  v->add_option("--grid", validate.grid, "probabilities (default 0.05..0.95)")
      ->delimiter(',');
  v->add_option("--threads", validate.threads, "worker threads");
  v->add_option("--output", validate.output, "output path (default stdout)");

  SweepArgs sweep;
  CLI::App* sw =
      app.add_subcommand("sweep", "Threshold sweep over a coefficient matrix");
  sw->add_option("--coefficients", sweep.coefficients_path,
                 "dense coefficient CSV")
      ->required();
  sw->add_option("--weights", sweep.weights_path, "weights CSV")->required();
  sw->add_option("--thetas", sweep.thetas, "explicit thresholds")
      ->delimiter(',');
  sw->add_option("--theta-min", sweep.theta_min, "grid start");
  sw->add_option("--theta-max", sweep.theta_max, "grid end");
  sw->add_option("--theta-count", sweep.theta_count, "grid size");
  sw->add_flag("--log", sweep.log_grid, "logarithmic grid spacing");
  sw->add_option("--output", sweep.output, "output path (default stdout)");

  MstArgs mstargs;
  CLI::App* m = app.add_subcommand(
      "mst", "Minimum spanning tree of the return correlation structure");
  m->add_option("--prices", mstargs.panel.prices_path, "price panel CSV");
  m->add_option("--returns", mstargs.panel.returns_path, "return panel CSV");
  m->add_option("--transform", mstargs.panel.transform,
                "square|absolute|sqrt|exceedance");
  m->add_option("--tau", mstargs.panel.tau, "exceedance threshold");
  m->add_option("--output", mstargs.output, "output path (default stdout)");

  RollingArgs rolling;
  rolling.seed = env_seed;
  CLI::App* ro = app.add_subcommand(
      "rolling", "Rolling-window MST index with bootstrap bands");
  ro->add_option("--prices", rolling.panel.prices_path, "price panel CSV");
  ro->add_option("--returns", rolling.panel.returns_path, "return panel CSV");
  ro->add_option("--transform", rolling.panel.transform,
                 "square|absolute|sqrt|exceedance");
  ro->add_option("--tau", rolling.panel.tau, "exceedance threshold");
  ro->add_option("--weights", rolling.weights_path, "weights CSV")->required();
  ro->add_option("--window", rolling.window, "window length in rows");
  ro->add_option("--step", rolling.step, "step between windows");
  ro->add_option("--b", rolling.b, "bootstrap resamples per window");
  ro->add_option("--seed", rolling.seed, "generator seed");
  ro->add_option("--threads", rolling.threads, "worker threads");
  ro->add_option("--output", rolling.output, "output path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (c->parsed()) return run_compute(compute);
    if (s->parsed()) return run_simulate(simulate);
    if (v->parsed()) return run_validate_er(validate);
    if (sw->parsed()) return run_sweep(sweep);
    if (m->parsed()) return run_mst(mstargs);
    if (ro->parsed()) return run_rolling(rolling);
  } catch (const nci::Error& e) {
    std::cerr << "nci: error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
