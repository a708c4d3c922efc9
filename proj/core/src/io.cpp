#include "nci/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <ostream>
#include <set>

namespace nci::io {

namespace {

std::string trim(const std::string& s) {
  std::size_t first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  std::size_t last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::string::size_type start = 0;
  for (;;) {
    const auto comma = line.find(',', start);
    if (comma == std::string::npos) {
      fields.push_back(trim(line.substr(start)));
      break;
    }
    fields.push_back(trim(line.substr(start, comma - start)));
    start = comma + 1;
  }
  return fields;
}

double parse_double(const std::string& field, std::size_t line_no,
                    const std::string& what) {
  double value = 0.0;
  const char* begin = field.data();
  const char* end = begin + field.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ParseError("cannot parse " + what + " '" + field + "'", line_no);
  }
  return value;
}

bool is_missing(const std::string& field) {
  if (field.empty()) return true;
  std::string lower(field);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return lower == "na" || lower == "nan" || lower == "null";
}

std::ifstream open_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return in;
}

// Read all non-empty lines; 1-based line numbers preserved.
std::vector<std::pair<std::size_t, std::string>> read_lines(std::istream& in) {
  std::vector<std::pair<std::size_t, std::string>> lines;
  std::string line;
  std::size_t no = 0;
  while (std::getline(in, line)) {
    ++no;
    if (trim(line).empty()) continue;
    lines.emplace_back(no, line);
  }
  return lines;
}

std::string opt_field(const std::optional<double>& v) {
  return v ? format_number(*v) : std::string{};
}

}  // namespace

std::string format_number(double v) {
  char buf[64];
  const auto [ptr, ec] =
      std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 6);
  if (ec != std::errc{}) return "nan";
  return std::string(buf, ptr);
}

WeightsFile read_weights(const std::string& path) {
  std::ifstream in = open_file(path);
  const auto lines = read_lines(in);
  if (lines.empty()) throw ParseError("'" + path + "' is empty");

  const auto header = split_csv(lines.front().second);
  if (header.size() != 2 || header[0] != "node" || header[1] != "weight") {
    throw ParseError("expected header 'node,weight' in '" + path + "'",
                     lines.front().first);
  }

  std::map<std::string, double> by_label;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto& [no, raw] = lines[k];
    const auto fields = split_csv(raw);
    if (fields.size() != 2) {
      throw ParseError("expected 2 fields, got " + std::to_string(fields.size()),
                       no);
    }
    const std::string& label = fields[0];
    if (label.empty()) throw ParseError("empty node label", no);
    const double value = parse_double(fields[1], no, "weight");
    if (value < 0.0) {
      throw ParseError("negative weight for node '" + label + "'", no);
    }
    if (!by_label.emplace(label, value).second) {
      throw ParseError("duplicate node label '" + label + "'", no);
    }
  }

  std::vector<std::string> labels;
  std::vector<double> values;
  labels.reserve(by_label.size());
  values.reserve(by_label.size());
  for (const auto& [label, value] : by_label) {
    labels.push_back(label);
    values.push_back(value);
  }
  try {
    WeightVector weights(std::move(values));
    const double raw_sum = weights.raw_sum();
    return WeightsFile{std::move(labels), std::move(weights), raw_sum};
  } catch (const ValidationError& e) {
    throw ParseError(std::string("'") + path + "': " + e.what());
  }
}

EdgeListFile read_edge_list(const std::string& path) {
  std::ifstream in = open_file(path);
  const auto lines = read_lines(in);
  if (lines.empty()) throw ParseError("'" + path + "' is empty");

  const auto header = split_csv(lines.front().second);
  bool weighted = false;
  if (header.size() == 3 && header[0] == "source" && header[1] == "target" &&
      header[2] == "intensity") {
    weighted = true;
  } else if (header.size() != 2 || header[0] != "source" ||
             header[1] != "target") {
    throw ParseError("expected header 'source,target[,intensity]' in '" + path +
                         "'",
                     lines.front().first);
  }

  EdgeListFile file;
  file.weighted = weighted;
  std::set<std::pair<std::string, std::string>> seen;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto& [no, raw] = lines[k];
    const auto fields = split_csv(raw);
    if (fields.size() != (weighted ? 3u : 2u)) {
      throw ParseError("expected " + std::to_string(weighted ? 3 : 2) +
                           " fields, got " + std::to_string(fields.size()),
                       no);
    }
    const std::string& a = fields[0];
    const std::string& b = fields[1];
    if (a.empty() || b.empty()) throw ParseError("empty node label", no);
    if (a == b) throw ParseError("self-loop on node '" + a + "'", no);
    double intensity = 1.0;
    if (weighted) {
      intensity = parse_double(fields[2], no, "intensity");
      if (intensity < 0.0) throw ParseError("negative intensity", no);
    }
    const std::pair<std::string, std::string> key =
        a < b ? std::make_pair(a, b) : std::make_pair(b, a);
    if (!seen.insert(key).second) {
      throw ParseError("duplicate edge '" + a + "'-'" + b + "'", no);
    }
    file.edges.emplace_back(a, b, intensity);
  }
  return file;
}

namespace {

std::vector<std::pair<int, int>> resolve_edges(
    const EdgeListFile& file, const std::vector<std::string>& labels) {
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    index.emplace(labels[i], static_cast<int>(i));
  }
  std::set<std::string> unknown;
  std::vector<std::pair<int, int>> edges;
  edges.reserve(file.edges.size());
  for (const auto& [a, b, intensity] : file.edges) {
    const auto ia = index.find(a);
    const auto ib = index.find(b);
    if (ia == index.end()) unknown.insert(a);
    if (ib == index.end()) unknown.insert(b);
    if (ia != index.end() && ib != index.end()) {
      edges.emplace_back(ia->second, ib->second);
    }
  }
  if (!unknown.empty()) {
    std::string msg = "edge-list labels not present in the weights file:";
    for (const std::string& u : unknown) msg += " '" + u + "'";
    throw LabelMismatch(msg);
  }
  return edges;
}

}  // namespace

BinaryGraph to_graph(const EdgeListFile& file,
                     const std::vector<std::string>& labels) {
  return BinaryGraph(static_cast<int>(labels.size()),
                     resolve_edges(file, labels));
}

InteractionMatrix to_interaction(const EdgeListFile& file,
                                 const std::vector<std::string>& labels) {
  const auto pairs = resolve_edges(file, labels);
  std::vector<std::tuple<int, int, double>> weighted;
  weighted.reserve(pairs.size());
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    weighted.emplace_back(pairs[k].first, pairs[k].second,
                          std::get<2>(file.edges[k]));
  }
  return InteractionMatrix::from_edges(static_cast<int>(labels.size()),
                                       weighted);
}

CoefficientMatrix read_coefficient_matrix(const std::string& path) {
  std::ifstream in = open_file(path);
  const auto lines = read_lines(in);
  if (lines.empty()) throw ParseError("'" + path + "' is empty");

  auto header = split_csv(lines.front().second);
  if (header.size() < 3) {
    throw ParseError("coefficient matrix needs at least 2 labels",
                     lines.front().first);
  }
  const std::vector<std::string> labels(header.begin() + 1, header.end());
  const std::size_t n = labels.size();
  if (lines.size() - 1 != n) {
    throw NonSquare("coefficient matrix has " + std::to_string(n) +
                    " columns but " + std::to_string(lines.size() - 1) + " rows");
  }

  std::vector<double> dense(n * n, 0.0);
  for (std::size_t r = 0; r < n; ++r) {
    const auto& [no, raw] = lines[r + 1];
    const auto fields = split_csv(raw);
    if (fields.size() != n + 1) {
      throw ParseError("expected " + std::to_string(n + 1) + " fields, got " +
                           std::to_string(fields.size()),
                       no);
    }
    if (fields[0] != labels[r]) {
      throw ParseError("row label '" + fields[0] +
                           "' does not match column label '" + labels[r] + "'",
                       no);
    }
    for (std::size_t c = 0; c < n; ++c) {
      dense[r * n + c] = parse_double(fields[c + 1], no, "coefficient");
    }
  }
  return CoefficientMatrix(labels, std::move(dense));
}

PanelFile read_panel(const std::string& path) {
  std::ifstream in = open_file(path);
  const auto lines = read_lines(in);
  if (lines.empty()) throw ParseError("'" + path + "' is empty");

  const auto header = split_csv(lines.front().second);
  if (header.size() < 2 || header[0] != "date") {
    throw ParseError("expected header 'date,<asset>...' in '" + path + "'",
                     lines.front().first);
  }
  const std::vector<std::string> labels(header.begin() + 1, header.end());
  const std::size_t n = labels.size();

  std::vector<std::string> timestamps;
  std::vector<double> data;
  int dropped = 0;
  std::string prev_date;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto& [no, raw] = lines[k];
    const auto fields = split_csv(raw);
    if (fields.size() != n + 1) {
      throw ParseError("expected " + std::to_string(n + 1) + " fields, got " +
                           std::to_string(fields.size()),
                       no);
    }
    const std::string& date = fields[0];
    if (date.empty()) throw ParseError("empty date", no);
    if (!prev_date.empty() && date <= prev_date) {
      throw ParseError("dates must be strictly increasing ('" + date +
                           "' after '" + prev_date + "')",
                       no);
    }
    bool missing = false;
    for (std::size_t c = 1; c <= n; ++c) {
      if (is_missing(fields[c])) {
        missing = true;
        break;
      }
    }
    if (missing) {
      ++dropped;
      continue;
    }
    prev_date = date;
    timestamps.push_back(date);
    for (std::size_t c = 1; c <= n; ++c) {
      data.push_back(parse_double(fields[c], no, "value"));
    }
  }
  if (timestamps.size() < 2) {
    throw ParseError("'" + path + "' has fewer than 2 complete rows");
  }
  return PanelFile{ReturnPanel(labels, std::move(timestamps), std::move(data)),
                   dropped};
}

void write_edge_list(std::ostream& os, const BinaryGraph& g,
                     const std::vector<std::string>& labels) {
  os << "source,target\n";
  for (auto [i, j] : g.edges()) {
    os << labels[static_cast<std::size_t>(i)] << ','
       << labels[static_cast<std::size_t>(j)] << '\n';
  }
}

void write_mst_edge_list(std::ostream& os, const BinaryGraph& tree,
                         const SymmetricMatrix& dist,
                         const std::vector<std::string>& labels) {
  os << "source,target,distance\n";
  for (auto [i, j] : tree.edges()) {
    os << labels[static_cast<std::size_t>(i)] << ','
       << labels[static_cast<std::size_t>(j)] << ','
       << format_number(dist.at(i, j)) << '\n';
  }
}

void write_report_csv(std::ostream& os, const IndexReport& r) {
  os << "hhi,gini,density,psi,psi_dens,psi_null,z_null,psi_deg,psi_weighted,"
        "psi_transformed,psi_multilayer\n";
  os << format_number(r.hhi) << ',' << format_number(r.gini) << ','
     << format_number(r.density) << ',' << opt_field(r.psi) << ','
     << opt_field(r.psi_dens) << ',' << opt_field(r.psi_null) << ','
     << opt_field(r.z_null) << ',' << opt_field(r.psi_deg) << ','
     << opt_field(r.psi_weighted) << ',' << opt_field(r.psi_transformed) << ','
     << opt_field(r.psi_multilayer) << '\n';
}

void write_replications_csv(std::ostream& os,
                            const std::vector<ReplicationRecord>& records) {
  os << "mechanism,stream,failed,hhi,gini,density,psi,psi_dens,psi_null,"
        "z_null,psi_deg,psi_weighted,psi_transformed,psi_multilayer,reason\n";
  for (const ReplicationRecord& rec : records) {
    std::string reason = rec.failure_reason;
    std::replace(reason.begin(), reason.end(), ',', ';');
    std::replace(reason.begin(), reason.end(), '\n', ' ');
    os << to_string(rec.scenario) << ',' << rec.seed << ','
       << (rec.failed ? 1 : 0) << ',';
    if (rec.failed) {
      os << ",,,,,,,,,,," << reason << '\n';
      continue;
    }
    const IndexReport& r = rec.report;
    os << format_number(r.hhi) << ',' << format_number(r.gini) << ','
       << format_number(r.density) << ',' << opt_field(r.psi) << ','
       << opt_field(r.psi_dens) << ',' << opt_field(r.psi_null) << ','
       << opt_field(r.z_null) << ',' << opt_field(r.psi_deg) << ','
       << opt_field(r.psi_weighted) << ',' << opt_field(r.psi_transformed)
       << ',' << opt_field(r.psi_multilayer) << ",\n";
  }
}

void write_summary_csv(std::ostream& os, const std::vector<SummaryRow>& rows) {
  os << "mechanism,variant,count,mean,sd,q05,q25,q50,q75,q95\n";
  for (const SummaryRow& row : rows) {
    os << to_string(row.scenario) << ',' << row.variant << ',' << row.count
       << ',' << format_number(row.mean) << ',' << format_number(row.sd) << ','
       << format_number(row.q05) << ',' << format_number(row.q25) << ','
       << format_number(row.q50) << ',' << format_number(row.q75) << ','
       << format_number(row.q95) << '\n';
  }
}

void write_er_grid_csv(std::ostream& os, const std::vector<ErGridRow>& rows) {
  os << "p,mean_psi,se,deviation\n";
  for (const ErGridRow& row : rows) {
    os << format_number(row.p) << ',' << format_number(row.mean_psi) << ','
       << format_number(row.se) << ',' << format_number(row.deviation) << '\n';
  }
}

void write_theta_csv(std::ostream& os, const std::vector<ThetaRow>& rows) {
  os << "theta,nci,hhi,gini\n";
  for (const ThetaRow& row : rows) {
    os << format_number(row.theta) << ',' << format_number(row.nci) << ','
       << format_number(row.hhi) << ',' << format_number(row.gini) << '\n';
  }
}

void write_rolling_csv(std::ostream& os,
                       const std::vector<RollingResult>& rows) {
  os << "window_start,window_end,nci,ci_low,ci_high,hhi,gini\n";
  for (const RollingResult& row : rows) {
    os << row.window_start << ',' << row.window_end << ','
       << format_number(row.nci) << ',' << format_number(row.ci_low) << ','
       << format_number(row.ci_high) << ',' << format_number(row.hhi) << ','
       << format_number(row.gini) << '\n';
  }
}

void write_correlations_csv(std::ostream& os, const CorrelationTable& table) {
  os << "variant";
  for (const std::string& name : table.names) os << ',' << name;
  os << '\n';
  const std::size_t k = table.names.size();
  for (std::size_t i = 0; i < k; ++i) {
    os << table.names[i];
    for (std::size_t j = 0; j < k; ++j) os << ',' << format_number(table.at(i, j));
    os << '\n';
  }
}

}  // namespace nci::io
