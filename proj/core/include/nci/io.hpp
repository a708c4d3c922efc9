#pragma once

#include <iosfwd>
#include <string>
#include <tuple>
#include <vector>

#include "nci/mc.hpp"
#include "nci/netbuild.hpp"
#include "nci/types.hpp"

namespace nci::io {

/// Fixed-format number rendering: 6 significant decimals, locale-independent.
std::string format_number(double v);

/// Weights file: CSV with header `node,weight`, arbitrary string labels.
/// Canonical node order is sorted labels.
struct WeightsFile {
  std::vector<std::string> labels;
  WeightVector weights;
  double raw_sum = 1.0;
};
WeightsFile read_weights(const std::string& path);

/// Edge-list file: CSV `source,target[,intensity]`. A present intensity
/// column means the file describes an interaction matrix.
struct EdgeListFile {
  bool weighted = false;
  std::vector<std::tuple<std::string, std::string, double>> edges;
};
EdgeListFile read_edge_list(const std::string& path);

/// Resolve an edge list against the canonical label order. Unknown labels
/// raise LabelMismatch listing the offenders; labels missing from the edge
/// list are isolated nodes.
BinaryGraph to_graph(const EdgeListFile& file,
                     const std::vector<std::string>& labels);
InteractionMatrix to_interaction(const EdgeListFile& file,
                                 const std::vector<std::string>& labels);

/// Dense coefficient CSV with a header row of labels and a leading label
/// column; row and column labels must agree in order.
CoefficientMatrix read_coefficient_matrix(const std::string& path);

/// Price/return panel CSV: `date` first column (ISO-8601), one column per
/// asset. Rows containing a missing value (empty, NA, NaN) are dropped.
struct PanelFile {
  ReturnPanel panel;
  int dropped_rows = 0;
};
PanelFile read_panel(const std::string& path);

void write_edge_list(std::ostream& os, const BinaryGraph& g,
                     const std::vector<std::string>& labels);
void write_mst_edge_list(std::ostream& os, const BinaryGraph& tree,
                         const SymmetricMatrix& dist,
                         const std::vector<std::string>& labels);
void write_report_csv(std::ostream& os, const IndexReport& report);
void write_replications_csv(std::ostream& os,
                            const std::vector<ReplicationRecord>& records);
void write_summary_csv(std::ostream& os, const std::vector<SummaryRow>& rows);
void write_er_grid_csv(std::ostream& os, const std::vector<ErGridRow>& rows);
void write_theta_csv(std::ostream& os, const std::vector<ThetaRow>& rows);
void write_rolling_csv(std::ostream& os,
                       const std::vector<RollingResult>& rows);
void write_correlations_csv(std::ostream& os, const CorrelationTable& table);

}  // namespace nci::io
