#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "robplam/inference.hpp"
#include "robplam/plam.hpp"
#include "robplam/reference_tables.hpp"
#include "robplam/simlab.hpp"

namespace robplam {

struct LinearColumn {
  std::string name;
  bool categorical = false;
};

/// Which CSV columns play which role. An empty response is allowed for
/// prediction inputs.
struct DatasetSchema {
  std::string response;
  std::vector<LinearColumn> linear;
  std::vector<std::string> smooth;
  /// Categorical levels to use instead of those observed (for prediction).
  std::map<std::string, std::vector<std::string>> fixed_levels;
};

struct CategoricalColumn {
  std::string name;
  std::vector<std::string> levels;  // levels[0] is the reference level
  int first_dummy = 0;              // column of Z holding levels[1]
};

struct Dataset {
  std::vector<std::string> header;
  std::string response_name;
  std::vector<std::string> linear_names;  // after dummy expansion
  std::vector<std::string> smooth_names;
  Eigen::VectorXd y;
  Eigen::MatrixXd Z;
  Eigen::MatrixXd X;
  std::vector<int> source_rows;  // 1-based data-row numbers of the kept rows
  int dropped_rows = 0;
  std::vector<CategoricalColumn> categoricals;

  Eigen::Index n() const { return X.rows(); }
  /// Level label of categorical column `c` for every kept row.
  std::vector<std::string> decode(const CategoricalColumn& c) const;
};

/// Parses "Month:categorical" style linear-column specifications.
std::vector<LinearColumn> parse_linear_columns(const std::string& list);
std::vector<std::string> split_list(const std::string& list, char sep = ',');

/// Reads a comma-separated file with a header row. NA, NaN, null, "." and
/// empty cells count as missing; rows missing any used column are dropped.
Dataset read_csv(const std::filesystem::path& path, const DatasetSchema& schema);
Dataset parse_csv(const std::string& text, const DatasetSchema& schema);

/// Everything a run needs, fully defaulted.
struct RunConfig {
  Method method = Method::MM;
  double c0 = kTukeyScaleC;
  double b = kScaleB;
  double c1 = kTukeyEfficiencyC;
  int order = 4;
  std::vector<int> k_grid;  // empty: automatic rule
  KnotMode knots = KnotMode::Quantile;
  Centering centering = Centering::Empirical;
  SolverConfig solver{};
  CovarianceMethod inference = CovarianceMethod::PluginWeighted;
  std::string output_dir = "robplam-out";
  int threads = 0;

  PlamSpec plam_spec() const;
};

std::string to_json_string(const RunConfig& config);
RunConfig run_config_from_json(const std::string& text);
RunConfig load_run_config(const std::filesystem::path& path);

std::string format_double(double v);  // 17 significant digits

struct ReportPaths {
  std::filesystem::path coefficients;
  std::filesystem::path curves;
  std::filesystem::path residuals;
  std::filesystem::path summary;
};

/// Writes coefficients.csv, curves.csv, residuals.csv and summary.json into
/// `dir`. The summary embeds the fitted model so it can be reloaded.
ReportPaths write_report(const PlamFit& fit, const std::optional<CovarianceEstimate>& covariance,
                         const Dataset& data, const RunConfig& config,
                         const std::filesystem::path& dir, int curve_points = 100);

/// Curve grid used by write_report: curve_points equispaced values over the
/// central 90% of the basis interval.
std::vector<double> curve_grid(const CenteredSplineBasis& basis, int curve_points = 100);

struct SavedModel {
  PlamFit fit;
  DatasetSchema schema;
};

/// Restores the model block written into summary.json.
SavedModel load_model(const std::filesystem::path& summary_json);

/// "M<model>_<contamination>", the file stem used for simulation outputs.
std::string simulation_stem(int model, Contamination contamination);

/// Summary value addressed the way the published tables are: table in
/// {ise, ise_trim, beta1, beta2, mu}, quantity in {mise5, medise, mise_trim,
/// medise_trim, bias, sd, mse, mean}, component 1 or 2 (ignored for mu).
double summary_value(const SummaryRow& row, const std::string& table, const std::string& quantity,
                     int component);

/// Writes summary_<stem>.csv, kprop_<stem>.csv, records_<stem>.csv and one
/// curve matrix per method and component into `dir`. Returns the paths.
std::vector<std::filesystem::path> write_simulation(const ExperimentResult& result,
                                                    const std::filesystem::path& dir);

/// One compared table cell: published value against the reproduction.
struct ComparisonRow {
  ReferenceCell cell;
  std::optional<double> reproduced;  // empty when the cell was not run or failed
  std::string note;
};

/// Relative deviation (reproduced - published) / |published|; NaN when the
/// published value is 0.
double relative_deviation(double published, double reproduced);

/// comparison.csv plus a Markdown rendering of the same rows.
void write_comparison(const std::vector<ComparisonRow>& rows, const std::filesystem::path& dir);

void write_text(const std::filesystem::path& path, const std::string& text);
std::string read_text(const std::filesystem::path& path);

}  // namespace robplam
