// robplam command-line tool: fit, predict, simulate, bench-tables.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "robplam/error.hpp"
#include "robplam/inference.hpp"
#include "robplam/io.hpp"
#include "robplam/plam.hpp"
#include "robplam/reference_tables.hpp"
#include "robplam/simlab.hpp"

namespace {

using namespace robplam;

constexpr const char* kOutputEnv = "ROBPLAM_OUTPUT_DIR";

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::Usage: return 2;
    case ErrorCode::DatasetSchema:
    case ErrorCode::Data:
    case ErrorCode::Io: return 3;
    case ErrorCode::Numerical: return 4;
  }
  return 1;
}

void report_error(std::string_view code, const std::string& message) {
  nlohmann::json rec{{"error", code}, {"message", message}};
  std::cerr << rec.dump() << '\n';
}

std::vector<int> parse_k_grid(const std::string& text) {
  if (text.empty() || text == "auto") return {};
  std::vector<int> out;
  for (const auto& item : split_list(text)) {
    const auto dash = item.find('-');
    try {
      if (dash != std::string::npos && dash > 0) {
        const int a = std::stoi(item.substr(0, dash));
        const int b = std::stoi(item.substr(dash + 1));
        for (int k = a; k <= b; ++k) out.push_back(k);
      } else {
        out.push_back(std::stoi(item));
      }
    } catch (const std::exception&) {
      throw Error(ErrorCode::Usage, "invalid k grid entry '" + item + "'");
    }
  }
  return out;
}

// Options shared by fit and simulate that map onto RunConfig / SolverConfig.
struct Overrides {
  std::optional<std::string> method, knots, centering, k_grid, inference, out;
  std::optional<double> c0, b, c1;
  std::optional<int> order, n_sub, threads;
  std::optional<std::uint64_t> seed;
};

RunConfig resolve_config(const std::optional<std::string>& config_path, const Overrides& o) {
  RunConfig cfg;
  bool config_sets_output = false;
  if (config_path) {
    const std::string text = read_text(*config_path);
    cfg = run_config_from_json(text);
    config_sets_output = nlohmann::json::parse(text).contains("output_dir");
  }
  if (!config_sets_output) {
    if (const char* env = std::getenv(kOutputEnv); env != nullptr && *env != '\0') cfg.output_dir = env;
  }
  // Flags override the file: round-trip the flag values through the same parser.
  nlohmann::json j = nlohmann::json::parse(to_json_string(cfg));
  if (o.method) j["method"] = *o.method;
  if (o.knots) j["knots"] = *o.knots;
  if (o.centering) j["centering"] = *o.centering;
  if (o.inference && *o.inference != "none") j["inference"] = *o.inference;
  if (o.c0) j["c0"] = *o.c0;
  if (o.b) j["b"] = *o.b;
  if (o.c1) j["c1"] = *o.c1;
  if (o.order) j["order"] = *o.order;
  if (o.n_sub) j["solver"]["n_sub"] = *o.n_sub;
  if (o.seed) j["solver"]["seed"] = *o.seed;
  if (o.threads) j["threads"] = *o.threads;
  if (o.out) j["output_dir"] = *o.out;
  cfg = run_config_from_json(j.dump());
  if (o.k_grid) cfg.k_grid = parse_k_grid(*o.k_grid);
  return cfg;
}

void add_model_options(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--method", o.method, "mm or ls");
  cmd->add_option("--knots", o.knots, "uniform or quantile");
  cmd->add_option("--centering", o.centering, "integral or empirical");
  cmd->add_option("--k", o.k_grid, "basis dimensions, e.g. 4-13 or 5 or auto");
  cmd->add_option("--order", o.order, "spline order (4 = cubic)");
  cmd->add_option("--c0", o.c0, "Tukey constant of the scale rho");
  cmd->add_option("--b", o.b, "M-scale breakdown constant");
  cmd->add_option("--c1", o.c1, "Tukey constant of the M-step rho");
  cmd->add_option("--n-sub", o.n_sub, "fast-S elemental subsamples");
  cmd->add_option("--seed", o.seed, "random seed");
}

int cmd_fit(const std::string& data_path, const std::string& response, const std::string& linear,
            const std::string& smooth, const std::optional<std::string>& config_path,
            const Overrides& o, int curve_points) {
  const RunConfig cfg = resolve_config(config_path, o);
  DatasetSchema schema{response, parse_linear_columns(linear), split_list(smooth), {}};
  if (schema.smooth.empty()) throw Error(ErrorCode::Usage, "--smooth needs at least one column");
  const Dataset data = read_csv(data_path, schema);
  const PlamSpec spec = cfg.plam_spec();
  const PlamFit f = fit(data.Z, data.X, data.y, spec);

  std::optional<CovarianceEstimate> cov;
  const bool want_inference = !(o.inference && *o.inference == "none");
  if (want_inference && f.q() > 0) {
    const HStarMethod hm = cfg.method == Method::MM ? HStarMethod::Auto : HStarMethod::LeastSquares;
    const HStarFit hstar = fit_hstar(data.Z, data.X, f.bases, spec, hm);
    cov = sigma_hat_matrix(f, data.Z, data.X, hstar, cfg.inference);
  }
  const ReportPaths paths = write_report(f, cov, data, cfg, cfg.output_dir, curve_points);

  std::ostringstream out;
  out << "method " << to_string(f.method) << "  n " << data.n() << "  dropped " << data.dropped_rows
      << "\nselected k";
  for (int k : f.selected_k) out << ' ' << k;
  out << "\nmu_hat " << format_double(f.mu_hat) << "\nsigma_hat " << format_double(f.sigma_hat) << '\n';
  for (int m = 0; m < f.q(); ++m) {
    out << data.linear_names[static_cast<std::size_t>(m)] << ' ' << format_double(f.beta_hat[m]);
    if (cov) out << " (se " << format_double(cov->std_errors[m]) << ')';
    out << '\n';
  }
  out << "outliers";
  for (int i : flag_outliers(f)) out << ' ' << i + 1;
  out << "\nreport " << paths.summary.parent_path().string() << '\n';
  std::cout << out.str();
  return 0;
}

int cmd_predict(const std::string& model_path, const std::string& data_path,
                const std::optional<std::string>& out_path) {
  SavedModel model = load_model(model_path);
  DatasetSchema schema = model.schema;
  schema.response.clear();
  const Dataset data = read_csv(data_path, schema);
  const Eigen::VectorXd yhat = predict(model.fit, data.Z, data.X);
  std::ostringstream out;
  out << "row,source_row,prediction\n";
  for (Eigen::Index i = 0; i < yhat.size(); ++i) {
    out << i + 1 << ',' << data.source_rows[static_cast<std::size_t>(i)] << ','
        << format_double(yhat[i]) << '\n';
  }
  if (out_path) {
    write_text(*out_path, out.str());
  } else {
    std::cout << out.str();
  }
  return 0;
}

SimulationSpec simulation_spec(int model, const std::string& contamination, int n, int reps,
                               std::uint64_t seed, const std::string& k_grid, int n_sub, int threads,
                               int grid_size) {
  SimulationSpec s;
  s.model = model;
  s.contamination = parse_contamination(contamination);
  s.n = n;
  s.replications = reps;
  s.seed = seed;
  s.k_grid = parse_k_grid(k_grid);
  s.solver.n_sub = n_sub;
  s.threads = threads;
  s.grid_size = grid_size;
  s.validate();
  return s;
}

std::string output_dir(const std::optional<std::string>& flag, const std::string& fallback) {
  if (flag) return *flag;
  if (const char* env = std::getenv(kOutputEnv); env != nullptr && *env != '\0') return env;
  return fallback;
}

void print_summary(const ExperimentResult& r) {
  for (const auto& row : r.summaries) {
    std::cout << simulation_stem(r.spec.model, r.spec.contamination) << ' ' << to_string(row.method)
              << " ok " << row.n_ok << " failed " << row.n_failed << " medise "
              << format_double(row.medise[0]) << ' ' << format_double(row.medise[1]) << " beta1 bias "
              << format_double(row.bias[0]) << " mse " << format_double(row.mse[0]) << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Robust estimation for partially linear additive models"};
  app.require_subcommand(1);

  // fit
  auto* fit_cmd = app.add_subcommand("fit", "fit a model to a CSV data set and write a report");
  std::string data_path, response, linear, smooth;
  std::optional<std::string> config_path;
  Overrides fit_o;
  int curve_points = 100;
  fit_cmd->add_option("--data", data_path, "CSV file with a header row")->required();
  fit_cmd->add_option("--response", response, "response column")->required();
  fit_cmd->add_option("--linear", linear, "linear columns, name or name:categorical, comma separated");
  fit_cmd->add_option("--smooth", smooth, "smooth (additive) columns, comma separated")->required();
  fit_cmd->add_option("--config", config_path, "JSON configuration file");
  fit_cmd->add_option("--inference", fit_o.inference, "plugin_plain, plugin_weighted, sandwich or none");
  fit_cmd->add_option("--out", fit_o.out, "output directory (default $ROBPLAM_OUTPUT_DIR or robplam-out)");
  fit_cmd->add_option("--curve-points", curve_points, "points per exported curve")
      ->check(CLI::Range(2, 100000));
  add_model_options(fit_cmd, fit_o);

  // predict
  auto* pred_cmd = app.add_subcommand("predict", "predict new rows from a saved summary.json");
  std::string model_path, new_data;
  std::optional<std::string> pred_out;
  pred_cmd->add_option("--model", model_path, "summary.json written by fit")->required();
  pred_cmd->add_option("--data", new_data, "CSV file with the model's covariate columns")->required();
  pred_cmd->add_option("--out", pred_out, "output CSV (stdout if omitted)");

  // simulate
  auto* sim_cmd = app.add_subcommand("simulate", "run one Monte Carlo cell");
  int sim_model = 1, sim_n = 100, sim_reps = 500, sim_nsub = 500, sim_threads = 0, sim_grid = 1000;
  std::string sim_cont = "C0", sim_k = "auto";
  std::uint64_t sim_seed = 20190101;
  std::optional<std::string> sim_out;
  sim_cmd->add_option("--model", sim_model, "simulation model 1..6");
  sim_cmd->add_option("--contamination", sim_cont, "C0, C1, C2 or C3");
  sim_cmd->add_option("--n", sim_n, "sample size");
  sim_cmd->add_option("--reps", sim_reps, "replications");
  sim_cmd->add_option("--seed", sim_seed, "random seed");
  sim_cmd->add_option("--k", sim_k, "candidate basis dimensions (default: automatic rule)");
  sim_cmd->add_option("--n-sub", sim_nsub, "fast-S elemental subsamples");
  sim_cmd->add_option("--threads", sim_threads, "worker threads (0 = all cores)");
  sim_cmd->add_option("--grid-size", sim_grid, "ISE grid size");
  sim_cmd->add_option("--out", sim_out, "output directory");

  // bench-tables
  auto* bench_cmd = app.add_subcommand("bench-tables", "reproduce every Monte Carlo table cell");
  int bench_reps = 500, bench_nsub = 500, bench_threads = 0;
  std::uint64_t bench_seed = 20190101;
  std::string bench_models = "1,2,3,4,5,6", bench_conts = "C0,C1,C2,C3";
  std::optional<std::string> bench_out;
  bench_cmd->add_option("--reps", bench_reps, "replications per cell");
  bench_cmd->add_option("--seed", bench_seed, "random seed");
  bench_cmd->add_option("--n-sub", bench_nsub, "fast-S elemental subsamples");
  bench_cmd->add_option("--threads", bench_threads, "worker threads (0 = all cores)");
  bench_cmd->add_option("--models", bench_models, "subset of models, comma separated");
  bench_cmd->add_option("--contaminations", bench_conts, "subset of schemes, comma separated");
  bench_cmd->add_option("--out", bench_out, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::Error& e) {
    report_error(to_string(ErrorCode::Usage), e.what());
    return 2;
  }

  try {
    if (*fit_cmd) {
      return cmd_fit(data_path, response, linear, smooth, config_path, fit_o, curve_points);
    }
    if (*pred_cmd) return cmd_predict(model_path, new_data, pred_out);
    if (*sim_cmd) {
      const SimulationSpec spec = simulation_spec(sim_model, sim_cont, sim_n, sim_reps, sim_seed, sim_k,
                                                  sim_nsub, sim_threads, sim_grid);
      const auto result = run_experiment(spec, {Method::LS, Method::MM});
      const std::string dir = output_dir(sim_out, "robplam-sim");
      write_simulation(result, dir);
      print_summary(result);
      return 0;
    }
    if (*bench_cmd) {
      const std::string dir = output_dir(bench_out, "robplam-tables");
      std::vector<int> models;
      for (const auto& m : split_list(bench_models)) {
        try {
          models.push_back(std::stoi(m));
        } catch (const std::exception&) {
          throw Error(ErrorCode::Usage, "invalid model id '" + m + "'");
        }
      }
      std::vector<Contamination> conts;
      for (const auto& c : split_list(bench_conts)) conts.push_back(parse_contamination(c));

      std::map<std::pair<int, Contamination>, std::vector<SummaryRow>> done;
      std::map<std::pair<int, Contamination>, std::string> failed;
      for (int model : models) {
        for (Contamination c : conts) {
          // Validate before running so bad ids are usage errors, not cell failures.
          const SimulationSpec spec = simulation_spec(model, to_string(c), 100, bench_reps, bench_seed,
                                                      "auto", bench_nsub, bench_threads, 1000);
          try {
            const auto result = run_experiment(spec, {Method::LS, Method::MM});
            write_simulation(result, dir);
            print_summary(result);
            done[{model, c}] = result.summaries;
          } catch (const Error& e) {
            failed[{model, c}] = e.what();
            std::cerr << simulation_stem(model, c) << " failed: " << e.what() << '\n';
          }
        }
      }
      std::vector<ComparisonRow> rows;
      for (const auto& cell : reference_cells()) {
        ComparisonRow row{cell, std::nullopt, ""};
        const std::pair<int, Contamination> key{cell.model, cell.contamination};
        if (const auto it = done.find(key); it != done.end()) {
          for (const auto& s : it->second) {
            if (s.method != cell.method) continue;
            if (s.n_ok == 0) {
              row.note = "all replications failed";
            } else {
              row.reproduced = summary_value(s, cell.table, cell.quantity, cell.component);
              if (s.n_failed > 0) row.note = std::to_string(s.n_failed) + " failed replications";
            }
          }
        } else if (const auto ft = failed.find(key); ft != failed.end()) {
          row.note = "cell failed";
        } else {
          row.note = "not run";
        }
        rows.push_back(std::move(row));
      }
      write_comparison(rows, dir);
      return failed.empty() ? 0 : 4;
    }
  } catch (const Error& e) {
    report_error(to_string(e.code()), e.what());
    return exit_code(e.code());
  } catch (const std::exception& e) {
    report_error("INTERNAL", e.what());
    return 1;
  }
  return 0;
}
