#include "robplam/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include <json.hpp>

#include "robplam/error.hpp"

namespace robplam {

using nlohmann::json;

namespace {

bool is_missing(const std::string& cell) {
  return cell.empty() || cell == "NA" || cell == "NaN" || cell == "nan" || cell == "null" ||
         cell == "." || cell == "N/A";
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (ch == '"') {
        quoted = false;
      } else {
        cur += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      cells.push_back(trim(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  cells.push_back(trim(cur));
  return cells;
}

std::optional<double> parse_number(const std::string& cell) {
  double v = 0.0;
  const char* first = cell.data();
  const char* last = cell.data() + cell.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) return std::nullopt;
  return v;
}

std::string method_name(Method m) { return m == Method::MM ? "mm" : "ls"; }
Method parse_method(const std::string& s) {
  if (s == "mm" || s == "MM") return Method::MM;
  if (s == "ls" || s == "LS") return Method::LS;
  throw Error(ErrorCode::Usage, "unknown method '" + s + "' (expected mm or ls)");
}
std::string knots_name(KnotMode k) { return k == KnotMode::Quantile ? "quantile" : "uniform"; }
KnotMode parse_knots(const std::string& s) {
  if (s == "quantile") return KnotMode::Quantile;
  if (s == "uniform") return KnotMode::Uniform;
  throw Error(ErrorCode::Usage, "unknown knot mode '" + s + "' (expected uniform or quantile)");
}
std::string centering_name(Centering c) { return c == Centering::Empirical ? "empirical" : "integral"; }
Centering parse_centering(const std::string& s) {
  if (s == "empirical") return Centering::Empirical;
  if (s == "integral") return Centering::Integral;
  throw Error(ErrorCode::Usage, "unknown centering '" + s + "' (expected integral or empirical)");
}
std::string inference_name(CovarianceMethod m) {
  switch (m) {
    case CovarianceMethod::PluginPlain: return "plugin_plain";
    case CovarianceMethod::PluginWeighted: return "plugin_weighted";
    case CovarianceMethod::Sandwich: return "sandwich";
  }
  return "plugin_weighted";
}
CovarianceMethod parse_inference(const std::string& s) {
  if (s == "plugin_plain") return CovarianceMethod::PluginPlain;
  if (s == "plugin_weighted") return CovarianceMethod::PluginWeighted;
  if (s == "sandwich") return CovarianceMethod::Sandwich;
  throw Error(ErrorCode::Usage, "unknown inference method '" + s + "'");
}

std::vector<double> to_vector(const Eigen::VectorXd& v) { return {v.data(), v.data() + v.size()}; }
Eigen::VectorXd to_eigen(const std::vector<double>& v) {
  return Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

void sort_levels(std::vector<std::string>& levels) {
  const bool numeric = std::all_of(levels.begin(), levels.end(),
                                   [](const std::string& l) { return parse_number(l).has_value(); });
  if (numeric) {
    std::sort(levels.begin(), levels.end(), [](const std::string& a, const std::string& b) {
      return *parse_number(a) < *parse_number(b);
    });
  } else {
    std::sort(levels.begin(), levels.end());
  }
}

}  // namespace

std::vector<std::string> split_list(const std::string& list, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(list);
  while (std::getline(in, cur, sep)) {
    cur = trim(cur);
    if (!cur.empty()) out.push_back(cur);
  }
  return out;
}

std::vector<LinearColumn> parse_linear_columns(const std::string& list) {
  std::vector<LinearColumn> out;
  for (const auto& item : split_list(list)) {
    const auto colon = item.rfind(':');
    if (colon != std::string::npos && item.substr(colon + 1) == "categorical") {
      out.push_back({item.substr(0, colon), true});
    } else if (colon != std::string::npos && item.substr(colon + 1) == "numeric") {
      out.push_back({item.substr(0, colon), false});
    } else {
      out.push_back({item, false});
    }
  }
  return out;
}

std::vector<std::string> Dataset::decode(const CategoricalColumn& c) const {
  std::vector<std::string> out(static_cast<std::size_t>(n()), c.levels.front());
  for (Eigen::Index i = 0; i < n(); ++i) {
    for (std::size_t l = 1; l < c.levels.size(); ++l) {
      if (Z(i, c.first_dummy + static_cast<Eigen::Index>(l) - 1) == 1.0) {
        out[static_cast<std::size_t>(i)] = c.levels[l];
      }
    }
  }
  return out;
}

Dataset parse_csv(const std::string& text, const DatasetSchema& schema) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw Error(ErrorCode::Data, "CSV input is empty");
  if (line.size() >= 3 && static_cast<unsigned char>(line[0]) == 0xEF) line = line.substr(3);  // BOM
  Dataset d;
  d.header = split_csv_line(line);
  const auto column = [&](const std::string& name) {
    const auto it = std::find(d.header.begin(), d.header.end(), name);
    if (it == d.header.end()) {
      throw Error(ErrorCode::DatasetSchema, "column '" + name + "' not found in the CSV header");
    }
    return static_cast<std::size_t>(it - d.header.begin());
  };

  std::optional<std::size_t> ycol;
  if (!schema.response.empty()) ycol = column(schema.response);
  std::vector<std::size_t> lcols, scols;
  for (const auto& l : schema.linear) lcols.push_back(column(l.name));
  for (const auto& s : schema.smooth) scols.push_back(column(s));

  std::vector<std::vector<std::string>> rows;
  std::vector<int> source;
  int data_row = 0;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    ++data_row;
    auto cells = split_csv_line(line);
    if (cells.size() != d.header.size()) {
      throw Error(ErrorCode::Data, "row " + std::to_string(data_row) + " has " +
                                       std::to_string(cells.size()) + " fields, expected " +
                                       std::to_string(d.header.size()));
    }
    bool complete = !(ycol && is_missing(cells[*ycol]));
    for (auto c : lcols) complete = complete && !is_missing(cells[c]);
    for (auto c : scols) complete = complete && !is_missing(cells[c]);
    if (!complete) {
      ++d.dropped_rows;
      continue;
    }
    rows.push_back(std::move(cells));
    source.push_back(data_row);
  }
  if (rows.empty()) throw Error(ErrorCode::Data, "no complete rows in the data set");

  const auto number = [&](std::size_t r, std::size_t c) {
    const auto v = parse_number(rows[r][c]);
    if (!v) {
      throw Error(ErrorCode::Data, "unparseable number '" + rows[r][c] + "' in column '" +
                                       d.header[c] + "' (data row " + std::to_string(source[r]) + ")");
    }
    return *v;
  };

  const auto n = static_cast<Eigen::Index>(rows.size());
  d.source_rows = source;
  if (ycol) {
    d.response_name = schema.response;
    d.y.resize(n);
    for (Eigen::Index i = 0; i < n; ++i) d.y[i] = number(static_cast<std::size_t>(i), *ycol);
  }

  // Linear block with reference-coded dummies.
  std::vector<std::vector<double>> zcols;
  for (std::size_t l = 0; l < schema.linear.size(); ++l) {
    const auto& spec = schema.linear[l];
    const std::size_t c = lcols[l];
    if (!spec.categorical) {
      std::vector<double> v;
      for (std::size_t r = 0; r < rows.size(); ++r) v.push_back(number(r, c));
      zcols.push_back(std::move(v));
      d.linear_names.push_back(spec.name);
      continue;
    }
    CategoricalColumn cat;
    cat.name = spec.name;
    if (const auto it = schema.fixed_levels.find(spec.name); it != schema.fixed_levels.end()) {
      cat.levels = it->second;
    } else {
      std::set<std::string> seen;
      for (const auto& row : rows) seen.insert(row[c]);
      cat.levels.assign(seen.begin(), seen.end());
      sort_levels(cat.levels);
    }
    if (cat.levels.size() < 2) {
      throw Error(ErrorCode::Data, "categorical column '" + spec.name + "' has a single level");
    }
    cat.first_dummy = static_cast<int>(zcols.size());
    for (std::size_t lv = 1; lv < cat.levels.size(); ++lv) {
      std::vector<double> v;
      for (const auto& row : rows) v.push_back(row[c] == cat.levels[lv] ? 1.0 : 0.0);
      zcols.push_back(std::move(v));
      d.linear_names.push_back(spec.name + "=" + cat.levels[lv]);
    }
    for (const auto& row : rows) {
      if (std::find(cat.levels.begin(), cat.levels.end(), row[c]) == cat.levels.end()) {
        throw Error(ErrorCode::Data, "unknown level '" + row[c] + "' in column '" + spec.name + "'");
      }
    }
    d.categoricals.push_back(std::move(cat));
  }
  d.Z.resize(n, static_cast<Eigen::Index>(zcols.size()));
  for (std::size_t j = 0; j < zcols.size(); ++j) {
    for (Eigen::Index i = 0; i < n; ++i) d.Z(i, static_cast<Eigen::Index>(j)) = zcols[j][static_cast<std::size_t>(i)];
  }
  d.smooth_names = schema.smooth;
  d.X.resize(n, static_cast<Eigen::Index>(scols.size()));
  for (std::size_t j = 0; j < scols.size(); ++j) {
    for (Eigen::Index i = 0; i < n; ++i) {
      d.X(i, static_cast<Eigen::Index>(j)) = number(static_cast<std::size_t>(i), scols[j]);
    }
  }
  return d;
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot read '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::Io, "cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw Error(ErrorCode::Io, "failed writing '" + path.string() + "'");
}

Dataset read_csv(const std::filesystem::path& path, const DatasetSchema& schema) {
  return parse_csv(read_text(path), schema);
}

PlamSpec RunConfig::plam_spec() const {
  PlamSpec s;
  s.method = method;
  s.order = order;
  s.k_grid = k_grid;
  s.knots = knots;
  s.centering = centering;
  s.scale.rho0 = RhoFamily::tukey(c0);
  s.scale.b = b;
  s.rho1 = RhoFamily::tukey(c1);
  s.solver = solver;
  return s;
}

namespace {

json config_to_json(const RunConfig& c) {
  json j;
  j["method"] = method_name(c.method);
  j["c0"] = c.c0;
  j["b"] = c.b;
  j["c1"] = c.c1;
  j["order"] = c.order;
  j["k_grid"] = c.k_grid.empty() ? json("auto") : json(c.k_grid);
  j["knots"] = knots_name(c.knots);
  j["centering"] = centering_name(c.centering);
  j["solver"] = {{"n_sub", c.solver.n_sub},       {"k_istep", c.solver.k_istep},
                 {"best_keep", c.solver.best_keep}, {"tol", c.solver.tol},
                 {"max_iter", c.solver.max_iter},   {"seed", c.solver.seed}};
  j["inference"] = inference_name(c.inference);
  j["output_dir"] = c.output_dir;
  j["threads"] = c.threads;
  return j;
}

RunConfig config_from_json(const json& j) {
  RunConfig c;
  static const std::set<std::string> known{"method", "c0", "b", "c1", "order", "k_grid", "knots",
                                           "centering", "solver", "inference", "output_dir", "threads"};
  for (const auto& [key, _] : j.items()) {
    if (!known.count(key)) throw Error(ErrorCode::Usage, "unknown configuration key '" + key + "'");
  }
  if (j.contains("method")) c.method = parse_method(j.at("method").get<std::string>());
  if (j.contains("c0")) c.c0 = j.at("c0").get<double>();
  if (j.contains("b")) c.b = j.at("b").get<double>();
  if (j.contains("c1")) c.c1 = j.at("c1").get<double>();
  if (j.contains("order")) c.order = j.at("order").get<int>();
  if (j.contains("k_grid")) {
    const auto& g = j.at("k_grid");
    if (g.is_string()) {
      if (g.get<std::string>() != "auto") throw Error(ErrorCode::Usage, "k_grid must be \"auto\" or a list");
      c.k_grid.clear();
    } else {
      c.k_grid = g.get<std::vector<int>>();
    }
  }
  if (j.contains("knots")) c.knots = parse_knots(j.at("knots").get<std::string>());
  if (j.contains("centering")) c.centering = parse_centering(j.at("centering").get<std::string>());
  if (j.contains("solver")) {
    const auto& s = j.at("solver");
    if (s.contains("n_sub")) c.solver.n_sub = s.at("n_sub").get<int>();
    if (s.contains("k_istep")) c.solver.k_istep = s.at("k_istep").get<int>();
    if (s.contains("best_keep")) c.solver.best_keep = s.at("best_keep").get<int>();
    if (s.contains("tol")) c.solver.tol = s.at("tol").get<double>();
    if (s.contains("max_iter")) c.solver.max_iter = s.at("max_iter").get<int>();
    if (s.contains("seed")) c.solver.seed = s.at("seed").get<std::uint64_t>();
  }
  if (j.contains("inference")) c.inference = parse_inference(j.at("inference").get<std::string>());
  if (j.contains("output_dir")) c.output_dir = j.at("output_dir").get<std::string>();
  if (j.contains("threads")) c.threads = j.at("threads").get<int>();
  if (!(c.c0 > 0.0) || !(c.c1 > 0.0)) throw Error(ErrorCode::Usage, "tuning constants must be positive");
  if (!(c.b > 0.0 && c.b < 1.0)) throw Error(ErrorCode::Usage, "b must lie in (0, 1)");
  return c;
}

}  // namespace

std::string to_json_string(const RunConfig& config) { return config_to_json(config).dump(2) + "\n"; }

RunConfig run_config_from_json(const std::string& text) {
  try {
    return config_from_json(json::parse(text));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Usage, std::string("invalid configuration: ") + e.what());
  }
}

RunConfig load_run_config(const std::filesystem::path& path) {
  return run_config_from_json(read_text(path));
}

std::string format_double(double v) {
  if (std::isnan(v)) return "NA";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<double> curve_grid(const CenteredSplineBasis& basis, int curve_points) {
  const double lo = basis.lo() + 0.05 * (basis.hi() - basis.lo());
  const double hi = basis.hi() - 0.05 * (basis.hi() - basis.lo());
  std::vector<double> grid;
  for (int s = 0; s < curve_points; ++s) grid.push_back(lo + (hi - lo) * s / (curve_points - 1));
  return grid;
}

ReportPaths write_report(const PlamFit& fit, const std::optional<CovarianceEstimate>& covariance,
                         const Dataset& data, const RunConfig& config,
                         const std::filesystem::path& dir, int curve_points) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::Io, "cannot create output directory '" + dir.string() + "'");
  ReportPaths paths{dir / "coefficients.csv", dir / "curves.csv", dir / "residuals.csv",
                    dir / "summary.json"};

  {
    std::ostringstream out;
    out << "name,estimate,std_error\n";
    out << "(Intercept)," << format_double(fit.mu_hat) << ",NA\n";
    for (int m = 0; m < fit.q(); ++m) {
      out << data.linear_names[static_cast<std::size_t>(m)] << ',' << format_double(fit.beta_hat[m]) << ','
          << (covariance ? format_double(covariance->std_errors[m]) : std::string("NA")) << '\n';
    }
    write_text(paths.coefficients, out.str());
  }
  {
    std::ostringstream out;
    out << "component,x,eta\n";
    for (int j = 0; j < fit.p(); ++j) {
      for (double x : curve_grid(fit.bases[static_cast<std::size_t>(j)], curve_points)) {
        out << data.smooth_names[static_cast<std::size_t>(j)] << ',' << format_double(x) << ','
            << format_double(fit.eta(j, x)) << '\n';
      }
    }
    write_text(paths.curves, out.str());
  }
  const auto outliers = flag_outliers(fit);
  {
    std::ostringstream out;
    out << "row,source_row,observed,fitted,residual,standardized,outlier\n";
    for (Eigen::Index i = 0; i < fit.residuals.size(); ++i) {
      const bool flagged = std::binary_search(outliers.begin(), outliers.end(), static_cast<int>(i));
      out << i + 1 << ',' << data.source_rows[static_cast<std::size_t>(i)] << ','
          << format_double(fit.fitted[i] + fit.residuals[i]) << ',' << format_double(fit.fitted[i]) << ','
          << format_double(fit.residuals[i]) << ','
          << (fit.sigma_hat > 0.0 ? format_double(fit.residuals[i] / fit.sigma_hat) : std::string("NA"))
          << ',' << (flagged ? 1 : 0) << '\n';
    }
    write_text(paths.residuals, out.str());
  }

  json s;
  s["config"] = config_to_json(config);
  s["data"] = {{"n", data.n()},
               {"dropped_rows", data.dropped_rows},
               {"response", data.response_name},
               {"linear", data.linear_names},
               {"smooth", data.smooth_names}};
  json trace = json::array();
  for (const auto& pt : fit.criterion_trace) trace.push_back({{"k", pt.k}, {"value", pt.value}});
  std::vector<int> outlier_rows, outlier_source;
  for (int i : outliers) {
    outlier_rows.push_back(i + 1);
    outlier_source.push_back(data.source_rows[static_cast<std::size_t>(i)]);
  }
  s["fit"] = {{"method", method_name(fit.method)},
              {"mu_hat", fit.mu_hat},
              {"beta_hat", to_vector(fit.beta_hat)},
              {"sigma_hat", fit.sigma_hat},
              {"selected_k", fit.selected_k},
              {"criterion", fit.criterion},
              {"criterion_trace", trace},
              {"outliers", outlier_rows},
              {"outlier_source_rows", outlier_source}};
  if (covariance) {
    json sig = json::array();
    for (Eigen::Index r = 0; r < covariance->Sigma_hat.rows(); ++r) {
      sig.push_back(to_vector(covariance->Sigma_hat.row(r).transpose()));
    }
    s["inference"] = {{"method", inference_name(covariance->method)},
                      {"upsilon_hat", covariance->upsilon_hat},
                      {"Sigma_hat", sig},
                      {"std_errors", to_vector(covariance->std_errors)},
                      {"ill_conditioned", covariance->ill_conditioned}};
  }

  json model;
  model["method"] = method_name(fit.method);
  model["rho1_c"] = fit.rho1.c;
  model["sigma_hat"] = fit.sigma_hat;
  model["response"] = data.response_name;
  model["mu_hat"] = fit.mu_hat;
  json linear = json::array();
  {
    std::size_t m = 0;
    while (m < data.linear_names.size()) {
      const auto cat = std::find_if(data.categoricals.begin(), data.categoricals.end(),
                                    [&](const CategoricalColumn& c) { return c.first_dummy == static_cast<int>(m); });
      if (cat != data.categoricals.end()) {
        json betas = json::array();
        for (std::size_t l = 1; l < cat->levels.size(); ++l) betas.push_back(fit.beta_hat[static_cast<Eigen::Index>(m + l - 1)]);
        linear.push_back({{"name", cat->name}, {"categorical", true}, {"levels", cat->levels}, {"beta", betas}});
        m += cat->levels.size() - 1;
      } else {
        linear.push_back({{"name", data.linear_names[m]}, {"categorical", false},
                          {"beta", json::array({fit.beta_hat[static_cast<Eigen::Index>(m)]})}});
        ++m;
      }
    }
  }
  model["linear"] = linear;
  json smooth = json::array();
  for (int j = 0; j < fit.p(); ++j) {
    const auto& b = fit.bases[static_cast<std::size_t>(j)];
    smooth.push_back({{"name", data.smooth_names[static_cast<std::size_t>(j)]},
                      {"order", b.order()},
                      {"lo", b.lo()},
                      {"hi", b.hi()},
                      {"interior_knots", b.interior_knots()},
                      {"centers", b.centers()},
                      {"knots", knots_name(b.knot_mode())},
                      {"centering", centering_name(b.centering())},
                      {"coefficients", to_vector(fit.c_hat[static_cast<std::size_t>(j)])}});
  }
  model["smooth"] = smooth;
  s["model"] = model;
  write_text(paths.summary, s.dump(2) + "\n");
  return paths;
}

SavedModel load_model(const std::filesystem::path& summary_json) {
  json s;
  try {
    s = json::parse(read_text(summary_json));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Data, std::string("invalid model file: ") + e.what());
  }
  if (!s.contains("model")) throw Error(ErrorCode::Data, "summary file has no model block");
  try {
    const auto& m = s.at("model");
    SavedModel out;
    out.fit.method = parse_method(m.at("method").get<std::string>());
    out.fit.rho1 = out.fit.method == Method::MM ? RhoFamily::tukey(m.at("rho1_c").get<double>())
                                                : RhoFamily::square();
    out.fit.sigma_hat = m.at("sigma_hat").get<double>();
    out.fit.mu_hat = m.at("mu_hat").get<double>();
    out.schema.response = m.value("response", std::string());
    std::vector<double> beta;
    for (const auto& l : m.at("linear")) {
      const auto name = l.at("name").get<std::string>();
      const bool cat = l.at("categorical").get<bool>();
      out.schema.linear.push_back({name, cat});
      if (cat) out.schema.fixed_levels[name] = l.at("levels").get<std::vector<std::string>>();
      for (double b : l.at("beta").get<std::vector<double>>()) beta.push_back(b);
    }
    out.fit.beta_hat = to_eigen(beta);
    for (const auto& sm : m.at("smooth")) {
      out.schema.smooth.push_back(sm.at("name").get<std::string>());
      out.fit.bases.push_back(CenteredSplineBasis::from_parts(
          sm.at("order").get<int>(), sm.at("interior_knots").get<std::vector<double>>(),
          sm.at("lo").get<double>(), sm.at("hi").get<double>(),
          sm.at("centers").get<std::vector<double>>(),
          parse_centering(sm.at("centering").get<std::string>()),
          parse_knots(sm.at("knots").get<std::string>())));
      out.fit.c_hat.push_back(to_eigen(sm.at("coefficients").get<std::vector<double>>()));
      out.fit.selected_k.push_back(out.fit.bases.back().dimension());
      if (out.fit.c_hat.back().size() != out.fit.bases.back().dimension() - 1) {
        throw Error(ErrorCode::Data, "model coefficients do not match the stored basis");
      }
    }
    return out;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Data, std::string("malformed model block: ") + e.what());
  }
}

std::string simulation_stem(int model, Contamination contamination) {
  return "M" + std::to_string(model) + "_" + to_string(contamination);
}

double summary_value(const SummaryRow& row, const std::string& table, const std::string& quantity,
                     int component) {
  if (table == "mu") {
    if (quantity == "mean") return row.mu_mean;
    if (quantity == "sd") return row.mu_sd;
  } else {
    if (component != 1 && component != 2) {
      throw Error(ErrorCode::Usage, "component must be 1 or 2");
    }
    const auto j = static_cast<std::size_t>(component - 1);
    if (table == "ise") {
      if (quantity == "mise5") return row.mise5[j];
      if (quantity == "medise") return row.medise[j];
    } else if (table == "ise_trim") {
      if (quantity == "mise_trim") return row.mise_trim[j];
      if (quantity == "medise_trim") return row.medise_trim[j];
    } else if (table == "beta1" || table == "beta2") {
      const auto b = static_cast<std::size_t>(table == "beta1" ? 0 : 1);
      if (quantity == "bias") return row.bias[b];
      if (quantity == "sd") return row.sd[b];
      if (quantity == "mse") return row.mse[b];
    }
  }
  throw Error(ErrorCode::Usage, "unknown summary cell " + table + "/" + quantity);
}

std::vector<std::filesystem::path> write_simulation(const ExperimentResult& result,
                                                    const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::Io, "cannot create output directory '" + dir.string() + "'");
  const auto& spec = result.spec;
  const std::string stem = simulation_stem(spec.model, spec.contamination);
  std::vector<std::filesystem::path> paths;

  {
    // Same cells as the published tables: one row per (table, quantity, component).
    struct Cell {
      const char* table;
      const char* quantity;
      int component;
    };
    static constexpr Cell kLayout[] = {
        {"ise", "mise5", 1},         {"ise", "mise5", 2},         {"ise", "medise", 1},
        {"ise", "medise", 2},        {"ise_trim", "mise_trim", 1}, {"ise_trim", "mise_trim", 2},
        {"ise_trim", "medise_trim", 1}, {"ise_trim", "medise_trim", 2}, {"beta1", "bias", 1},
        {"beta1", "sd", 1},          {"beta1", "mse", 1},         {"beta2", "bias", 2},
        {"beta2", "sd", 2},          {"beta2", "mse", 2},         {"mu", "mean", 0},
        {"mu", "sd", 0}};
    std::ostringstream out;
    out << "table,quantity,component";
    for (const auto& row : result.summaries) out << ',' << to_string(row.method);
    out << '\n';
    for (const auto& c : kLayout) {
      out << c.table << ',' << c.quantity << ',' << c.component;
      for (const auto& row : result.summaries) {
        out << ',' << format_double(summary_value(row, c.table, c.quantity, c.component));
      }
      out << '\n';
    }
    out << "count,ok,0";
    for (const auto& row : result.summaries) out << ',' << row.n_ok;
    out << "\ncount,failed,0";
    for (const auto& row : result.summaries) out << ',' << row.n_failed;
    out << '\n';
    paths.push_back(dir / ("summary_" + stem + ".csv"));
    write_text(paths.back(), out.str());
  }
  {
    std::ostringstream out;
    out << "method,k,proportion\n";
    for (const auto& row : result.summaries) {
      for (const auto& [k, share] : row.k_proportions) {
        out << to_string(row.method) << ',' << k << ',' << format_double(share) << '\n';
      }
    }
    paths.push_back(dir / ("kprop_" + stem + ".csv"));
    write_text(paths.back(), out.str());
  }
  {
    std::ostringstream out;
    out << "replication,method,ok,selected_k,ise1,ise2,ise_trim1,ise_trim2,mu_hat,beta1_hat,beta2_hat,"
           "error\n";
    for (const auto& r : result.records) {
      out << r.replication << ',' << to_string(r.method) << ',' << (r.ok ? 1 : 0) << ','
          << r.selected_k << ',' << format_double(r.ise[0]) << ',' << format_double(r.ise[1]) << ','
          << format_double(r.ise_trim[0]) << ',' << format_double(r.ise_trim[1]) << ','
          << format_double(r.mu_hat) << ',' << format_double(r.beta_hat[0]) << ','
          << format_double(r.beta_hat[1]) << ',';
      std::string err = r.error;
      std::replace(err.begin(), err.end(), ',', ';');
      std::replace(err.begin(), err.end(), '\n', ' ');
      out << err << '\n';
    }
    paths.push_back(dir / ("records_" + stem + ".csv"));
    write_text(paths.back(), out.str());
  }
  for (const auto& row : result.summaries) {
    for (int j = 0; j < 2; ++j) {
      std::ostringstream out;
      out << "replication";
      for (double x : result.curve_grid) out << ',' << format_double(x);
      out << '\n';
      for (const auto& r : result.records) {
        if (r.method != row.method || !r.ok) continue;
        out << r.replication;
        for (double v : r.curves[static_cast<std::size_t>(j)]) out << ',' << format_double(v);
        out << '\n';
      }
      paths.push_back(dir / ("curves_" + stem + "_" + to_string(row.method) + "_eta" +
                             std::to_string(j + 1) + ".csv"));
      write_text(paths.back(), out.str());
    }
  }
  return paths;
}

double relative_deviation(double published, double reproduced) {
  if (published == 0.0) return std::numeric_limits<double>::quiet_NaN();
  return (reproduced - published) / std::abs(published);
}

void write_comparison(const std::vector<ComparisonRow>& rows, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::Io, "cannot create output directory '" + dir.string() + "'");
  std::ostringstream csv;
  std::ostringstream md;
  csv << "table,quantity,component,contamination,model,method,published,reproduced,relative_deviation,"
         "note\n";
  md << "# Published versus reproduced Monte Carlo summaries\n\n"
     << "| table | quantity | component | contamination | model | method | published | reproduced | "
        "rel. deviation | note |\n"
     << "|---|---|---|---|---|---|---|---|---|---|\n";
  for (const auto& r : rows) {
    const auto& c = r.cell;
    const std::string rep = r.reproduced ? format_double(*r.reproduced) : std::string("NA");
    const std::string dev =
        r.reproduced ? format_double(relative_deviation(c.value, *r.reproduced)) : std::string("NA");
    csv << c.table << ',' << c.quantity << ',' << c.component << ',' << to_string(c.contamination)
        << ',' << c.model << ',' << to_string(c.method) << ',' << format_double(c.value) << ','
        << rep << ',' << dev << ',' << r.note << '\n';
    char pub[32], repd[32], devd[32];
    std::snprintf(pub, sizeof pub, "%.3f", c.value);
    std::snprintf(repd, sizeof repd, "%.3f", r.reproduced ? *r.reproduced : 0.0);
    std::snprintf(devd, sizeof devd, "%+.2f",
                  r.reproduced ? relative_deviation(c.value, *r.reproduced) : 0.0);
    md << "| " << c.table << " | " << c.quantity << " | " << c.component << " | "
       << to_string(c.contamination) << " | " << c.model << " | " << to_string(c.method) << " | "
       << pub << " | " << (r.reproduced ? repd : "NA") << " | "
       << (r.reproduced && c.value != 0.0 ? devd : "NA") << " | " << r.note << " |\n";
  }
  write_text(dir / "comparison.csv", csv.str());
  write_text(dir / "comparison.md", md.str());
}

}  // namespace robplam
