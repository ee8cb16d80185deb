#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "robplam/error.hpp"
#include "robplam/inference.hpp"
#include "robplam/io.hpp"
#include "robplam/plam.hpp"
#include "robplam/simlab.hpp"

using namespace robplam;
namespace fs = std::filesystem;

namespace {

DatasetSchema air_schema() {
  return {"Ozone", parse_linear_columns("Month:categorical"), {"Temp", "Wind", "Solar.R"}, {}};
}

Dataset airquality() { return read_csv(std::string(ROBPLAM_DATA_DIR) + "/airquality.csv", air_schema()); }

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("robplam_test_" + name);
  fs::remove_all(p);
  return p;
}

std::vector<std::vector<std::string>> read_rows(const fs::path& path) {
  std::ifstream in(path);
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) rows.push_back(split_list(line));
  return rows;
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("airquality schema") {
  const auto d = airquality();
  CHECK(d.n() == 111);
  CHECK(d.dropped_rows == 42);
  CHECK(d.Z.cols() == 4);
  CHECK(d.X.cols() == 3);
  CHECK(d.linear_names == std::vector<std::string>{"Month=6", "Month=7", "Month=8", "Month=9"});
  CHECK(d.smooth_names == std::vector<std::string>{"Temp", "Wind", "Solar.R"});
  for (Eigen::Index i = 0; i < d.n(); ++i) {
    const double s = d.Z.row(i).sum();
    CHECK((s == 0.0 || s == 1.0));
  }
  REQUIRE(d.categoricals.size() == 1);
  CHECK(d.categoricals[0].levels.front() == "5");
  const auto labels = d.decode(d.categoricals[0]);
  CHECK(labels.front() == "5");
  CHECK(labels.back() == "9");
  CHECK(d.source_rows.front() == 1);
  CHECK(d.y[0] == 41.0);
}

TEST_CASE("CSV parsing rules") {
  DatasetSchema schema{"y", parse_linear_columns("z,g:categorical"), {"x"}, {}};
  const std::string text =
      "\xEF\xBB\xBFy,z,g,x,unused\n"
      "1,2,\"b\",0.5,foo\n"
      "2,NA,a,0.1,\n"
      "3,1,a,0.2,bar\n"
      "4,5,c,.,x\n"
      "5,6,c,0.9,NaN\n";
  const auto d = parse_csv(text, schema);
  CHECK(d.n() == 3);
  CHECK(d.dropped_rows == 2);
  CHECK(d.source_rows == std::vector<int>{1, 3, 5});
  CHECK(d.linear_names == std::vector<std::string>{"z", "g=b", "g=c"});
  CHECK(d.Z(0, 1) == 1.0);
  CHECK(d.Z(1, 1) == 0.0);
  CHECK(d.Z(2, 2) == 1.0);

  SUBCASE("missing column") {
    DatasetSchema bad{"y", {}, {"nope"}, {}};
    try {
      parse_csv(text, bad);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::DatasetSchema);
    }
  }
  SUBCASE("no complete rows") {
    CHECK_THROWS_AS(parse_csv("y,z,g,x\nNA,1,a,1\n", schema), Error);
  }
  SUBCASE("unparseable number") {
    CHECK_THROWS_AS(parse_csv("y,z,g,x\n1,abc,a,1\n2,1,b,2\n", schema), Error);
  }
  SUBCASE("unknown level under fixed levels") {
    DatasetSchema fixed = schema;
    fixed.fixed_levels["g"] = {"a", "b"};
    CHECK_THROWS_AS(parse_csv(text, fixed), Error);
  }
  SUBCASE("numeric levels sort numerically") {
    DatasetSchema s2{"y", parse_linear_columns("g:categorical"), {"x"}, {}};
    const auto d2 = parse_csv("y,g,x\n1,10,0\n2,9,1\n3,100,2\n", s2);
    CHECK(d2.categoricals[0].levels == std::vector<std::string>{"9", "10", "100"});
  }
}

TEST_CASE("run configuration round trip") {
  RunConfig c;
  c.method = Method::LS;
  c.k_grid = {4, 6, 8};
  c.knots = KnotMode::Uniform;
  c.centering = Centering::Integral;
  c.solver.n_sub = 123;
  c.solver.seed = 99;
  c.inference = CovarianceMethod::Sandwich;
  c.output_dir = "somewhere";
  const RunConfig back = run_config_from_json(to_json_string(c));
  CHECK(to_json_string(back) == to_json_string(c));
  CHECK(back.k_grid == c.k_grid);
  CHECK(back.solver.n_sub == 123);

  CHECK_THROWS_AS(run_config_from_json(R"({"bogus": 1})"), Error);
  CHECK_THROWS_AS(run_config_from_json(R"({"b": 1.5})"), Error);
  CHECK_THROWS_AS(run_config_from_json(R"({"c0": -1})"), Error);
  CHECK_THROWS_AS(run_config_from_json("{not json"), Error);
  CHECK(run_config_from_json(R"({"k_grid": "auto"})").k_grid.empty());
}

TEST_CASE("number formatting") {
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(std::nan("")) == "NA");
  CHECK(std::stod(format_double(1.0 / 3.0)) == 1.0 / 3.0);
}

TEST_CASE("fit report and model round trip") {
  const auto d = airquality();
  RunConfig config;
  config.k_grid = {5};
  const auto f = fit(d.Z, d.X, d.y, config.plam_spec());
  const auto h = fit_hstar(d.Z, d.X, f.bases, config.plam_spec(), HStarMethod::Auto);
  const auto cov = sigma_hat_matrix(f, d.Z, d.X, h, CovarianceMethod::PluginWeighted);
  const fs::path dir = scratch("report");
  const auto paths = write_report(f, cov, d, config, dir, 50);

  const auto coef = read_rows(paths.coefficients);
  REQUIRE(coef.size() == 1 + 1 + 4);
  CHECK(coef[1][0] == "(Intercept)");
  CHECK(std::stod(coef[1][1]) == f.mu_hat);
  for (int m = 0; m < 4; ++m) {
    CHECK(coef[2 + m][0] == d.linear_names[m]);
    CHECK(std::stod(coef[2 + m][1]) == f.beta_hat[m]);
    CHECK(std::stod(coef[2 + m][2]) == cov.std_errors[m]);
  }

  // curves reproduce eta exactly
  const auto curves = read_rows(paths.curves);
  CHECK(curves.size() == 1 + 3 * 50);
  double worst = 0.0;
  for (std::size_t r = 1; r < curves.size(); ++r) {
    const int j = static_cast<int>((r - 1) / 50);
    worst = std::max(worst, std::abs(std::stod(curves[r][2]) - f.eta(j, std::stod(curves[r][1]))));
  }
  CHECK(worst == 0.0);

  const auto res = read_rows(paths.residuals);
  CHECK(res.size() == 112);
  int flagged = 0;
  for (std::size_t r = 1; r < res.size(); ++r) flagged += res[r][6] == "1";
  CHECK(flagged == static_cast<int>(flag_outliers(f).size()));

  const auto summary = nlohmann::json::parse(read_text(paths.summary));
  CHECK(summary["data"]["n"] == 111);
  CHECK(summary["fit"]["selected_k"][0] == 5);

  const SavedModel saved = load_model(paths.summary);
  CHECK(saved.schema.response == "Ozone");
  REQUIRE(saved.schema.smooth.size() == 3);
  const Eigen::VectorXd again = predict(saved.fit, d.Z, d.X);
  CHECK((again - f.fitted).cwiseAbs().maxCoeff() <= 1e-10);

  CHECK_THROWS_AS(load_model(dir / "coefficients.csv"), Error);
  fs::remove_all(dir);
}

TEST_CASE("simulation outputs") {
  CHECK(simulation_stem(3, Contamination::C2) == "M3_C2");
  SimulationSpec spec;
  spec.n = 50;
  spec.replications = 2;
  spec.k_grid = {4};
  spec.solver.n_sub = 30;
  spec.threads = 1;
  const auto result = run_experiment(spec, {Method::LS, Method::MM});
  const fs::path dir = scratch("sim");
  const auto paths = write_simulation(result, dir);
  CHECK(paths.size() == 3 + 4);
  const auto rows = read_rows(dir / "summary_M1_C0.csv");
  REQUIRE(rows.size() == 1 + 16 + 2);
  CHECK(rows[0] == std::vector<std::string>{"table", "quantity", "component", "LS", "MM"});
  CHECK(std::stod(rows[9][3]) == summary_value(result.summaries[0], "beta1", "bias", 1));
  CHECK(rows[17][3] == "2");
  CHECK_THROWS_AS(summary_value(result.summaries[0], "beta1", "nope", 1), Error);

  CHECK(relative_deviation(2.0, 2.5) == doctest::Approx(0.25));
  CHECK(std::isnan(relative_deviation(0.0, 1.0)));
  fs::remove_all(dir);
}

}
