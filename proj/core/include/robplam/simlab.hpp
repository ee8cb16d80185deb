#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "robplam/plam.hpp"

namespace robplam {

enum class Contamination { C0, C1, C2, C3 };

std::string to_string(Contamination c);
Contamination parse_contamination(const std::string& s);
std::string to_string(Method m);

/// True parameters shared by all six simulation models.
namespace truth {
inline constexpr double kMu = 0.0;
inline constexpr std::array<double, 2> kBeta{3.0, 3.0};
inline constexpr double kSigma = 0.2;
double eta1(double x);  // 2 sin(pi x) - 4/pi
double eta2(double x);  // exp(x) - (e - 1)
double eta(int j, double x);
}  // namespace truth

struct SimulationSpec {
  int model = 1;
  Contamination contamination = Contamination::C0;
  int n = 100;
  int replications = 500;
  std::uint64_t seed = 20190101;
  int grid_size = 1000;
  int curve_points = 100;  // exported curves on [0.05, 0.95]
  std::vector<int> k_grid;  // empty: default rule for n
  SolverConfig solver{};
  int threads = 0;          // 0: hardware concurrency

  int trim_q() const { return static_cast<int>(std::floor(grid_size * 0.05)); }
  void validate() const;
};

/// One simulated data set. `signal` is y without the error term so that
/// error contamination can redraw the errors.
struct SimSample {
  Eigen::VectorXd y;
  Eigen::MatrixXd Z;  // n x 2
  Eigen::MatrixXd X;  // n x 2
  Eigen::VectorXd signal;
  std::vector<int> contaminated;  // rows touched by contamination
};

SimSample generate(int model, int n, std::mt19937_64& rng);
SimSample contaminate(const SimSample& sample, Contamination scheme, std::mt19937_64& rng);

/// Latent Gaussian correlation whose normal copula gives uniforms with the
/// requested Pearson correlation.
double copula_latent_correlation(double uniform_correlation);

struct IseResult {
  double ise = 0.0;
  double ise_trim = 0.0;
};

/// Mean squared gap on the grid x_s = (s-1)/(M-1), s = 1..M, and the same
/// mean restricted to s = q+1..M-q.
IseResult ise(const std::function<double(double)>& estimate,
              const std::function<double(double)>& truth_curve, int grid_size, int trim_q);
IseResult ise(std::span<const double> estimate, std::span<const double> truth_curve, int trim_q);

struct ReplicationRecord {
  int replication = 0;
  Method method = Method::LS;
  bool ok = false;
  std::string error;
  int selected_k = 0;
  std::array<double, 2> ise{};
  std::array<double, 2> ise_trim{};
  double mu_hat = 0.0;
  std::array<double, 2> beta_hat{};
  std::array<std::vector<double>, 2> curves;  // on the export grid
};

struct SummaryRow {
  Method method = Method::LS;
  int n_ok = 0;
  int n_failed = 0;
  std::array<double, 2> medise{};
  std::array<double, 2> mise5{};  // mean after dropping the largest ceil(0.05 N) values
  std::array<double, 2> mise_trim{};
  std::array<double, 2> medise_trim{};
  std::array<double, 2> bias{};
  std::array<double, 2> sd{};
  std::array<double, 2> mse{};
  double mu_mean = 0.0;
  double mu_sd = 0.0;
  std::map<int, double> k_proportions;
};

struct ExperimentResult {
  SimulationSpec spec;
  std::vector<ReplicationRecord> records;  // ordered by (replication, method)
  std::vector<SummaryRow> summaries;       // one per method
  std::vector<double> curve_grid;
};

/// 64-bit seed for replication `index`, independent of execution order.
std::uint64_t child_seed(std::uint64_t seed, std::uint64_t index);

ReplicationRecord run_replication(const SimulationSpec& spec, Method method, int replication,
                                  const SimSample& sample);

ExperimentResult run_experiment(const SimulationSpec& spec, const std::vector<Method>& methods);

SummaryRow summarize(Method method, std::span<const ReplicationRecord> records);

/// Mean after dropping the ceil(frac * N) largest values.
double upper_trimmed_mean(std::vector<double> values, double frac = 0.05);

}  // namespace robplam
