#pragma once

#include <array>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "robplam/bsplines.hpp"
#include "robplam/rho.hpp"
#include "robplam/robust_solvers.hpp"

namespace robplam {

enum class Method { MM, LS };

/// Everything needed to fit y = mu + beta^T Z + sum_j eta_j(X_j) + error.
struct PlamSpec {
  Method method = Method::MM;
  int order = 4;  // cubic splines
  /// Candidate common basis dimensions. Empty means default_k_grid(n).
  std::vector<int> k_grid;
  /// When false, every combination of per-component dimensions in
  /// component_grids is evaluated (the grid grows combinatorially).
  bool equal_k = true;
  std::vector<std::vector<int>> component_grids;
  KnotMode knots = KnotMode::Uniform;
  Centering centering = Centering::Integral;
  MScaleSpec scale{};  // rho0 and b; dof_correction is set per design
  RhoFamily rho1 = RhoFamily::tukey(kTukeyEfficiencyC);
  SolverConfig solver{};
};

struct CriterionPoint {
  std::vector<int> k;
  double value = 0.0;
};

struct PlamFit {
  Method method = Method::MM;
  double mu_hat = 0.0;
  Eigen::VectorXd beta_hat;
  std::vector<Eigen::VectorXd> c_hat;  // one block of length k_j - 1 per covariate
  /// S-scale for MM fits, residual standard deviation for LS fits.
  double sigma_hat = 0.0;
  std::vector<CenteredSplineBasis> bases;
  Eigen::VectorXd residuals;
  Eigen::VectorXd fitted;
  std::vector<int> selected_k;
  std::vector<CriterionPoint> criterion_trace;
  double criterion = 0.0;
  RhoFamily rho1 = RhoFamily::tukey(kTukeyEfficiencyC);
  // MM diagnostics
  Eigen::VectorXd initial_coefficients;
  int m_iterations = 0;
  bool m_converged = true;

  int q() const { return static_cast<int>(beta_hat.size()); }
  int p() const { return static_cast<int>(bases.size()); }
  /// Estimated additive component j at x (x clamped to the basis interval).
  double eta(int j, double x) const;
  /// Packed (mu, beta, c^(1), ..., c^(p)).
  Eigen::VectorXd coefficients() const;
};

/// Integers from max(ceil(n^{1/5}/2), 4, order) to floor(8 + 2 n^{1/5}).
std::vector<int> default_k_grid(int n, int order = 4);

/// Fits every candidate basis dimension and returns the one minimizing the
/// (robust) BIC, ties broken toward smaller total dimension.
PlamFit fit(const Eigen::MatrixXd& Z, const Eigen::MatrixXd& X, const Eigen::VectorXd& y,
            const PlamSpec& spec);

/// Fit for one fixed vector of basis dimensions (one per covariate).
PlamFit fit_fixed(const Eigen::MatrixXd& Z, const Eigen::MatrixXd& X, const Eigen::VectorXd& y,
                  const PlamSpec& spec, const std::vector<int>& k);

/// log(sigma^2 sum rho1(r_i/sigma)) + log(n)/(2n) sum_j k_j. With a square
/// rho the scale drops out: log(sum r_i^2) + penalty.
double rbic(const Eigen::VectorXd& residuals, double sigma_hat, const RhoFamily& rho1,
            const std::vector<int>& k, int n);

Eigen::VectorXd predict(const PlamFit& fit, const Eigen::MatrixXd& Z_new,
                        const Eigen::MatrixXd& X_new);

/// 0-based indices of residuals outside the boxplot fences
/// [lower hinge - 1.5 IQR, upper hinge + 1.5 IQR].
std::vector<int> flag_outliers(const PlamFit& fit);
std::vector<int> flag_outliers(const Eigen::VectorXd& residuals);

/// Tukey's five-number summary (minimum, lower hinge, median, upper hinge,
/// maximum), the statistics boxplots are drawn from.
std::array<double, 5> five_number_summary(std::vector<double> values);

}  // namespace robplam
