#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "robplam/bsplines.hpp"
#include "robplam/plam.hpp"
#include "robplam/rho.hpp"

namespace robplam {

enum class CovarianceMethod { PluginPlain, PluginWeighted, Sandwich };
/// Auto: least squares for 0/1 indicator columns (a robust fit of an
/// indicator degenerates to an exact fit of the majority level), robust
/// otherwise.
enum class HStarMethod { Robust, LeastSquares, Auto };

/// Additive spline fit of each linear covariate Z_m on the smooth
/// covariates: Z_m ~ phi_m + sum_j h_mj(X_j).
struct HStarFit {
  std::vector<CenteredSplineBasis> bases;
  std::vector<double> intercepts;                    // phi_m
  std::vector<std::vector<Eigen::VectorXd>> blocks;  // [m][j], length k_j - 1
  std::vector<double> scales;                        // sigma_m (0 for exact fits)

  int q() const { return static_cast<int>(intercepts.size()); }
  /// h*(x) for each row of X, as an n x q matrix.
  Eigen::MatrixXd evaluate(const Eigen::MatrixXd& X) const;
  /// Centered piece h_mj evaluated at x.
  double component(int m, int j, double x) const;
};

struct CovarianceEstimate {
  double upsilon_hat = 0.0;
  Eigen::MatrixXd A_hat;
  Eigen::MatrixXd B_hat;  // sandwich only
  Eigen::MatrixXd D_hat;  // sandwich only
  Eigen::MatrixXd Sigma_hat;
  Eigen::VectorXd std_errors;
  CovarianceMethod method = CovarianceMethod::PluginWeighted;
  bool ill_conditioned = false;
};

/// (y_i - m_hat(Z_i, X_i)) / sigma_hat.
Eigen::VectorXd standardized_residuals(const PlamFit& fit);

/// mean psi^2(eps) / (mean psi'(eps))^2.
double upsilon_hat(const Eigen::VectorXd& eps, const RhoFamily& rho1);

/// Fits h* with the given bases. The robust variant computes an S-scale
/// per column followed by an M-step; the least-squares variant minimizes
/// the summed squared covariate residuals.
HStarFit fit_hstar(const Eigen::MatrixXd& Z, const Eigen::MatrixXd& X,
                   const std::vector<CenteredSplineBasis>& bases, const PlamSpec& spec,
                   HStarMethod method = HStarMethod::Robust);

/// Mean of the covariate-residual outer products, optionally weighted.
Eigen::MatrixXd a_hat(const Eigen::MatrixXd& Z, const Eigen::MatrixXd& X, const HStarFit& hstar,
                      const std::optional<Eigen::VectorXd>& weights = std::nullopt);

CovarianceEstimate sigma_hat_matrix(const PlamFit& fit, const Eigen::MatrixXd& Z,
                                    const Eigen::MatrixXd& X, const HStarFit& hstar,
                                    CovarianceMethod method);

}  // namespace robplam
