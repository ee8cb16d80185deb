#include "robplam/inference.hpp"

#include <cmath>
#include <string>

#include "robplam/error.hpp"
#include "robplam/linalg.hpp"
#include "robplam/robust_solvers.hpp"

namespace robplam {

Eigen::MatrixXd HStarFit::evaluate(const Eigen::MatrixXd& X) const {
  if (X.cols() != static_cast<Eigen::Index>(bases.size())) {
    throw Error(ErrorCode::Data, "h* evaluation: covariate count does not match the bases");
  }
  Eigen::MatrixXd out(X.rows(), q());
  for (int m = 0; m < q(); ++m) {
    for (Eigen::Index i = 0; i < X.rows(); ++i) {
      double v = intercepts[static_cast<std::size_t>(m)];
      for (int j = 0; j < static_cast<int>(bases.size()); ++j) v += component(m, j, X(i, j));
      out(i, m) = v;
    }
  }
  return out;
}

double HStarFit::component(int m, int j, double x) const {
  const auto& c = blocks[static_cast<std::size_t>(m)][static_cast<std::size_t>(j)];
  return bases[static_cast<std::size_t>(j)].eval_combination(
      {c.data(), static_cast<std::size_t>(c.size())}, x);
}

Eigen::VectorXd standardized_residuals(const PlamFit& fit) {
  if (!(fit.sigma_hat > 0.0)) {
    throw Error(ErrorCode::Numerical, "standardized residuals need a positive scale estimate");
  }
  return fit.residuals / fit.sigma_hat;
}

double upsilon_hat(const Eigen::VectorXd& eps, const RhoFamily& rho1) {
  double num = 0.0;
  double den = 0.0;
  for (Eigen::Index i = 0; i < eps.size(); ++i) {
    const double v = psi(rho1, eps[i]);
    num += v * v;
    den += psi_prime(rho1, eps[i]);
  }
  const double n = static_cast<double>(eps.size());
  if (eps.size() == 0 || den == 0.0) {
    throw Error(ErrorCode::Numerical, "efficiency factor undefined: mean psi' is zero");
  }
  num /= n;
  den /= n;
  return num / (den * den);
}

HStarFit fit_hstar(const Eigen::MatrixXd& Z, const Eigen::MatrixXd& X,
                   const std::vector<CenteredSplineBasis>& bases, const PlamSpec& spec,
                   HStarMethod method) {
  if (Z.rows() != X.rows()) throw Error(ErrorCode::Data, "Z and X row counts differ");
  HStarFit out;
  out.bases = bases;
  const Eigen::MatrixXd none(X.rows(), 0);
  const DesignMatrix design = assemble_design(none, X, bases);
  MScaleSpec scale = spec.scale;
  scale.dof_correction = static_cast<int>(design.cols() - 1);

  for (Eigen::Index m = 0; m < Z.cols(); ++m) {
    const Eigen::VectorXd zm = Z.col(m);
    Eigen::VectorXd coef;
    double sigma = 0.0;
    const bool indicator = (zm.array() == 0.0 || zm.array() == 1.0).all();
    const bool use_ls = method == HStarMethod::LeastSquares || (method == HStarMethod::Auto && indicator);
    if (use_ls) {
      coef = least_squares(design.matrix, zm);
      const Eigen::VectorXd r = zm - design.matrix * coef;
      const auto dof = static_cast<double>(design.n() - design.cols());
      sigma = dof > 0 ? std::sqrt(r.squaredNorm() / dof) : 0.0;
    } else {
      const SEstimate s = s_estimator(design, zm, scale, spec.solver);
      sigma = s.scale;
      coef = s.coefficients;
      if (sigma > 0.0) coef = m_step(design, zm, sigma, spec.rho1, coef, spec.solver).coefficients;
    }
    out.intercepts.push_back(coef[0]);
    out.scales.push_back(sigma);
    std::vector<Eigen::VectorXd> blocks;
    for (std::size_t j = 0; j < bases.size(); ++j) {
      blocks.push_back(coef.segment(design.block_offset(static_cast<int>(j)), design.block_sizes[j]));
    }
    out.blocks.push_back(std::move(blocks));
  }
  return out;
}

Eigen::MatrixXd a_hat(const Eigen::MatrixXd& Z, const Eigen::MatrixXd& X, const HStarFit& hstar,
                      const std::optional<Eigen::VectorXd>& weights) {
  const Eigen::MatrixXd R = Z - hstar.evaluate(X);
  if (!weights) return R.transpose() * R / static_cast<double>(R.rows());
  const Eigen::VectorXd& w = *weights;
  if (w.size() != R.rows()) throw Error(ErrorCode::Data, "weight vector length mismatch");
  if ((w.array() < 0.0).any()) throw Error(ErrorCode::Data, "weights must be non-negative");
  const double total = w.sum();
  if (!(total > 0.0)) throw Error(ErrorCode::Numerical, "all covariate weights are zero");
  const Eigen::MatrixXd Rw = R.array().colwise() * w.array();
  return Rw.transpose() * R / total;
}

CovarianceEstimate sigma_hat_matrix(const PlamFit& fit, const Eigen::MatrixXd& Z,
                                    const Eigen::MatrixXd& X, const HStarFit& hstar,
                                    CovarianceMethod method) {
  const Eigen::VectorXd eps = standardized_residuals(fit);
  const RhoFamily& f = fit.rho1;
  const auto n = static_cast<double>(eps.size());
  CovarianceEstimate out;
  out.method = method;
  out.upsilon_hat = upsilon_hat(eps, f);
  const double s2 = fit.sigma_hat * fit.sigma_hat;

  if (method == CovarianceMethod::Sandwich) {
    const Eigen::MatrixXd R = Z - hstar.evaluate(X);
    Eigen::VectorXd dpsi(eps.size());
    Eigen::VectorXd psi2(eps.size());
    for (Eigen::Index i = 0; i < eps.size(); ++i) {
      dpsi[i] = psi_prime(f, eps[i]);
      const double v = psi(f, eps[i]);
      psi2[i] = v * v;
    }
    out.B_hat = -(R.transpose() * (R.array().colwise() * dpsi.array()).matrix()) / (n * s2);
    out.D_hat = (R.transpose() * (R.array().colwise() * psi2.array()).matrix()) / (n * s2);
    out.A_hat = a_hat(Z, X, hstar);
    Eigen::FullPivLU<Eigen::MatrixXd> lu(out.B_hat);
    if (out.B_hat.rows() == 0 || !lu.isInvertible()) {
      throw Error(ErrorCode::Numerical, "singular matrix B_hat");
    }
    const Eigen::MatrixXd Binv = lu.inverse();
    const Eigen::MatrixXd S = Binv * out.D_hat * Binv.transpose();
    out.Sigma_hat = 0.5 * (S + S.transpose());
    const auto ev = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(out.B_hat, Eigen::EigenvaluesOnly)
                        .eigenvalues()
                        .cwiseAbs();
    out.ill_conditioned = ev.maxCoeff() / ev.minCoeff() > 1e10;
  } else {
    std::optional<Eigen::VectorXd> w;
    if (method == CovarianceMethod::PluginWeighted) {
      Eigen::VectorXd wv(eps.size());
      for (Eigen::Index i = 0; i < eps.size(); ++i) wv[i] = weight(f, eps[i]);
      w = std::move(wv);
    }
    out.A_hat = a_hat(Z, X, hstar, w);
    out.Sigma_hat = s2 * out.upsilon_hat * symmetric_inverse(out.A_hat, "A_hat", &out.ill_conditioned);
  }
  out.std_errors = (out.Sigma_hat.diagonal().array().max(0.0) / n).sqrt().matrix();
  return out;
}

}  // namespace robplam
