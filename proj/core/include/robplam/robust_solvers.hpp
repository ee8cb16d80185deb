#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "robplam/bsplines.hpp"
#include "robplam/rho.hpp"

namespace robplam {

/// Tuning of the fast-S search and of the IRWLS iterations.
struct SolverConfig {
  int n_sub = 500;       // elemental subsamples
  int k_istep = 2;       // concentration steps applied to every subsample
  int best_keep = 5;     // candidates refined to convergence
  double tol = 1e-7;     // relative coefficient change
  int max_iter = 200;
  std::uint64_t seed = 42;
};

/// The M-scale equation sum_i rho0(r_i / s) / (n - dof_correction) = b.
struct MScaleSpec {
  RhoFamily rho0 = RhoFamily::tukey(kTukeyScaleC);
  double b = kScaleB;
  int dof_correction = 0;
};

/// Solves the M-scale equation. Returns 0 when too many residuals are exactly
/// zero for a positive root to exist.
double m_scale(std::span<const double> residuals, const MScaleSpec& spec);
double m_scale(const Eigen::VectorXd& residuals, const MScaleSpec& spec);

struct SEstimate {
  Eigen::VectorXd coefficients;
  double scale = 0.0;
  // Best scale found so far, recorded after each candidate evaluation.
  std::vector<double> scale_trace;
};

/// Approximate S-regression by fast-S: random elemental subsamples, a few
/// concentration steps on each, and full refinement of the best ones.
/// Deterministic given config.seed and invariant to the row order of the
/// input.
SEstimate s_estimator(const DesignMatrix& design, const Eigen::VectorXd& y,
                      const MScaleSpec& spec, const SolverConfig& config);

struct MStepResult {
  Eigen::VectorXd coefficients;
  double objective = 0.0;
  int iterations = 0;
  bool converged = false;
  std::vector<double> objective_trace;  // starts with the objective at init
};

/// sum_i rho(r_i / sigma) at the given coefficients.
double m_objective(const DesignMatrix& design, const Eigen::VectorXd& y,
                   const Eigen::VectorXd& coefficients, double sigma, const RhoFamily& rho1);

/// Regression M-estimate with fixed scale by IRWLS with step halving.
MStepResult m_step(const DesignMatrix& design, const Eigen::VectorXd& y, double sigma,
                   const RhoFamily& rho1, const Eigen::VectorXd& init,
                   const SolverConfig& config);

}  // namespace robplam
