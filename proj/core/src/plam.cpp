#include "robplam/plam.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "robplam/error.hpp"
#include "robplam/linalg.hpp"

namespace robplam {

namespace {

std::vector<CenteredSplineBasis> build_bases(const Eigen::MatrixXd& X, const PlamSpec& spec,
                                             const std::vector<int>& k) {
  std::vector<CenteredSplineBasis> bases;
  bases.reserve(k.size());
  for (Eigen::Index j = 0; j < X.cols(); ++j) {
    const Eigen::VectorXd col = X.col(j);
    bases.push_back(CenteredSplineBasis::build(
        {col.data(), static_cast<std::size_t>(col.size())}, spec.order,
        k[static_cast<std::size_t>(j)], spec.knots, spec.centering));
  }
  return bases;
}

std::vector<std::vector<int>> candidate_dimensions(const PlamSpec& spec, int n, int p) {
  std::vector<std::vector<int>> out;
  if (p == 0) {
    out.emplace_back();
    return out;
  }
  if (spec.equal_k) {
    const auto grid = spec.k_grid.empty() ? default_k_grid(n, spec.order) : spec.k_grid;
    if (grid.empty()) throw Error(ErrorCode::Usage, "empty basis dimension grid");
    for (int k : grid) out.emplace_back(static_cast<std::size_t>(p), k);
    return out;
  }
  if (static_cast<int>(spec.component_grids.size()) != p) {
    throw Error(ErrorCode::Usage, "one basis dimension grid is required per smooth covariate");
  }
  out.emplace_back();
  for (const auto& grid : spec.component_grids) {
    if (grid.empty()) throw Error(ErrorCode::Usage, "empty basis dimension grid");
    std::vector<std::vector<int>> next;
    for (const auto& prefix : out) {
      for (int k : grid) {
        auto v = prefix;
        v.push_back(k);
        next.push_back(std::move(v));
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace

double PlamFit::eta(int j, double x) const {
  const auto& c = c_hat[static_cast<std::size_t>(j)];
  return bases[static_cast<std::size_t>(j)].eval_combination(
      {c.data(), static_cast<std::size_t>(c.size())}, x);
}

Eigen::VectorXd PlamFit::coefficients() const {
  Eigen::Index len = 1 + beta_hat.size();
  for (const auto& c : c_hat) len += c.size();
  Eigen::VectorXd out(len);
  out[0] = mu_hat;
  out.segment(1, beta_hat.size()) = beta_hat;
  Eigen::Index off = 1 + beta_hat.size();
  for (const auto& c : c_hat) {
    out.segment(off, c.size()) = c;
    off += c.size();
  }
  return out;
}

std::vector<int> default_k_grid(int n, int order) {
  const double root = std::pow(static_cast<double>(n), 0.2);
  const int lo = std::max({static_cast<int>(std::ceil(root / 2.0)), 4, order});
  const int hi = static_cast<int>(std::floor(8.0 + 2.0 * root));
  std::vector<int> grid;
  for (int k = lo; k <= hi; ++k) grid.push_back(k);
  return grid;
}

double rbic(const Eigen::VectorXd& residuals, double sigma_hat, const RhoFamily& rho1,
            const std::vector<int>& k, int n) {
  const double penalty = std::log(static_cast<double>(n)) / (2.0 * n) *
                         std::accumulate(k.begin(), k.end(), 0.0);
  if (rho1.kind == RhoKind::Square) {
    return std::log(residuals.squaredNorm()) + penalty;
  }
  if (!(sigma_hat > 0.0)) throw Error(ErrorCode::Numerical, "RBIC requires a positive scale");
  double sum = 0.0;
  for (Eigen::Index i = 0; i < residuals.size(); ++i) sum += rho(rho1, residuals[i] / sigma_hat);
  if (!(sum > 0.0)) {
    throw Error(ErrorCode::Numerical, "RBIC undefined: every residual has zero loss");
  }
  return std::log(sigma_hat * sigma_hat * sum) + penalty;
}

PlamFit fit_fixed(const Eigen::MatrixXd& Z, const Eigen::MatrixXd& X, const Eigen::VectorXd& y,
                  const PlamSpec& spec, const std::vector<int>& k) {
  const Eigen::Index n = y.size();
  if (Z.rows() != n || X.rows() != n) {
    throw Error(ErrorCode::Data, "Z, X and y must have the same number of rows");
  }
  if (static_cast<Eigen::Index>(k.size()) != X.cols()) {
    throw Error(ErrorCode::Usage, "one basis dimension is required per smooth covariate");
  }
  if (!y.allFinite() || !Z.allFinite() || !X.allFinite()) {
    throw Error(ErrorCode::Data, "missing or non-finite values in the model data");
  }

  PlamFit out;
  out.method = spec.method;
  out.rho1 = spec.method == Method::MM ? spec.rho1 : RhoFamily::square();
  out.bases = build_bases(X, spec, k);
  out.selected_k = k;
  const DesignMatrix design = assemble_design(Z, X, out.bases);
  const Eigen::Index P = design.cols();
  if (n <= P) {
    throw Error(ErrorCode::Usage, "n=" + std::to_string(n) + " observations cannot support " +
                                      std::to_string(P) + " coefficients");
  }

  Eigen::VectorXd coef;
  if (spec.method == Method::LS) {
    coef = least_squares(design.matrix, y);
    out.residuals = y - design.matrix * coef;
    out.sigma_hat = std::sqrt(out.residuals.squaredNorm() / static_cast<double>(n - P));
    out.criterion = rbic(out.residuals, out.sigma_hat, RhoFamily::square(), k, static_cast<int>(n));
  } else {
    MScaleSpec scale = spec.scale;
    scale.dof_correction = static_cast<int>(P - 1);
    const SEstimate s = s_estimator(design, y, scale, spec.solver);
    out.initial_coefficients = s.coefficients;
    out.sigma_hat = s.scale;
    if (s.scale > 0.0) {
      const MStepResult m = m_step(design, y, s.scale, spec.rho1, s.coefficients, spec.solver);
      coef = m.coefficients;
      out.m_iterations = m.iterations;
      out.m_converged = m.converged;
    } else {
      coef = s.coefficients;  // exact fit of at least half the sample
    }
    out.residuals = y - design.matrix * coef;
    out.criterion = s.scale > 0.0
                        ? rbic(out.residuals, s.scale, spec.rho1, k, static_cast<int>(n))
                        : -std::numeric_limits<double>::infinity();
  }
  out.fitted = y - out.residuals;
  out.mu_hat = coef[0];
  out.beta_hat = coef.segment(1, design.q);
  for (std::size_t j = 0; j < out.bases.size(); ++j) {
    out.c_hat.push_back(coef.segment(design.block_offset(static_cast<int>(j)),
                                     design.block_sizes[j]));
  }
  out.criterion_trace.push_back({k, out.criterion});
  return out;
}

PlamFit fit(const Eigen::MatrixXd& Z, const Eigen::MatrixXd& X, const Eigen::VectorXd& y,
            const PlamSpec& spec) {
  const auto candidates = candidate_dimensions(spec, static_cast<int>(y.size()),
                                               static_cast<int>(X.cols()));
  std::optional<PlamFit> best;
  std::vector<CriterionPoint> trace;
  for (const auto& k : candidates) {
    PlamFit f = fit_fixed(Z, X, y, spec, k);
    trace.push_back({k, f.criterion});
    const auto total = [](const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); };
    if (!best || f.criterion < best->criterion ||
        (f.criterion == best->criterion && total(k) < total(best->selected_k))) {
      best = std::move(f);
    }
  }
  best->criterion_trace = std::move(trace);
  return std::move(*best);
}

Eigen::VectorXd predict(const PlamFit& fit, const Eigen::MatrixXd& Z_new,
                        const Eigen::MatrixXd& X_new) {
  if (Z_new.cols() != fit.q() || X_new.cols() != fit.p() || Z_new.rows() != X_new.rows()) {
    throw Error(ErrorCode::Data, "prediction inputs do not match the fitted model dimensions");
  }
  Eigen::VectorXd out = (Z_new * fit.beta_hat).array() + fit.mu_hat;
  for (Eigen::Index i = 0; i < X_new.rows(); ++i) {
    for (int j = 0; j < fit.p(); ++j) out[i] += fit.eta(j, X_new(i, j));
  }
  return out;
}

std::array<double, 5> five_number_summary(std::vector<double> values) {
  if (values.empty()) throw Error(ErrorCode::Data, "five-number summary of an empty sample");
  std::sort(values.begin(), values.end());
  const double n = static_cast<double>(values.size());
  const double n4 = std::floor((n + 3.0) / 2.0) / 2.0;
  const double depth[5] = {1.0, n4, (n + 1.0) / 2.0, n + 1.0 - n4, n};
  std::array<double, 5> out{};
  for (int i = 0; i < 5; ++i) {
    const auto lo = static_cast<std::size_t>(std::floor(depth[i] - 1.0));
    const auto hi = static_cast<std::size_t>(std::ceil(depth[i] - 1.0));
    out[static_cast<std::size_t>(i)] = 0.5 * (values[lo] + values[hi]);
  }
  return out;
}

std::vector<int> flag_outliers(const Eigen::VectorXd& residuals) {
  std::vector<int> out;
  if (residuals.size() == 0) return out;
  const auto f = five_number_summary({residuals.data(), residuals.data() + residuals.size()});
  const double iqr = f[3] - f[1];
  const double lower = f[1] - 1.5 * iqr;
  const double upper = f[3] + 1.5 * iqr;
  for (Eigen::Index i = 0; i < residuals.size(); ++i) {
    if (residuals[i] < lower || residuals[i] > upper) out.push_back(static_cast<int>(i));
  }
  return out;
}

std::vector<int> flag_outliers(const PlamFit& fit) { return flag_outliers(fit.residuals); }

}  // namespace robplam
