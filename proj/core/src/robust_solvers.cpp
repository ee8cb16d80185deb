#include "robplam/robust_solvers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>
#include <random>
#include <string>

#include "robplam/error.hpp"
#include "robplam/linalg.hpp"

namespace robplam {

namespace {

constexpr double kScaleRelTol = 1e-11;
constexpr int kScaleMaxIter = 200;
constexpr double kSubsampleRcond = 1e-12;
constexpr double kExactFitRelTol = 1e-12;
constexpr double kIndependenceTol = 1e-7;
constexpr int kMaxHalvings = 30;

double rho_sum(std::span<const double> r, const RhoFamily& f, double s) {
  double sum = 0.0;
  for (double v : r) sum += rho(f, v / s);
  return sum;
}

double rho_sum(const Eigen::VectorXd& r, const RhoFamily& f, double s) {
  return rho_sum(std::span<const double>(r.data(), static_cast<std::size_t>(r.size())), f, s);
}

// Root of sum rho(r/s) = target by bisection on log(s); the left side is
// non-increasing in s.
double bisect_scale(std::span<const double> r, const RhoFamily& f, double target, double s0) {
  double lo = s0;
  double hi = s0;
  for (int i = 0; i < 2000 && rho_sum(r, f, hi) > target; ++i) hi *= 2.0;
  for (int i = 0; i < 2000 && rho_sum(r, f, lo) < target; ++i) lo *= 0.5;
  for (int i = 0; i < 200; ++i) {
    const double mid = std::sqrt(lo * hi);
    if (rho_sum(r, f, mid) > target) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (hi - lo <= 1e-15 * hi) break;
  }
  return 0.5 * (lo + hi);
}

// Fast weighted solve through the normal equations; falls back to QR.
std::optional<Eigen::VectorXd> quick_wls(const Eigen::MatrixXd& X, const Eigen::VectorXd& y,
                                         const Eigen::VectorXd& w) {
  const Eigen::MatrixXd Xw = X.array().colwise() * w.array().sqrt();
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(X.cols(), X.cols());
  A.selfadjointView<Eigen::Lower>().rankUpdate(Xw.transpose());
  Eigen::LLT<Eigen::MatrixXd> llt(A);
  if (llt.info() == Eigen::Success) {
    const double diag_min = llt.matrixLLT().diagonal().minCoeff();
    const double diag_max = llt.matrixLLT().diagonal().maxCoeff();
    if (diag_min > 1e-7 * diag_max) {
      return Eigen::VectorXd(llt.solve(X.transpose() * (w.array() * y.array()).matrix()));
    }
  }
  try {
    return weighted_least_squares(X, y, w);
  } catch (const Error&) {
    return std::nullopt;
  }
}

Eigen::VectorXd bisquare_weights(const Eigen::VectorXd& r, const RhoFamily& f, double s) {
  Eigen::VectorXd w(r.size());
  for (Eigen::Index i = 0; i < r.size(); ++i) w[i] = weight(f, r[i] / s);
  return w;
}

// Row order that depends only on the data values, so that the subsample
// sequence drawn from the seed is the same for any permutation of the rows.
std::vector<Eigen::Index> canonical_order(const Eigen::MatrixXd& X, const Eigen::VectorXd& y) {
  std::vector<Eigen::Index> order(static_cast<std::size_t>(X.rows()));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
    for (Eigen::Index c = 0; c < X.cols(); ++c) {
      if (X(a, c) != X(b, c)) return X(a, c) < X(b, c);
    }
    return y[a] < y[b];
  });
  return order;
}

// Draws rows in random order and keeps those linearly independent of the rows
// already kept, until P rows are found. Returns false if the whole sample is
// exhausted first (rank-deficient design).
bool draw_elemental(const Eigen::MatrixXd& X, const std::vector<Eigen::Index>& order,
                    std::vector<std::size_t>& perm, std::mt19937_64& rng,
                    std::vector<Eigen::Index>& picked, Eigen::MatrixXd& basis) {
  const auto n = perm.size();
  const Eigen::Index P = X.cols();
  picked.clear();
  Eigen::VectorXd v(P);
  for (std::size_t j = 0; j < n && static_cast<Eigen::Index>(picked.size()) < P; ++j) {
    std::uniform_int_distribution<std::size_t> pick(j, n - 1);
    std::swap(perm[j], perm[pick(rng)]);
    const Eigen::Index row = order[perm[j]];
    v = X.row(row).transpose();
    const double norm0 = v.norm();
    if (norm0 == 0.0) continue;
    const auto m = static_cast<Eigen::Index>(picked.size());
    for (int pass = 0; pass < 2; ++pass) {
      for (Eigen::Index c = 0; c < m; ++c) v -= basis.col(c).dot(v) * basis.col(c);
    }
    const double norm = v.norm();
    if (norm <= kIndependenceTol * norm0) continue;
    basis.col(m) = v / norm;
    picked.push_back(row);
  }
  return static_cast<Eigen::Index>(picked.size()) == P;
}

struct Candidate {
  double scale;
  Eigen::VectorXd coef;
};

}  // namespace

double m_scale(std::span<const double> residuals, const MScaleSpec& spec) {
  if (residuals.empty()) throw Error(ErrorCode::Data, "m_scale of an empty residual vector");
  if (!spec.rho0.bounded()) throw Error(ErrorCode::Usage, "M-scale requires a bounded rho");
  if (!(spec.b > 0.0 && spec.b < 1.0)) throw Error(ErrorCode::Usage, "M-scale b must be in (0,1)");
  const double den = static_cast<double>(residuals.size()) - spec.dof_correction;
  if (den <= 0) {
    throw Error(ErrorCode::Usage, "M-scale denominator n - dof_correction must be positive");
  }
  const double target = spec.b * den;

  std::vector<double> abs_r;
  abs_r.reserve(residuals.size());
  for (double v : residuals) {
    if (v != 0.0) abs_r.push_back(std::abs(v));
  }
  // sum rho(r/s) < #nonzero for every s > 0, so no root exists otherwise.
  if (static_cast<double>(abs_r.size()) <= target) return 0.0;

  std::vector<double> all_abs;
  all_abs.reserve(residuals.size());
  for (double v : residuals) all_abs.push_back(std::abs(v));
  double s = median(all_abs) / 0.6745;
  if (s == 0.0) s = median(abs_r) / 0.6745;

  // Safeguarded Newton on g(s) = sum rho(r/s) - target, which is
  // non-increasing in s; g'(s) = -sum psi(t) t / s with t = r/s.
  double lo = 0.0;
  double hi = std::numeric_limits<double>::infinity();
  bool converged = false;
  for (int it = 0; it < kScaleMaxIter; ++it) {
    double g = -target;
    double d = 0.0;
    for (double v : residuals) {
      const double t = v / s;
      g += rho(spec.rho0, t);
      d += psi(spec.rho0, t) * t;
    }
    if (g > 0.0) {
      lo = s;
    } else {
      hi = s;
    }
    double next = d > 0.0 ? s + s * g / d : std::numeric_limits<double>::quiet_NaN();
    if (!(next > lo && next < hi)) {
      if (std::isfinite(hi) && lo > 0.0) {
        next = std::sqrt(lo * hi);
      } else {
        next = g > 0.0 ? 2.0 * s : 0.5 * s;
      }
    }
    const bool done = std::abs(next - s) <= kScaleRelTol * s;
    s = next;
    if (done) {
      converged = true;
      break;
    }
  }
  if (!converged || std::abs(rho_sum(residuals, spec.rho0, s) / den - spec.b) > 1e-10) {
    s = bisect_scale(residuals, spec.rho0, target, s);
  }
  return s;
}

double m_scale(const Eigen::VectorXd& residuals, const MScaleSpec& spec) {
  return m_scale(std::span<const double>(residuals.data(), static_cast<std::size_t>(residuals.size())),
                 spec);
}

SEstimate s_estimator(const DesignMatrix& design, const Eigen::VectorXd& y,
                      const MScaleSpec& spec, const SolverConfig& config) {
  const Eigen::MatrixXd& X = design.matrix;
  const Eigen::Index n = X.rows();
  const Eigen::Index P = X.cols();
  if (y.size() != n) throw Error(ErrorCode::Data, "response length does not match the design");
  if (n <= P) {
    throw Error(ErrorCode::Usage, "S-estimation needs more observations (" + std::to_string(n) +
                                      ") than coefficients (" + std::to_string(P) + ")");
  }
  if (config.n_sub <= 0 || config.best_keep <= 0 || config.k_istep < 0) {
    throw Error(ErrorCode::Usage, "invalid fast-S configuration");
  }
  if (numerical_rank(X) < P) throw Error(ErrorCode::Numerical, "rank-deficient design");

  const double den = static_cast<double>(n - spec.dof_correction);
  const double target = spec.b * den;
  const auto order = canonical_order(X, y);
  std::vector<std::size_t> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::mt19937_64 rng(config.seed);

  SEstimate out;
  std::vector<Candidate> best;
  std::vector<Eigen::Index> picked;
  Eigen::MatrixXd basis(P, P);
  Eigen::MatrixXd Xs(P, P);
  Eigen::VectorXd ys(P);
  std::vector<double> abs_r;
  // Residuals this small relative to y are rounding noise from an exact fit.
  const double zero_tol = kExactFitRelTol * y.cwiseAbs().maxCoeff();
  const auto exact_fit = [&](const Eigen::VectorXd& r) {
    return static_cast<double>((r.array().abs() > zero_tol).count()) <= target;
  };
  const auto record = [&] {
    out.scale_trace.push_back(best.empty() ? std::numeric_limits<double>::infinity()
                                           : best.front().scale);
  };

  const long max_attempts = 50L * config.n_sub;
  long attempts = 0;
  for (int sub = 0; sub < config.n_sub && attempts < max_attempts; ++attempts) {
    if (!draw_elemental(X, order, perm, rng, picked, basis)) {
      throw Error(ErrorCode::Numerical, "rank-deficient design");
    }
    for (Eigen::Index r = 0; r < P; ++r) {
      Xs.row(r) = X.row(picked[r]);
      ys[r] = y[picked[r]];
    }
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(Xs);
    if (!(lu.rcond() > kSubsampleRcond)) continue;
    ++sub;
    Eigen::VectorXd coef = lu.solve(ys);
    Eigen::VectorXd r = y - X * coef;
    // Concentration steps start from the normalized MAD, as in fast-S.
    abs_r.resize(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) abs_r[static_cast<std::size_t>(i)] = std::abs(r[i]);
    if (exact_fit(r)) {
      out.coefficients = coef;
      out.scale = 0.0;
      out.scale_trace.push_back(0.0);
      return out;
    }
    double s = median(abs_r) / 0.6745;
    if (s == 0.0) s = m_scale(r, spec);
    bool usable = true;
    for (int step = 0; step < config.k_istep; ++step) {
      const Eigen::VectorXd w = bisquare_weights(r, spec.rho0, s);
      auto next = quick_wls(X, y, w);
      if (!next) {
        usable = false;
        break;
      }
      coef = std::move(*next);
      r = y - X * coef;
      s *= std::sqrt(rho_sum(r, spec.rho0, s) / target);
      if (!(s > 0.0)) break;
    }
    if (!usable) {
      record();
      continue;
    }
    if (static_cast<int>(best.size()) == config.best_keep &&
        rho_sum(r, spec.rho0, best.back().scale) >= target) {
      record();  // cannot beat the worst retained candidate
      continue;
    }
    s = m_scale(r, spec);
    if (s == 0.0) {
      out.coefficients = coef;
      out.scale = 0.0;
      out.scale_trace.push_back(0.0);
      return out;
    }
    Candidate cand{s, std::move(coef)};
    const auto pos = std::upper_bound(best.begin(), best.end(), cand.scale,
                                      [](double v, const Candidate& c) { return v < c.scale; });
    best.insert(pos, std::move(cand));
    if (static_cast<int>(best.size()) > config.best_keep) best.pop_back();
    record();
  }
  if (best.empty()) {
    throw Error(ErrorCode::Numerical, "all elemental subsamples were singular");
  }

  std::optional<Candidate> winner;
  for (auto& cand : best) {
    Eigen::VectorXd coef = cand.coef;
    Eigen::VectorXd r = y - X * coef;
    double s = cand.scale;
    for (int it = 0; it < config.max_iter && s > 0.0; ++it) {
      const Eigen::VectorXd w = bisquare_weights(r, spec.rho0, s);
      if (w.sum() <= 0.0) break;
      auto solved = quick_wls(X, y, w);
      if (!solved) break;
      Eigen::VectorXd next = std::move(*solved);
      const Eigen::VectorXd next_r = y - X * next;
      const double next_s = m_scale(next_r, spec);
      if (next_s > s) break;  // guard against numerical non-descent
      const double change = (next - coef).norm();
      const double size = std::max(config.tol, coef.norm());
      coef = std::move(next);
      r = next_r;
      s = next_s;
      if (change <= config.tol * size) break;
    }
    if (!winner || s < winner->scale) winner = Candidate{s, coef};
    out.scale_trace.push_back(winner->scale);
  }
  out.coefficients = std::move(winner->coef);
  out.scale = winner->scale;
  return out;
}

double m_objective(const DesignMatrix& design, const Eigen::VectorXd& y,
                   const Eigen::VectorXd& coefficients, double sigma, const RhoFamily& rho1) {
  const Eigen::VectorXd r = y - design.matrix * coefficients;
  return rho_sum(r, rho1, sigma);
}

MStepResult m_step(const DesignMatrix& design, const Eigen::VectorXd& y, double sigma,
                   const RhoFamily& rho1, const Eigen::VectorXd& init,
                   const SolverConfig& config) {
  const Eigen::MatrixXd& X = design.matrix;
  if (!(sigma > 0.0)) throw Error(ErrorCode::Numerical, "M-step requires a positive scale");
  if (!rho1.bounded()) throw Error(ErrorCode::Usage, "M-step requires a bounded rho");
  if (init.size() != X.cols()) {
    throw Error(ErrorCode::Data, "initial coefficients do not match the design");
  }
  if (y.size() != X.rows()) throw Error(ErrorCode::Data, "response length does not match the design");

  MStepResult res;
  res.coefficients = init;
  Eigen::VectorXd r = y - X * init;
  res.objective = rho_sum(r, rho1, sigma);
  res.objective_trace.push_back(res.objective);

  for (int it = 0; it < config.max_iter; ++it) {
    const Eigen::VectorXd w = bisquare_weights(r, rho1, sigma);
    if (!(w.sum() > 0.0)) {
      throw Error(ErrorCode::Numerical, "all observations rejected by the M-step weights");
    }
    Eigen::VectorXd target;
    try {
      target = weighted_least_squares(X, y, w);
    } catch (const Error&) {
      throw Error(ErrorCode::Numerical,
                  "weighted design is singular: too many observations rejected");
    }
    res.iterations = it + 1;
    const Eigen::VectorXd step = target - res.coefficients;
    double t = 1.0;
    Eigen::VectorXd trial = target;
    Eigen::VectorXd trial_r = y - X * trial;
    double trial_obj = rho_sum(trial_r, rho1, sigma);
    for (int h = 0; h < kMaxHalvings && trial_obj > res.objective; ++h) {
      t *= 0.5;
      trial = res.coefficients + t * step;
      trial_r = y - X * trial;
      trial_obj = rho_sum(trial_r, rho1, sigma);
    }
    if (trial_obj > res.objective) {
      res.converged = true;  // no descent direction left at working precision
      break;
    }
    const double change = (trial - res.coefficients).norm();
    const double size = std::max(config.tol, res.coefficients.norm());
    res.coefficients = std::move(trial);
    r = std::move(trial_r);
    res.objective = trial_obj;
    res.objective_trace.push_back(trial_obj);
    if (change <= config.tol * size) {
      res.converged = true;
      break;
    }
  }
  return res;
}

}  // namespace robplam
