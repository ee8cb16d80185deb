#include "robplam/bsplines.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "robplam/error.hpp"

namespace robplam {

namespace {

constexpr int kMaxOrder = 16;

std::vector<double> padded_knots(int order, const std::vector<double>& interior,
                                 double lo, double hi) {
  std::vector<double> t;
  t.reserve(interior.size() + 2 * static_cast<std::size_t>(order));
  t.insert(t.end(), order, lo);
  t.insert(t.end(), interior.begin(), interior.end());
  t.insert(t.end(), order, hi);
  return t;
}

void check_interior(const std::vector<double>& interior, double lo, double hi) {
  for (std::size_t i = 0; i < interior.size(); ++i) {
    if (!(interior[i] > lo && interior[i] < hi)) {
      throw Error(ErrorCode::Data,
                  "interior knot " + std::to_string(interior[i]) +
                      " is not strictly inside the covariate range");
    }
    if (i > 0 && interior[i] < interior[i - 1]) {
      throw Error(ErrorCode::Data, "interior knots must be non-decreasing");
    }
  }
}

}  // namespace

double sample_quantile(std::span<const double> sorted, double prob) {
  if (sorted.empty()) throw Error(ErrorCode::Data, "quantile of an empty sample");
  const double h = (static_cast<double>(sorted.size()) - 1.0) * prob;
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const auto hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

CenteredSplineBasis CenteredSplineBasis::build(std::span<const double> x, int order, int k,
                                               KnotMode mode, Centering centering) {
  if (order < 2 || order > kMaxOrder) {
    throw Error(ErrorCode::Usage, "spline order must be between 2 and 16");
  }
  if (k < order) {
    throw Error(ErrorCode::Usage, "basis dimension k=" + std::to_string(k) +
                                      " is smaller than the spline order " +
                                      std::to_string(order));
  }
  if (x.empty()) throw Error(ErrorCode::Data, "cannot build a basis from no data");
  const auto [mn, mx] = std::minmax_element(x.begin(), x.end());
  const double lo = *mn;
  const double hi = *mx;
  if (!(lo < hi)) throw Error(ErrorCode::Data, "degenerate covariate: all values equal");

  const int interior_count = k - order;
  std::vector<double> interior(static_cast<std::size_t>(interior_count));
  if (mode == KnotMode::Uniform) {
    for (int l = 1; l <= interior_count; ++l) {
      interior[l - 1] = lo + (hi - lo) * l / (interior_count + 1);
    }
  } else {
    std::vector<double> sorted(x.begin(), x.end());
    std::sort(sorted.begin(), sorted.end());
    for (int l = 1; l <= interior_count; ++l) {
      interior[l - 1] = sample_quantile(sorted, static_cast<double>(l) / (interior_count + 1));
    }
  }
  check_interior(interior, lo, hi);

  CenteredSplineBasis b;
  b.order_ = order;
  b.k_ = k;
  b.mode_ = mode;
  b.centering_ = centering;
  b.knots_ = padded_knots(order, interior, lo, hi);
  b.centers_.assign(k, 0.0);
  if (centering == Centering::Integral) {
    for (int s = 0; s < k; ++s) b.centers_[s] = b.element_integral(s) / (hi - lo);
  } else {
    double local[kMaxOrder];
    for (double xi : x) {
      const int first = b.eval_local(xi, local);
      for (int r = 0; r < order; ++r) b.centers_[first + r] += local[r];
    }
    for (double& c : b.centers_) c /= static_cast<double>(x.size());
  }
  return b;
}

CenteredSplineBasis CenteredSplineBasis::from_parts(int order, std::vector<double> interior,
                                                    double lo, double hi,
                                                    std::vector<double> centers,
                                                    Centering centering, KnotMode mode) {
  if (order < 2 || order > kMaxOrder) {
    throw Error(ErrorCode::Data, "spline order must be between 2 and 16");
  }
  if (!(lo < hi)) throw Error(ErrorCode::Data, "basis interval must satisfy lo < hi");
  check_interior(interior, lo, hi);
  const int k = static_cast<int>(interior.size()) + order;
  if (static_cast<int>(centers.size()) != k) {
    throw Error(ErrorCode::Data, "basis centers do not match the basis dimension");
  }
  CenteredSplineBasis b;
  b.order_ = order;
  b.k_ = k;
  b.mode_ = mode;
  b.centering_ = centering;
  b.knots_ = padded_knots(order, interior, lo, hi);
  b.centers_ = std::move(centers);
  return b;
}

KnotScheme CenteredSplineBasis::scheme() const {
  return {mode_, k_ - order_, lo(), hi()};
}

std::vector<double> CenteredSplineBasis::interior_knots() const {
  return {knots_.begin() + order_, knots_.end() - order_};
}

double CenteredSplineBasis::element_integral(int s) const {
  return (knots_[s + order_] - knots_[s]) / order_;
}

double CenteredSplineBasis::clamp(double x) const { return std::clamp(x, lo(), hi()); }

int CenteredSplineBasis::eval_local(double x, double* out) const {
  const int p = order_ - 1;
  x = clamp(x);
  // Span index i in [p, k-1] with t_i <= x < t_{i+1}; the right end belongs
  // to the last non-empty span.
  int span;
  if (x >= knots_[k_]) {
    span = k_ - 1;
  } else {
    const auto it = std::upper_bound(knots_.begin() + p, knots_.begin() + k_ + 1, x);
    span = static_cast<int>(it - knots_.begin()) - 1;
  }
  double left[kMaxOrder];
  double right[kMaxOrder];
  out[0] = 1.0;
  for (int j = 1; j <= p; ++j) {
    left[j] = x - knots_[span + 1 - j];
    right[j] = knots_[span + j] - x;
    double saved = 0.0;
    for (int r = 0; r < j; ++r) {
      const double temp = out[r] / (right[r + 1] + left[j - r]);
      out[r] = saved + right[r + 1] * temp;
      saved = left[j - r] * temp;
    }
    out[j] = saved;
  }
  return span - p;
}

Eigen::VectorXd CenteredSplineBasis::eval_uncentered(double x) const {
  Eigen::VectorXd v = Eigen::VectorXd::Zero(k_);
  double local[kMaxOrder];
  const int first = eval_local(x, local);
  for (int r = 0; r < order_; ++r) v[first + r] = local[r];
  return v;
}

Eigen::VectorXd CenteredSplineBasis::eval_centered(double x) const {
  Eigen::VectorXd v = eval_uncentered(x);
  for (int s = 0; s < k_; ++s) v[s] -= centers_[s];
  return v;
}

Eigen::VectorXd CenteredSplineBasis::eval_reduced(double x) const {
  Eigen::VectorXd v(k_ - 1);
  eval_reduced_into(x, {v.data(), static_cast<std::size_t>(v.size())});
  return v;
}

void CenteredSplineBasis::eval_reduced_into(double x, std::span<double> out) const {
  for (int s = 0; s < k_ - 1; ++s) out[s] = -centers_[s];
  double local[kMaxOrder];
  const int first = eval_local(x, local);
  for (int r = 0; r < order_; ++r) {
    const int s = first + r;
    if (s < k_ - 1) out[s] += local[r];
  }
}

double CenteredSplineBasis::eval_combination(std::span<const double> coef, double x) const {
  double local[kMaxOrder];
  const int first = eval_local(x, local);
  double sum = 0.0;
  for (int s = 0; s < k_ - 1; ++s) sum -= coef[s] * centers_[s];
  for (int r = 0; r < order_; ++r) {
    const int s = first + r;
    if (s < k_ - 1) sum += coef[s] * local[r];
  }
  return sum;
}

int DesignMatrix::total_k() const {
  return std::accumulate(block_sizes.begin(), block_sizes.end(), 0);
}

int DesignMatrix::block_offset(int j) const {
  return 1 + q + std::accumulate(block_sizes.begin(), block_sizes.begin() + j, 0);
}

DesignMatrix assemble_design(const Eigen::MatrixXd& Z, const Eigen::MatrixXd& X,
                             std::span<const CenteredSplineBasis> bases) {
  const Eigen::Index n = Z.rows();
  if (X.rows() != n) {
    throw Error(ErrorCode::Data, "Z has " + std::to_string(n) + " rows but X has " +
                                     std::to_string(X.rows()));
  }
  if (static_cast<std::size_t>(X.cols()) != bases.size()) {
    throw Error(ErrorCode::Data, "one basis is required per smooth covariate");
  }
  DesignMatrix d;
  d.q = static_cast<int>(Z.cols());
  for (const auto& b : bases) d.block_sizes.push_back(b.dimension() - 1);
  d.matrix.resize(n, 1 + d.q + d.total_k());
  d.matrix.col(0).setOnes();
  if (d.q > 0) d.matrix.middleCols(1, d.q) = Z;
  std::vector<double> row;
  for (std::size_t j = 0; j < bases.size(); ++j) {
    const int off = d.block_offset(static_cast<int>(j));
    const int width = d.block_sizes[j];
    row.resize(width);
    for (Eigen::Index i = 0; i < n; ++i) {
      bases[j].eval_reduced_into(X(i, static_cast<Eigen::Index>(j)), row);
      for (int s = 0; s < width; ++s) d.matrix(i, off + s) = row[s];
    }
  }
  return d;
}

}  // namespace robplam
