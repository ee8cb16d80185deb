#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

namespace robplam {

enum class KnotMode { Uniform, Quantile };

/// How the integral of each basis element is estimated before it is
/// subtracted. Integral uses the normalized Lebesgue integral over
/// [lo, hi]; Empirical uses the sample mean over the training points.
enum class Centering { Integral, Empirical };

struct KnotScheme {
  KnotMode mode = KnotMode::Uniform;
  int interior_count = 0;
  double lo = 0.0;
  double hi = 1.0;
};

/// B-spline basis of a given order on [lo, hi] with its elements centered.
///
/// Uncentered elements form a partition of unity on [lo, hi]. Centered
/// elements B_s = Bt_s - center_s therefore sum to zero pointwise, so the
/// last element is dropped from the regression design and
/// eval_reduced() returns only the first k - 1 centered values.
class CenteredSplineBasis {
 public:
  /// Builds a basis with k elements from training values. Boundary knots
  /// are at min/max of x; k - order interior knots are placed uniformly or
  /// at the l/(k - order + 1) sample quantiles.
  static CenteredSplineBasis build(std::span<const double> x, int order, int k,
                                   KnotMode mode,
                                   Centering centering = Centering::Integral);

  /// Rebuilds a basis from stored knots and centers (e.g. a saved model).
  static CenteredSplineBasis from_parts(int order, std::vector<double> interior_knots,
                                        double lo, double hi, std::vector<double> centers,
                                        Centering centering, KnotMode mode);

  int order() const { return order_; }
  int dimension() const { return k_; }
  double lo() const { return knots_.front(); }
  double hi() const { return knots_.back(); }
  KnotMode knot_mode() const { return mode_; }
  Centering centering() const { return centering_; }
  KnotScheme scheme() const;

  /// Full padded knot vector of length k + order.
  const std::vector<double>& knots() const { return knots_; }
  std::vector<double> interior_knots() const;
  const std::vector<double>& centers() const { return centers_; }

  /// Closed form integral of uncentered element s over [lo, hi].
  double element_integral(int s) const;

  double clamp(double x) const;

  /// All k uncentered values at x (x is clamped into [lo, hi]).
  Eigen::VectorXd eval_uncentered(double x) const;
  /// All k centered values.
  Eigen::VectorXd eval_centered(double x) const;
  /// First k - 1 centered values.
  Eigen::VectorXd eval_reduced(double x) const;

  /// Writes the k - 1 reduced values at x into out.
  void eval_reduced_into(double x, std::span<double> out) const;

  /// Evaluates sum_s coef[s] * B_s(x) over the reduced basis.
  double eval_combination(std::span<const double> coef, double x) const;

 private:
  CenteredSplineBasis() = default;

  // Writes the `order` possibly-nonzero values at x into out and returns the
  // index of the first of them.
  int eval_local(double x, double* out) const;

  int order_ = 4;
  int k_ = 4;
  KnotMode mode_ = KnotMode::Uniform;
  Centering centering_ = Centering::Integral;
  std::vector<double> knots_;
  std::vector<double> centers_;
};

/// Regression design [1 | Z | V^(1) | ... | V^(p)].
struct DesignMatrix {
  Eigen::MatrixXd matrix;
  int q = 0;
  std::vector<int> block_sizes;  // k_j - 1 per smooth covariate

  Eigen::Index n() const { return matrix.rows(); }
  Eigen::Index cols() const { return matrix.cols(); }
  int total_k() const;  // K = sum_j (k_j - 1)
  int block_offset(int j) const;
};

DesignMatrix assemble_design(const Eigen::MatrixXd& Z, const Eigen::MatrixXd& X,
                             std::span<const CenteredSplineBasis> bases);

/// Sample quantile with linear interpolation between order statistics
/// (the "type 7" definition). `sorted` must be ascending.
double sample_quantile(std::span<const double> sorted, double prob);

}  // namespace robplam
