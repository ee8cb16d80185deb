#include "robplam/linalg.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "robplam/error.hpp"

namespace robplam {

namespace {
constexpr double kRankThreshold = 1e-10;
}

Eigen::Index numerical_rank(const Eigen::MatrixXd& X) {
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(X);
  qr.setThreshold(kRankThreshold);
  return qr.rank();
}

Eigen::VectorXd least_squares(const Eigen::MatrixXd& X, const Eigen::VectorXd& y) {
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(X);
  qr.setThreshold(kRankThreshold);
  if (qr.rank() < X.cols()) {
    throw Error(ErrorCode::Numerical, "rank-deficient design (rank " +
                                          std::to_string(qr.rank()) + " of " +
                                          std::to_string(X.cols()) + " columns)");
  }
  return qr.solve(y);
}

Eigen::VectorXd weighted_least_squares(const Eigen::MatrixXd& X, const Eigen::VectorXd& y,
                                       const Eigen::VectorXd& w) {
  const Eigen::ArrayXd sw = w.array().sqrt();
  const Eigen::MatrixXd Xw = X.array().colwise() * sw;
  const Eigen::VectorXd yw = (y.array() * sw).matrix();
  return least_squares(Xw, yw);
}

Eigen::MatrixXd symmetric_inverse(const Eigen::MatrixXd& A, const char* what,
                                  bool* ill_conditioned) {
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(A);
  cod.setThreshold(1e-12);
  if (A.rows() == 0 || cod.rank() < A.rows()) {
    throw Error(ErrorCode::Numerical, std::string("singular matrix ") + what);
  }
  if (ill_conditioned != nullptr) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (A + A.transpose()),
                                                      Eigen::EigenvaluesOnly);
    const auto ev = es.eigenvalues().cwiseAbs();
    *ill_conditioned = ev.minCoeff() <= 0.0 || ev.maxCoeff() / ev.minCoeff() > 1e10;
  }
  Eigen::MatrixXd inv = cod.pseudoInverse();
  return 0.5 * (inv + inv.transpose());
}

double median(std::span<const double> values) {
  if (values.empty()) return 0.0;
  std::vector<double> v(values.begin(), values.end());
  const std::size_t mid = v.size() / 2;
  std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid), v.end());
  const double upper = v[mid];
  if (v.size() % 2 == 1) return upper;
  const double lower = *std::max_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid));
  return 0.5 * (lower + upper);
}

}  // namespace robplam
