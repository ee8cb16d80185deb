#pragma once

#include <span>

#include <Eigen/Dense>

namespace robplam {

/// Least squares via column-pivoted Householder QR. Throws Numerical when
/// the matrix is rank deficient.
Eigen::VectorXd least_squares(const Eigen::MatrixXd& X, const Eigen::VectorXd& y);

/// Minimizes sum_i w_i (y_i - x_i^T b)^2 for non-negative weights.
Eigen::VectorXd weighted_least_squares(const Eigen::MatrixXd& X, const Eigen::VectorXd& y,
                                       const Eigen::VectorXd& w);

/// Numerical rank with the QR threshold used by least_squares().
Eigen::Index numerical_rank(const Eigen::MatrixXd& X);

/// Inverse of a symmetric matrix via complete orthogonal decomposition.
/// Throws Numerical naming `what` when the matrix is singular; sets
/// `ill_conditioned` when the condition estimate exceeds 1e10.
Eigen::MatrixXd symmetric_inverse(const Eigen::MatrixXd& A, const char* what,
                                  bool* ill_conditioned = nullptr);

double median(std::span<const double> values);

}  // namespace robplam
