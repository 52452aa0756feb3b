#pragma once

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <cmath>

namespace riccilab {

/// Orthonormal basis of the column space, rank-truncated at tol relative to
/// the leading singular value.
inline Eigen::MatrixXd column_space(const Eigen::MatrixXd& A, double tol = 1e-9) {
  if (A.cols() == 0) return Eigen::MatrixXd(A.rows(), 0);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  const double cutoff = tol * std::max(1.0, sv.size() > 0 ? sv(0) : 0.0);
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > cutoff) ++rank;
  return svd.matrixU().leftCols(rank);
}

/// Orthonormal basis of the null space.
inline Eigen::MatrixXd null_space(const Eigen::MatrixXd& A, double tol = 1e-9) {
  if (A.rows() == 0) return Eigen::MatrixXd::Identity(A.cols(), A.cols());
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double cutoff = tol * std::max(1.0, sv.size() > 0 ? sv(0) : 0.0);
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > cutoff) ++rank;
  return svd.matrixV().rightCols(A.cols() - rank);
}

/// Matrix exponential by scaling and squaring with a Taylor core; intended
/// for the small, well-conditioned generators used throughout.
inline Eigen::MatrixXd expm(const Eigen::MatrixXd& A) {
  const int n = static_cast<int>(A.rows());
  int s = 0;
  double nrm = A.norm();
  while (nrm > 0.5) {
    nrm /= 2.0;
    ++s;
  }
  const Eigen::MatrixXd B = A / std::pow(2.0, s);
  Eigen::MatrixXd term = Eigen::MatrixXd::Identity(n, n);
  Eigen::MatrixXd sum = term;
  for (int k = 1; k <= 24; ++k) {
    term = term * B / static_cast<double>(k);
    sum += term;
    if (term.norm() < 1e-17 * sum.norm()) break;
  }
  for (int i = 0; i < s; ++i) sum = sum * sum;
  return sum;
}

}  // namespace riccilab
