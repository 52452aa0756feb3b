#include "riccilab/subspace.hpp"

#include <Eigen/QR>
#include <Eigen/SVD>

#include "riccilab/linalg.hpp"

namespace riccilab {

Subspace::Subspace(int ambient_dim, Eigen::MatrixXd basis)
    : ambient_(ambient_dim), basis_(std::move(basis)) {
  if (basis_.size() == 0 && basis_.cols() == 0) basis_.resize(ambient_, 0);
  if (basis_.rows() != ambient_)
    throw ValidationError("Subspace: basis rows do not match ambient dimension");
  if (basis_.cols() > 0) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(basis_);
    const auto& sv = svd.singularValues();
    if (sv(sv.size() - 1) <= kAlgTol * std::max(1.0, sv(0)))
      throw ValidationError("Subspace: basis columns are linearly dependent");
  }
}

Subspace Subspace::zero(int ambient_dim) {
  return Subspace(ambient_dim, Eigen::MatrixXd(ambient_dim, 0));
}

Subspace Subspace::full(int ambient_dim) {
  return Subspace(ambient_dim, Eigen::MatrixXd::Identity(ambient_dim, ambient_dim));
}

Subspace Subspace::span(const Eigen::MatrixXd& vectors, double tol) {
  return Subspace(static_cast<int>(vectors.rows()), column_space(vectors, tol));
}

Eigen::MatrixXd Subspace::orthonormal_basis() const {
  if (dim() == 0) return basis_;
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(basis_);
  return Eigen::MatrixXd(qr.householderQ()).leftCols(dim());
}

Eigen::MatrixXd Subspace::projector() const {
  if (dim() == 0) return Eigen::MatrixXd::Zero(ambient_, ambient_);
  const Eigen::MatrixXd Q = orthonormal_basis();
  return Q * Q.transpose();
}

Eigen::MatrixXd Subspace::projector(const Eigen::MatrixXd& M) const {
  if (dim() == 0) return Eigen::MatrixXd::Zero(ambient_, ambient_);
  const Eigen::MatrixXd BtMB = basis_.transpose() * M * basis_;
  return basis_ * BtMB.ldlt().solve(basis_.transpose() * M);
}

double Subspace::distance(const Eigen::VectorXd& v) const {
  if (dim() == 0) return v.norm();
  return (v - projector() * v).norm();
}

bool Subspace::contains(const Eigen::VectorXd& v, double tol) const {
  return distance(v) <= tol * std::max(1.0, v.norm());
}

bool Subspace::contains(const Subspace& other, double tol) const {
  const Eigen::MatrixXd P = projector();
  for (int j = 0; j < other.dim(); ++j) {
    const Eigen::VectorXd v = other.basis().col(j);
    if ((v - P * v).norm() > tol * std::max(1.0, v.norm())) return false;
  }
  return true;
}

double Subspace::mutual_projection_residual(const Subspace& other) const {
  if (ambient_ != other.ambient_)
    throw ValidationError("mutual_projection_residual: ambient mismatch");
  const Eigen::MatrixXd P = projector();
  const Eigen::MatrixXd Q = other.projector();
  return (P - Q).norm();
}

Subspace Subspace::direct_sum(const Subspace& other) const {
  Eigen::MatrixXd joint(ambient_, dim() + other.dim());
  joint << basis_, other.basis();
  Subspace s = Subspace::span(joint);
  if (s.dim() != dim() + other.dim())
    throw ValidationError("direct_sum: subspaces intersect nontrivially");
  return s;
}

Subspace bracket_span(const LieAlgebra& L, const Subspace& a, const Subspace& b, double tol) {
  const int n = L.dim();
  Eigen::MatrixXd cols(n, std::max(1, a.dim() * b.dim()));
  cols.setZero();
  int c = 0;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < b.dim(); ++j) cols.col(c++) = L.bracket(a.basis().col(i), b.basis().col(j));
  if (c == 0) return Subspace::zero(n);
  return Subspace::span(cols.leftCols(c), tol);
}

double bracket_containment_residual(const LieAlgebra& L, const Subspace& a,
                                    const Subspace& b, const Subspace& c) {
  double worst = 0.0;
  const Eigen::MatrixXd P = c.projector();
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < b.dim(); ++j) {
      const Eigen::VectorXd v = L.bracket(a.basis().col(i), b.basis().col(j));
      const double scale = std::max(1.0, v.norm());
      worst = std::max(worst, (v - P * v).norm() / scale);
    }
  return worst;
}

bool is_subalgebra(const LieAlgebra& L, const Subspace& s, double tol) {
  return bracket_containment_residual(L, s, s, s) <= tol;
}

}  // namespace riccilab
