#include "riccilab/lie_algebra.hpp"

#include <cmath>
#include <tuple>

namespace riccilab {

LieAlgebra::LieAlgebra(int dim, std::vector<std::string> labels,
                       const std::vector<std::tuple<int, int, int, double>>& brackets)
    : n_(dim), labels_(std::move(labels)) {
  if (n_ <= 0) throw ValidationError("LieAlgebra: dimension must be positive");
  if (labels_.empty()) {
    labels_.resize(n_);
    for (int i = 0; i < n_; ++i) labels_[i] = "e" + std::to_string(i + 1);
  }
  if (static_cast<int>(labels_.size()) != n_)
    throw ValidationError("LieAlgebra: label count does not match dimension");
  c_.assign(n_, Eigen::MatrixXd::Zero(n_, n_));
  for (const auto& [i, j, k, v] : brackets) {
    if (i < 0 || j < 0 || k < 0 || i >= n_ || j >= n_ || k >= n_)
      throw ValidationError("LieAlgebra: bracket index out of range");
    if (i == j) throw ValidationError("LieAlgebra: bracket entry with i == j");
    c_[k](i, j) += v;
    c_[k](j, i) -= v;
  }
}

LieAlgebra::LieAlgebra(std::vector<Eigen::MatrixXd> components, std::vector<std::string> labels)
    : n_(static_cast<int>(components.size())), labels_(std::move(labels)), c_(std::move(components)) {
  if (n_ <= 0) throw ValidationError("LieAlgebra: empty component list");
  for (const auto& m : c_)
    if (m.rows() != n_ || m.cols() != n_)
      throw ValidationError("LieAlgebra: component shape mismatch");
  if (labels_.empty()) {
    labels_.resize(n_);
    for (int i = 0; i < n_; ++i) labels_[i] = "e" + std::to_string(i + 1);
  }
  validate_antisymmetry();
}

void LieAlgebra::validate_antisymmetry() const {
  for (int k = 0; k < n_; ++k) {
    const double res = (c_[k] + c_[k].transpose()).cwiseAbs().maxCoeff();
    if (res > 1e-12)
      throw ValidationError("LieAlgebra: structure constants not antisymmetric, residual " +
                            std::to_string(res));
  }
}

Eigen::VectorXd LieAlgebra::bracket(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const {
  if (x.size() != n_ || y.size() != n_)
    throw ValidationError("bracket: dimension mismatch");
  Eigen::VectorXd out(n_);
  for (int k = 0; k < n_; ++k) out(k) = x.dot(c_[k] * y);
  return out;
}

Eigen::MatrixXd LieAlgebra::ad(const Eigen::VectorXd& x) const {
  if (x.size() != n_) throw ValidationError("ad: dimension mismatch");
  Eigen::MatrixXd A(n_, n_);
  for (int k = 0; k < n_; ++k) A.row(k) = x.transpose() * c_[k];
  return A;
}

Eigen::MatrixXd LieAlgebra::ad_basis(int i) const {
  Eigen::MatrixXd A(n_, n_);
  for (int k = 0; k < n_; ++k) A.row(k) = c_[k].row(i);
  return A;
}

Eigen::MatrixXd LieAlgebra::killing_form() const {
  std::vector<Eigen::MatrixXd> ads(n_);
  for (int i = 0; i < n_; ++i) ads[i] = ad_basis(i);
  Eigen::MatrixXd B(n_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = i; j < n_; ++j) {
      B(i, j) = (ads[i] * ads[j]).trace();
      B(j, i) = B(i, j);
    }
  return B;
}

double LieAlgebra::jacobi_residual() const {
  double worst = 0.0;
  for (int i = 0; i < n_; ++i) {
    const Eigen::MatrixXd adi = ad_basis(i);
    for (int j = i + 1; j < n_; ++j) {
      const Eigen::MatrixXd adj = ad_basis(j);
      for (int k = j + 1; k < n_; ++k) {
        Eigen::VectorXd ek = Eigen::VectorXd::Zero(n_);
        ek(k) = 1.0;
        Eigen::VectorXd ej = Eigen::VectorXd::Zero(n_);
        ej(j) = 1.0;
        // [[ei,ej],ek] + [[ej,ek],ei] + [[ek,ei],ej]
        Eigen::VectorXd s = bracket(adi * ej, ek);
        Eigen::VectorXd ei = Eigen::VectorXd::Zero(n_);
        ei(i) = 1.0;
        s += bracket(adj * ek, ei);
        s += bracket(ad_basis(k) * ei, ej);
        worst = std::max(worst, s.cwiseAbs().maxCoeff());
      }
    }
  }
  return worst;
}

double LieAlgebra::killing_invariance_residual() const {
  const Eigen::MatrixXd B = killing_form();
  double worst = 0.0;
  for (int i = 0; i < n_; ++i) {
    const Eigen::MatrixXd adi = ad_basis(i);
    // B([x,y],z) + B(y,[x,z]) = (ad_x^T B + B ad_x)(y,z)
    const Eigen::MatrixXd R = adi.transpose() * B + B * adi;
    worst = std::max(worst, R.cwiseAbs().maxCoeff());
  }
  return worst;
}

Eigen::VectorXd LieAlgebra::trace_form() const {
  Eigen::VectorXd t(n_);
  for (int i = 0; i < n_; ++i) t(i) = ad_basis(i).trace();
  return t;
}

bool LieAlgebra::is_unimodular(double tol) const {
  return trace_form().cwiseAbs().maxCoeff() <= tol;
}

LieAlgebra LieAlgebra::change_basis(const Eigen::MatrixXd& T) const {
  if (T.rows() != n_ || T.cols() != n_)
    throw ValidationError("change_basis: matrix shape mismatch");
  const Eigen::MatrixXd Tinv = T.inverse();
  // [f_a, f_b] = sum T(i,a) T(j,b) c[i][j][l] e_l, then e_l in the f basis.
  std::vector<Eigen::MatrixXd> out(n_, Eigen::MatrixXd::Zero(n_, n_));
  for (int d = 0; d < n_; ++d) {
    Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(n_, n_);
    for (int l = 0; l < n_; ++l) acc += Tinv(d, l) * (T.transpose() * c_[l] * T);
    out[d] = 0.5 * (acc - acc.transpose());  // kill roundoff asymmetry
  }
  return LieAlgebra(std::move(out), labels_);
}

bool LieAlgebra::is_automorphism(const Eigen::MatrixXd& A, double tol) const {
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) {
      const Eigen::VectorXd lhs = A * bracket(Eigen::VectorXd::Unit(n_, i), Eigen::VectorXd::Unit(n_, j));
      const Eigen::VectorXd rhs = bracket(A.col(i), A.col(j));
      if ((lhs - rhs).cwiseAbs().maxCoeff() > tol) return false;
    }
  return true;
}

double LieAlgebra::derivation_residual(const Eigen::MatrixXd& D) const {
  double worst = 0.0;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) {
      const Eigen::VectorXd ei = Eigen::VectorXd::Unit(n_, i);
      const Eigen::VectorXd ej = Eigen::VectorXd::Unit(n_, j);
      const Eigen::VectorXd r = D * bracket(ei, ej) - bracket(D * ei, ej) - bracket(ei, D * ej);
      worst = std::max(worst, r.cwiseAbs().maxCoeff());
    }
  return worst;
}

}  // namespace riccilab
