#include "riccilab/homogeneous_space.hpp"

#include <Eigen/Eigenvalues>

namespace riccilab {

HomogeneousSpace::HomogeneousSpace(LieAlgebra alg, Subspace h)
    : HomogeneousSpace(std::move(alg), std::move(h), Subspace()) {}

HomogeneousSpace::HomogeneousSpace(LieAlgebra alg, Subspace h, Subspace m)
    : alg_(std::move(alg)), h_(std::move(h)), m_(Subspace::zero(alg_.dim())) {
  const Subspace canonical = reductive_complement(alg_, h_);
  if (m.ambient_dim() == 0) {
    m_ = canonical;
  } else {
    if (m.mutual_projection_residual(canonical) > 1e-8)
      throw ValidationError(
          "HomogeneousSpace: supplied m is not the canonical reductive complement");
    m_ = std::move(m);
  }
  const int n = alg_.dim();
  if (h_.dim() > 0) {
    const Eigen::MatrixXd Bh = h_.basis().transpose() * alg_.killing_form() * h_.basis();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(Bh);
    if (es.eigenvalues().maxCoeff() >= -kAlgTol)
      throw ValidationError(
          "HomogeneousSpace: B|_h is not negative definite (isotropy not "
          "compactly embedded)");
  }
  Eigen::MatrixXd joint(n, n);
  if (h_.dim() > 0)
    joint << h_.basis(), m_.basis();
  else
    joint = m_.basis();
  hm_inv_ = joint.inverse();

  const int d = m_.dim();
  cm_.assign(d, Eigen::MatrixXd::Zero(d, d));
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      const Eigen::VectorXd br = alg_.bracket(m_.basis().col(i), m_.basis().col(j));
      const Eigen::VectorXd mc = (hm_inv_ * br).tail(d);
      for (int k = 0; k < d; ++k) {
        cm_[k](i, j) = mc(k);
        cm_[k](j, i) = -mc(k);
      }
    }
  trace_m_.resize(d);
  for (int j = 0; j < d; ++j) trace_m_(j) = alg_.ad(m_.basis().col(j)).trace();
  killing_m_ = m_.basis().transpose() * alg_.killing_form() * m_.basis();
  minusB_h_ = h_.dim() > 0
                  ? Eigen::MatrixXd(-h_.basis().transpose() * alg_.killing_form() * h_.basis())
                  : Eigen::MatrixXd(0, 0);
}

HomogeneousSpace HomogeneousSpace::group(LieAlgebra alg) {
  const int n = alg.dim();
  return HomogeneousSpace(std::move(alg), Subspace::zero(n));
}

Eigen::VectorXd HomogeneousSpace::m_coords(const Eigen::VectorXd& ambient) const {
  return (hm_inv_ * ambient).tail(m_.dim());
}

Eigen::VectorXd HomogeneousSpace::h_coords(const Eigen::VectorXd& ambient) const {
  return (hm_inv_ * ambient).head(h_.dim());
}

Eigen::VectorXd HomogeneousSpace::bracket_m(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const {
  return m_coords(alg_.bracket(m_.basis() * x, m_.basis() * y));
}

Eigen::MatrixXd HomogeneousSpace::ad_m(const Eigen::VectorXd& z_ambient) const {
  const int d = m_.dim();
  Eigen::MatrixXd A(d, d);
  const Eigen::MatrixXd adz = alg_.ad(z_ambient);
  for (int j = 0; j < d; ++j) A.col(j) = m_coords(adz * m_.basis().col(j));
  return A;
}

InvariantMetric::InvariantMetric(const HomogeneousSpace& space, Eigen::MatrixXd G,
                                 double invariance_tol)
    : G_(std::move(G)) {
  if (G_.rows() != space.dim_m() || G_.cols() != space.dim_m())
    throw ValidationError("InvariantMetric: shape does not match dim m");
  if ((G_ - G_.transpose()).norm() > 1e-10 * std::max(1.0, G_.norm()))
    throw ValidationError("InvariantMetric: G not symmetric");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(G_);
  if (es.eigenvalues().minCoeff() <= 0.0)
    throw ValidationError("InvariantMetric: G not positive definite");
  sqrt_ = es.operatorSqrt();
  inv_sqrt_ = es.operatorInverseSqrt();
  const double res = invariance_check(space, G_);
  if (res > invariance_tol)
    throw ValidationError("InvariantMetric: not Ad(H)-invariant, residual " +
                          std::to_string(res));
}

Eigen::MatrixXd InvariantMetric::sym(const Eigen::MatrixXd& E) const {
  // transpose w.r.t. g: E^* = G^{-1} E^T G
  return 0.5 * (E + inverse() * E.transpose() * G_);
}

double InvariantMetric::op_norm(const Eigen::MatrixXd& E) const {
  // ||E||_g^2 = tr(E E^*) with the g-transpose
  const Eigen::MatrixXd Estar = inverse() * E.transpose() * G_;
  return std::sqrt(std::max(0.0, (E * Estar).trace()));
}

double invariance_check(const HomogeneousSpace& space, const Eigen::MatrixXd& G) {
  double worst = 0.0;
  for (int i = 0; i < space.h().dim(); ++i) {
    const Eigen::MatrixXd A = space.ad_m(space.h().basis().col(i));
    worst = std::max(worst, (G * A + A.transpose() * G).cwiseAbs().maxCoeff());
  }
  return worst;
}

Eigen::MatrixXd extended_metric_ambient(const HomogeneousSpace& space,
                                        const InvariantMetric& g) {
  const int n = space.dim_g();
  const int k = space.h().dim();
  const int d = space.dim_m();
  Eigen::MatrixXd block = Eigen::MatrixXd::Zero(n, n);
  if (k > 0) block.topLeftCorner(k, k) = space.minusB_h();
  block.bottomRightCorner(d, d) = g.G();
  // gbar(x, y) = block(coords(x), coords(y)) with coords = [h-basis | m-basis]^{-1}
  Eigen::MatrixXd joint(n, n);
  if (k > 0)
    joint << space.h().basis(), space.m().basis();
  else
    joint = space.m().basis();
  const Eigen::MatrixXd Jinv = joint.inverse();
  return Jinv.transpose() * block * Jinv;
}

}  // namespace riccilab
