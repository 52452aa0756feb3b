#pragma once

#include <optional>

#include "riccilab/decompositions.hpp"
#include "riccilab/lie_algebra.hpp"
#include "riccilab/subspace.hpp"

namespace riccilab {

/// A homogeneous space presented infinitesimally: the algebra g, an isotropy
/// subalgebra h with B|_h negative definite, and the canonical reductive
/// complement m (Killing-orthogonal complement of h), with [h, m] in m.
class HomogeneousSpace {
public:
  /// Computes m = reductive_complement(alg, h) and validates the isotropy.
  HomogeneousSpace(LieAlgebra alg, Subspace h);

  /// Uses the supplied m-basis after verifying it spans the canonical
  /// reductive complement. Convenient when downstream data (metrics, labels)
  /// is expressed in a preferred m-frame.
  HomogeneousSpace(LieAlgebra alg, Subspace h, Subspace m);

  /// Lie group case: trivial isotropy, m = g.
  static HomogeneousSpace group(LieAlgebra alg);

  const LieAlgebra& alg() const { return alg_; }
  const Subspace& h() const { return h_; }
  const Subspace& m() const { return m_; }
  int dim_m() const { return m_.dim(); }
  int dim_g() const { return alg_.dim(); }

  /// Coordinates of the h/m projection of an ambient vector with respect to
  /// the direct sum g = h + m.
  Eigen::VectorXd m_coords(const Eigen::VectorXd& ambient) const;
  Eigen::VectorXd h_coords(const Eigen::VectorXd& ambient) const;
  Eigen::VectorXd from_m(const Eigen::VectorXd& mc) const { return m_.basis() * mc; }

  /// Row-extractor matrices: m_coords(v) = m_coords_matrix() * v, and the
  /// projector onto m along h is from_m of that.
  Eigen::MatrixXd m_coords_matrix() const { return hm_inv_.bottomRows(m_.dim()); }
  Eigen::MatrixXd h_coords_matrix() const { return hm_inv_.topRows(h_.dim()); }

  /// proj_m [x, y] in m-coordinates, for x, y in m-coordinates.
  Eigen::VectorXd bracket_m(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const;

  /// Matrix of proj_m o ad(z)|_m in m-coordinates, z ambient.
  Eigen::MatrixXd ad_m(const Eigen::VectorXd& z_ambient) const;

  /// Structure tensor of proj_m [ , ] on m: component(k)(i,j).
  const std::vector<Eigen::MatrixXd>& m_bracket_tensor() const { return cm_; }

  /// tr ad(x) over g for x = j-th m-basis vector.
  const Eigen::VectorXd& m_trace_form() const { return trace_m_; }

  /// Killing form of g restricted to the m-basis.
  const Eigen::MatrixXd& killing_m() const { return killing_m_; }

  /// -B restricted to the h-basis (positive definite by the isotropy proxy).
  const Eigen::MatrixXd& minusB_h() const { return minusB_h_; }

private:
  LieAlgebra alg_;
  Subspace h_, m_;
  Eigen::MatrixXd hm_inv_;  // inverse of [h-basis | m-basis]
  std::vector<Eigen::MatrixXd> cm_;
  Eigen::VectorXd trace_m_;
  Eigen::MatrixXd killing_m_;
  Eigen::MatrixXd minusB_h_;
};

/// An Ad(H)-invariant inner product on m, as an SPD matrix over the m-basis.
/// The extension convention downstream is gbar(h, m) = 0, gbar|_h = -B|_h.
class InvariantMetric {
public:
  InvariantMetric(const HomogeneousSpace& space, Eigen::MatrixXd G,
                  double invariance_tol = kAlgTol);

  const Eigen::MatrixXd& G() const { return G_; }
  int dim() const { return static_cast<int>(G_.rows()); }

  /// Symmetric square root and its inverse (Loewdin orthonormalization).
  const Eigen::MatrixXd& sqrt() const { return sqrt_; }
  const Eigen::MatrixXd& inv_sqrt() const { return inv_sqrt_; }
  Eigen::MatrixXd inverse() const { return inv_sqrt_ * inv_sqrt_; }

  double inner(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const {
    return x.dot(G_ * y);
  }
  double norm(const Eigen::VectorXd& x) const { return std::sqrt(inner(x, x)); }

  /// g-symmetric part of an operator on m.
  Eigen::MatrixXd sym(const Eigen::MatrixXd& E) const;
  /// Frobenius norm with transposes taken w.r.t. g.
  double op_norm(const Eigen::MatrixXd& E) const;

private:
  Eigen::MatrixXd G_, sqrt_, inv_sqrt_;
};

/// Max over the h-basis Z of || G ad_m(Z) + ad_m(Z)^T G ||.
double invariance_check(const HomogeneousSpace& space, const Eigen::MatrixXd& G);

/// Extended inner product on g: block diag(-B|_h, G) in [h-basis | m-basis]
/// coordinates, returned over the ambient basis.
Eigen::MatrixXd extended_metric_ambient(const HomogeneousSpace& space,
                                        const InvariantMetric& g);

}  // namespace riccilab
