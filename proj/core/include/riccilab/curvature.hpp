#pragma once

#include "riccilab/homogeneous_space.hpp"

namespace riccilab {

/// Mean curvature data: the vector H in m-coordinates with g(H, X) = tr ad(X)
/// for all X in m, and h = g(H, H) / 2. H = 0 iff the algebra is unimodular.
struct MeanCurvature {
  Eigen::VectorXd H;  // m-coordinates
  double h = 0.0;
};

MeanCurvature mean_curvature(const HomogeneousSpace& space, const InvariantMetric& g);

/// Ricci operator on m (m-coordinates, g-symmetric), assembled from the
/// structure constants over a g-orthonormal frame:
///   Ric = M - B/2 - S(ad_m H),
/// with M the bracket-norm part, B the Killing form of g restricted to m,
/// and S the g-symmetrization. Requires an invariant metric.
Eigen::MatrixXd ricci_operator(const HomogeneousSpace& space, const InvariantMetric& g);

/// Ric + S(ad_m H): the part of the Ricci operator orthogonal to the orbit
/// of the automorphism action. Satisfies tr S(ad_m H) = 2h.
Eigen::MatrixXd modified_ricci(const HomogeneousSpace& space, const InvariantMetric& g);

double scalar_curvature(const HomogeneousSpace& space, const InvariantMetric& g);

/// Independent curvature oracle for trivial isotropy: Levi-Civita connection
/// coefficients from the Koszul formula on left-invariant fields, curvature
/// tensor by definition, Ricci by contraction. Unoptimized by design; pins
/// sign conventions for ricci_operator.
Eigen::MatrixXd ricci_koszul_oracle(const HomogeneousSpace& space, const InvariantMetric& g);

/// Standardness: whether the gbar-orthogonal complement of the nilradical is
/// a subalgebra. Returns the bracket-closure residual of that complement.
struct StandardnessReport {
  bool standard = false;
  double residual = 0.0;
  int nilradical_dim = 0;
};
StandardnessReport standardness_check(const HomogeneousSpace& space, const InvariantMetric& g,
                                      double tol = 1e-8);

/// The bilinear form C(X,Y) = tr (th(X)+th(X)^T)(th(Y)+th(Y)^T) / 4 on a
/// supplied Levi factor, where th(X) = ad(X)|_radical and transposes are
/// taken w.r.t. the extended metric restricted to the radical. The Levi
/// factor and radical are verified before use.
Eigen::MatrixXd chi_form(const HomogeneousSpace& space, const InvariantMetric& g,
                         const Subspace& levi);

/// Trace of the shape operator at the base point of the codimension-one
/// orbit of the subalgebra gbar, via Killing-field connection sums. The
/// normal orientation is fixed by g(H, N) >= 0 when H != 0, otherwise by the
/// sign of the first nonvanishing coordinate.
double orbit_mean_curvature(const HomogeneousSpace& space, const InvariantMetric& g,
                            const Subspace& gbar);

/// Pushforward of the metric by an automorphism A of g preserving h and m:
/// (A . g)(x, y) = g(A^{-1} x, A^{-1} y) on m. Also exposes the m-block of A
/// for shape-operator conjugation in flow tests.
struct Pushforward {
  InvariantMetric metric;
  Eigen::MatrixXd A_m;  // m-block of A in m-coordinates
};
Pushforward pushforward_by_automorphism(const HomogeneousSpace& space, const InvariantMetric& g,
                                        const Eigen::MatrixXd& A);

}  // namespace riccilab
