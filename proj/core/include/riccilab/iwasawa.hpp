#pragma once

#include <utility>
#include <vector>

#include "riccilab/lie_algebra.hpp"
#include "riccilab/subspace.hpp"

namespace riccilab {

/// One restricted root: the functional on a (as the vector of its values on
/// the chosen a-basis) together with its root space.
struct RestrictedRoot {
  Eigen::VectorXd functional;  // values on the a-basis
  Subspace space;
};

/// Iwasawa data g = k + a + n for a semisimple algebra with a Cartan
/// involution: k the +1 eigenspace, a maximal abelian in the -1 eigenspace,
/// n the sum of the positive restricted root spaces.
struct IwasawaData {
  Subspace k, a, n;
  std::vector<RestrictedRoot> roots;  // all nonzero roots, positive and negative

  /// a + n, the solvable part acting with cohomogeneity one downstream.
  Subspace an() const { return a.dim() == 0 ? n : (n.dim() == 0 ? a : a.direct_sum(n)); }
};

/// Checks theta^2 = Id, theta an automorphism, and B_theta(X,Y) = -B(X,theta Y)
/// positive definite; throws otherwise. Also throws if B is degenerate
/// (non-semisimple input).
///
/// Positivity of roots is lexicographic on the coefficient vector with
/// respect to the a-basis. A compact algebra degenerates gracefully:
/// a = 0, n = 0, empty root list.
IwasawaData iwasawa_decomposition(const LieAlgebra& L, const Eigen::MatrixXd& theta,
                                  double tol = kAlgTol);

/// Max residual of [H, X] = lambda(H) X over the root list; used by tests.
double root_space_residual(const LieAlgebra& L, const IwasawaData& data);

}  // namespace riccilab
