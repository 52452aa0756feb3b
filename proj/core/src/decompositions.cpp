#include "riccilab/decompositions.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <utility>

#include "riccilab/linalg.hpp"

namespace riccilab {

namespace {

bool ad_is_nilpotent(const LieAlgebra& L, const Eigen::VectorXd& x, double tol) {
  const int n = L.dim();
  Eigen::MatrixXd A = L.ad(x);
  const double scale = std::max(1.0, A.norm());
  Eigen::MatrixXd P = Eigen::MatrixXd::Identity(n, n);
  for (int i = 0; i < n; ++i) P = P * A / scale;
  return P.norm() <= tol;
}

}  // namespace

Subspace derived_subalgebra(const LieAlgebra& L, const Subspace& s, double tol) {
  return bracket_span(L, s, s, tol);
}

bool is_solvable(const LieAlgebra& L, const Subspace& s, double tol) {
  Subspace cur = s;
  for (int i = 0; i <= L.dim(); ++i) {
    if (cur.dim() == 0) return true;
    Subspace next = derived_subalgebra(L, cur, tol);
    if (next.dim() >= cur.dim()) return false;
    cur = next;
  }
  return cur.dim() == 0;
}

bool is_nilpotent_subalgebra(const LieAlgebra& L, const Subspace& s, double tol) {
  Subspace cur = s;
  for (int i = 0; i <= L.dim(); ++i) {
    if (cur.dim() == 0) return true;
    Subspace next = bracket_span(L, s, cur, tol);
    if (next.dim() >= cur.dim()) return false;
    cur = next;
  }
  return cur.dim() == 0;
}

bool is_ideal(const LieAlgebra& L, const Subspace& s, double tol) {
  if (s.dim() == 0) return true;
  return bracket_containment_residual(L, Subspace::full(L.dim()), s, s) <= tol;
}

Subspace radical(const LieAlgebra& L, double tol) {
  const int n = L.dim();
  const Eigen::MatrixXd B = L.killing_form();
  const Subspace der = derived_subalgebra(L, Subspace::full(n), tol);
  // rad = null space of the map X -> B(X, [g,g]).
  const Eigen::MatrixXd constraints = der.basis().transpose() * B;
  Subspace rad(n, null_space(constraints, tol));
  if (!is_ideal(L, rad, 1e-7))
    throw ValidationError("radical: Cartan-criterion solution is not an ideal");
  if (!is_solvable(L, rad, tol))
    throw ValidationError("radical: Cartan-criterion solution is not solvable");
  return rad;
}

namespace {

bool verifies_as_nilpotent_ideal(const LieAlgebra& L, const Subspace& s, double tol) {
  if (!is_ideal(L, s, 1e-7)) return false;
  if (!is_nilpotent_subalgebra(L, s, tol)) return false;
  for (int j = 0; j < s.dim(); ++j)
    if (!ad_is_nilpotent(L, s.basis().col(j), 1e-6)) return false;
  return true;
}

double ad_power_norm(const LieAlgebra& L, const Eigen::VectorXd& x) {
  const int n = L.dim();
  const Eigen::MatrixXd A = L.ad(x);
  const double scale = std::max(1.0, A.norm());
  Eigen::MatrixXd P = Eigen::MatrixXd::Identity(n, n);
  for (int i = 0; i < n; ++i) P = P * A / scale;
  return P.norm();
}

}  // namespace

Subspace nilradical(const LieAlgebra& L, double tol) {
  const int n = L.dim();
  const Subspace rad = radical(L, tol);

  // [g, rad] always sits inside the nilradical and seeds the search.
  Subspace nil = bracket_span(L, Subspace::full(n), rad, tol);
  if (!verifies_as_nilpotent_ideal(L, nil, tol))
    throw ValidationError("nilradical: [g, rad] failed verification, residual " +
                          std::to_string(bracket_containment_residual(
                              L, Subspace::full(n), nil, nil)));

  // Extend by radical directions with nilpotent ad, cleanest first. An
  // extension is kept only if the enlarged span still verifies; a numerically
  // contaminated direction is skipped rather than allowed to poison the span.
  std::vector<std::pair<double, int>> order;
  for (int j = 0; j < rad.dim(); ++j) {
    const double pw = ad_power_norm(L, rad.basis().col(j));
    if (pw <= tol) order.emplace_back(pw, j);
  }
  std::sort(order.begin(), order.end());
  for (const auto& [pw, j] : order) {
    const Eigen::VectorXd x = rad.basis().col(j);
    if (nil.contains(x, 1e-8)) continue;
    Eigen::MatrixXd cand(n, nil.dim() + 1);
    if (nil.dim() > 0) cand.leftCols(nil.dim()) = nil.basis();
    cand.col(nil.dim()) = x;
    const Subspace enlarged = Subspace::span(cand, tol);
    if (verifies_as_nilpotent_ideal(L, enlarged, tol)) {
      nil = enlarged;
    } else if (pw <= 1e-12) {
      // A clearly nilpotent direction that cannot be consistently added
      // signals numerically degenerate input.
      throw ValidationError(
          "nilradical: nilpotent radical direction inconsistent with the candidate ideal");
    }
  }
  return nil;
}

Subspace reductive_complement(const LieAlgebra& L, const Subspace& h, double tol) {
  const int n = L.dim();
  if (h.dim() == 0) return Subspace::full(n);
  if (!is_subalgebra(L, h, 1e-8))
    throw ValidationError("reductive_complement: h is not a subalgebra");
  const Eigen::MatrixXd B = L.killing_form();
  const Eigen::MatrixXd Bh = h.basis().transpose() * B * h.basis();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(Bh);
  const double scale = std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
  if (es.eigenvalues().cwiseAbs().minCoeff() <= tol * scale)
    throw ValidationError(
        "reductive_complement: Killing form restricted to h is degenerate; "
        "canonical complement undefined");
  Subspace m(n, null_space(h.basis().transpose() * B, tol));
  if (m.dim() + h.dim() != n)
    throw ValidationError("reductive_complement: h + m does not span g");
  Eigen::MatrixXd joint(n, n);
  joint << h.basis(), m.basis();
  if (std::abs(joint.fullPivLu().determinant()) < 1e-12)
    throw ValidationError("reductive_complement: h and m overlap");
  const double res = bracket_containment_residual(L, h, m, m);
  if (res > 1e-8)
    throw ValidationError("reductive_complement: [h, m] not contained in m, residual " +
                          std::to_string(res));
  return m;
}

std::vector<Eigen::MatrixXd> derivation_space(const LieAlgebra& L, double tol) {
  const int n = L.dim();
  const int pairs = n * (n - 1) / 2;
  // Unknown D is n x n, flattened column-major: D(a,b) = d(a + n*b).
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(pairs * n, n * n);
  int row0 = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Eigen::VectorXd cij = L.bracket(Eigen::VectorXd::Unit(n, i), Eigen::VectorXd::Unit(n, j));
      // component k of D[ei,ej] - [D ei, ej] - [ei, D ej]
      for (int k = 0; k < n; ++k) {
        for (int b = 0; b < n; ++b) A(row0 + k, k + n * b) += cij(b);
        // [D ei, ej]_k = sum_l D(l,i) c[l][j][k];  [ei, D ej]_k = sum_l D(l,j) c[i][l][k]
        for (int l = 0; l < n; ++l) {
          A(row0 + k, l + n * i) -= L.component(k)(l, j);
          A(row0 + k, l + n * j) -= L.component(k)(i, l);
        }
      }
      row0 += n;
    }
  const Eigen::MatrixXd N = null_space(A, tol);
  std::vector<Eigen::MatrixXd> out;
  out.reserve(N.cols());
  for (int c = 0; c < N.cols(); ++c) {
    Eigen::MatrixXd D(n, n);
    for (int b = 0; b < n; ++b) D.col(b) = N.col(c).segment(n * b, n);
    out.push_back(D);
  }
  return out;
}

}  // namespace riccilab
