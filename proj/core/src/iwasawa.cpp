#include "riccilab/iwasawa.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <algorithm>

namespace riccilab {

namespace {

struct JointSpace {
  Eigen::MatrixXd basis;        // columns, coordinates in the B_theta-orthonormal frame
  std::vector<double> weights;  // eigenvalue under each processed ad(H_i)
};

bool lex_positive(const Eigen::VectorXd& v, double tol) {
  for (int i = 0; i < v.size(); ++i) {
    if (v(i) > tol) return true;
    if (v(i) < -tol) return false;
  }
  return false;
}

}  // namespace

IwasawaData iwasawa_decomposition(const LieAlgebra& L, const Eigen::MatrixXd& theta, double tol) {
  const int n = L.dim();
  if (theta.rows() != n || theta.cols() != n)
    throw ValidationError("iwasawa: theta shape mismatch");
  if ((theta * theta - Eigen::MatrixXd::Identity(n, n)).norm() > 1e-8)
    throw ValidationError("iwasawa: theta is not an involution");
  if (!L.is_automorphism(theta, 1e-8))
    throw ValidationError("iwasawa: theta is not a Lie algebra automorphism");

  const Eigen::MatrixXd B = L.killing_form();
  {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(B);
    const double scale = std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
    if (es.eigenvalues().cwiseAbs().minCoeff() <= 1e-8 * scale)
      throw ValidationError("iwasawa: Killing form degenerate; algebra not semisimple");
  }
  const Eigen::MatrixXd Btheta = -B * theta;
  {
    const double asym = (Btheta - Btheta.transpose()).norm();
    if (asym > 1e-8 * std::max(1.0, Btheta.norm()))
      throw ValidationError("iwasawa: B_theta not symmetric");
    Eigen::LLT<Eigen::MatrixXd> llt(0.5 * (Btheta + Btheta.transpose()));
    if (llt.info() != Eigen::Success)
      throw ValidationError("iwasawa: B_theta is not positive definite (theta not Cartan)");
  }

  // Work in a B_theta-orthonormal frame: hat(x) = R x with R^T R = B_theta.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> bes(0.5 * (Btheta + Btheta.transpose()));
  const Eigen::MatrixXd R = bes.operatorSqrt();
  const Eigen::MatrixXd Rinv = bes.operatorInverseSqrt();

  // Eigenspaces of theta. In the hat frame theta is symmetric and orthogonal.
  const Eigen::MatrixXd theta_hat = R * theta * Rinv;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tes(0.5 * (theta_hat + theta_hat.transpose()));
  Eigen::MatrixXd k_hat(n, 0), p_hat(n, 0);
  for (int i = 0; i < n; ++i) {
    const double ev = tes.eigenvalues()(i);
    if (ev > 0) {
      k_hat.conservativeResize(n, k_hat.cols() + 1);
      k_hat.col(k_hat.cols() - 1) = tes.eigenvectors().col(i);
    } else {
      p_hat.conservativeResize(n, p_hat.cols() + 1);
      p_hat.col(p_hat.cols() - 1) = tes.eigenvectors().col(i);
    }
  }
  const Subspace k = Subspace::span(Rinv * k_hat, tol);

  IwasawaData out;
  out.k = k;
  if (p_hat.cols() == 0) {
    out.a = Subspace::zero(n);
    out.n = Subspace::zero(n);
    return out;
  }
  const Subspace p = Subspace::span(Rinv * p_hat, tol);

  // Greedy maximal abelian subalgebra of p: extend until the centralizer of
  // a inside p equals a. Seeded from the projection of the first standard
  // basis vector meeting p, signs oriented, so the output is deterministic.
  auto orient = [](Eigen::VectorXd v) {
    for (int i = 0; i < v.size(); ++i) {
      if (std::abs(v(i)) > 1e-9) {
        if (v(i) < 0) v = -v;
        break;
      }
    }
    return v;
  };
  const Eigen::MatrixXd Pp = p.projector();
  Eigen::MatrixXd a_cols(n, 1);
  {
    Eigen::VectorXd seed;
    for (int i = 0; i < n; ++i) {
      const Eigen::VectorXd w = Pp * Eigen::VectorXd::Unit(n, i);
      if (w.norm() > 0.3) {
        seed = w;
        break;
      }
    }
    if (seed.size() == 0) seed = p.basis().col(0);
    a_cols.col(0) = orient(seed / seed.norm());
  }
  for (;;) {
    const Subspace a_cur(n, a_cols);
    // centralizer of a within p: solve [X, a_i] = 0 for X in p-coordinates.
    Eigen::MatrixXd sys(n * a_cur.dim(), p.dim());
    for (int j = 0; j < p.dim(); ++j) {
      for (int i = 0; i < a_cur.dim(); ++i)
        sys.block(n * i, j, n, 1) = L.bracket(p.basis().col(j), a_cur.basis().col(i));
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(sys, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double cutoff = 1e-8 * std::max(1.0, sv.size() > 0 ? sv(0) : 0.0);
    int rank = 0;
    for (int i = 0; i < sv.size(); ++i)
      if (sv(i) > cutoff) ++rank;
    const Eigen::MatrixXd cz = p.basis() * svd.matrixV().rightCols(p.dim() - rank);
    bool extended = false;
    for (int j = 0; j < cz.cols(); ++j) {
      Eigen::VectorXd v = cz.col(j);
      for (int c = 0; c < a_cols.cols(); ++c) v -= a_cols.col(c) * a_cols.col(c).dot(v);
      if (v.norm() > 1e-7) {
        a_cols.conservativeResize(n, a_cols.cols() + 1);
        a_cols.col(a_cols.cols() - 1) = orient(v / v.norm());
        extended = true;
        break;
      }
    }
    if (!extended) break;
  }
  const Subspace a(n, a_cols);
  out.a = a;

  // Joint eigenspaces of { ad(H_i) } on g, computed in the hat frame where
  // each ad(H), H in p, is symmetric.
  std::vector<JointSpace> spaces{{Eigen::MatrixXd::Identity(n, n), {}}};
  for (int i = 0; i < a.dim(); ++i) {
    const Eigen::MatrixXd adH_hat = R * L.ad(a.basis().col(i)) * Rinv;
    std::vector<JointSpace> next;
    for (const auto& sp : spaces) {
      const Eigen::MatrixXd restr = sp.basis.transpose() * 0.5 * (adH_hat + adH_hat.transpose()) * sp.basis;
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(restr);
      // cluster eigenvalues
      int start = 0;
      const auto& ev = es.eigenvalues();
      for (int idx = 1; idx <= ev.size(); ++idx) {
        if (idx == ev.size() || ev(idx) - ev(start) > 1e-6) {
          JointSpace js;
          js.basis = sp.basis * es.eigenvectors().middleCols(start, idx - start);
          js.weights = sp.weights;
          js.weights.push_back(ev.segment(start, idx - start).mean());
          next.push_back(std::move(js));
          start = idx;
        }
      }
    }
    spaces = std::move(next);
  }

  Eigen::MatrixXd n_cols(n, 0);
  for (const auto& sp : spaces) {
    Eigen::VectorXd lambda(a.dim());
    for (int i = 0; i < a.dim(); ++i) lambda(i) = sp.weights[i];
    if (lambda.size() == 0 || lambda.cwiseAbs().maxCoeff() <= 1e-7) continue;  // centralizer part
    RestrictedRoot root;
    root.functional = lambda;
    root.space = Subspace::span(Rinv * sp.basis, tol);
    if (lex_positive(lambda, 1e-7)) {
      const int c0 = static_cast<int>(n_cols.cols());
      n_cols.conservativeResize(n, c0 + root.space.dim());
      n_cols.middleCols(c0, root.space.dim()) = root.space.basis();
    }
    out.roots.push_back(std::move(root));
  }
  out.n = n_cols.cols() == 0 ? Subspace::zero(n) : Subspace::span(n_cols, tol);

  // Verification: g = k + a + n, a abelian, n closed with positive roots,
  // theta maps l_lambda to l_{-lambda}.
  if (k.dim() + a.dim() + out.n.dim() != n)
    throw ValidationError("iwasawa: k + a + n does not span g");
  if (a.dim() > 0 && bracket_span(L, a, a, tol).dim() != 0)
    throw ValidationError("iwasawa: a is not abelian");
  if (out.n.dim() > 0 && bracket_containment_residual(L, out.n, out.n, out.n) > 1e-7)
    throw ValidationError("iwasawa: n is not closed under the bracket");
  for (const auto& root : out.roots) {
    Eigen::VectorXd neg = -root.functional;
    bool found = false;
    for (const auto& other : out.roots) {
      if ((other.functional - neg).norm() < 1e-6) {
        const Subspace theta_img = Subspace::span(theta * root.space.basis(), tol);
        if (theta_img.mutual_projection_residual(other.space) > 1e-6)
          throw ValidationError("iwasawa: theta does not map root space to its negative");
        found = true;
        break;
      }
    }
    if (!found) throw ValidationError("iwasawa: root set is not symmetric");
  }
  return out;
}

double root_space_residual(const LieAlgebra& L, const IwasawaData& data) {
  double worst = 0.0;
  for (const auto& root : data.roots) {
    for (int i = 0; i < data.a.dim(); ++i) {
      const Eigen::VectorXd H = data.a.basis().col(i);
      for (int j = 0; j < root.space.dim(); ++j) {
        const Eigen::VectorXd X = root.space.basis().col(j);
        const Eigen::VectorXd r = L.bracket(H, X) - root.functional(i) * X;
        worst = std::max(worst, r.norm() / std::max(1.0, X.norm()));
      }
    }
  }
  return worst;
}

}  // namespace riccilab
