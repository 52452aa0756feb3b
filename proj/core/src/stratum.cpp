#include "riccilab/stratum.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <limits>

#include "riccilab/decompositions.hpp"
#include "riccilab/linalg.hpp"

namespace riccilab {

namespace {

// Frobenius projection of E onto the commutant of the matrices in ops.
Eigen::MatrixXd project_commutant(const Eigen::MatrixXd& E,
                                  const std::vector<Eigen::MatrixXd>& ops) {
  if (ops.empty()) return E;
  const int d = static_cast<int>(E.rows());
  Eigen::MatrixXd sys = Eigen::MatrixXd::Zero(static_cast<int>(ops.size()) * d * d, d * d);
  int r0 = 0;
  for (const auto& Z : ops) {
    // [X, Z](a,b) = sum_l X(a,l) Z(l,b) - Z(a,l) X(l,b), X flattened column-major
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) {
        const int row = r0 + a + d * b;
        for (int l = 0; l < d; ++l) {
          sys(row, a + d * l) += Z(l, b);
          sys(row, l + d * b) -= Z(a, l);
        }
      }
    r0 += d * d;
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(sys, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > 1e-9 * std::max(1.0, sv(0))) ++rank;
  const Eigen::MatrixXd N = svd.matrixV().rightCols(d * d - rank);
  const Eigen::VectorXd e(Eigen::Map<const Eigen::VectorXd>(E.data(), d * d));
  const Eigen::VectorXd proj = N * (N.transpose() * e);
  return Eigen::Map<const Eigen::MatrixXd>(proj.data(), d, d);
}

double commutant_residual(const Eigen::MatrixXd& E, const std::vector<Eigen::MatrixXd>& ops) {
  double worst = 0.0;
  for (const auto& Z : ops) worst = std::max(worst, (E * Z - Z * E).norm());
  return worst;
}

}  // namespace

BetaData::BetaData(Eigen::MatrixXd beta, Source source, double criticality_residual)
    : beta_(std::move(beta)), crit_(criticality_residual), source_(source) {
  const int n = static_cast<int>(beta_.rows());
  if (beta_.cols() != n) throw ValidationError("BetaData: beta must be square");
  if ((beta_ - beta_.transpose()).norm() > 1e-9 * std::max(1.0, beta_.norm()))
    throw ValidationError("BetaData: beta not symmetric");
  beta_ = 0.5 * (beta_ + beta_.transpose());
  if (std::abs(beta_.trace() + 1.0) > 1e-7)
    throw ValidationError("BetaData: tr beta != -1, got " + std::to_string(beta_.trace()));
  norm2_ = beta_.squaredNorm();
  beta_plus_ = beta_ / norm2_ + Eigen::MatrixXd::Identity(n, n);
}

Eigen::VectorXd BetaData::sorted_eigenvalues() const {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(beta_);
  return es.eigenvalues();
}

std::map<double, Eigen::MatrixXd> adbeta_components(const Eigen::MatrixXd& E,
                                                    const Eigen::MatrixXd& beta_sym,
                                                    double cluster_tol) {
  const int n = static_cast<int>(beta_sym.rows());
  if (E.rows() != n || E.cols() != n)
    throw ValidationError("adbeta_components: shape mismatch");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (beta_sym + beta_sym.transpose()));
  const Eigen::MatrixXd& V = es.eigenvectors();
  const Eigen::VectorXd& b = es.eigenvalues();
  const Eigen::MatrixXd Ehat = V.transpose() * E * V;

  // cluster the set of gaps b_i - b_j
  std::vector<double> gaps;
  gaps.reserve(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) gaps.push_back(b(i) - b(j));
  std::sort(gaps.begin(), gaps.end());
  std::vector<double> reps;
  for (double gv : gaps)
    if (reps.empty() || gv - reps.back() > cluster_tol) reps.push_back(gv);
  for (double& r : reps)
    if (std::abs(r) <= cluster_tol) r = 0.0;

  std::map<double, Eigen::MatrixXd> out;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double gv = b(i) - b(j);
      double key = reps.front();
      for (double r : reps)
        if (std::abs(gv - r) < std::abs(gv - key)) key = r;
      auto it = out.find(key);
      if (it == out.end()) it = out.emplace(key, Eigen::MatrixXd::Zero(n, n)).first;
      it->second(i, j) = Ehat(i, j);
    }
  for (auto& [key, comp] : out) comp = V * comp * V.transpose();
  for (auto it = out.begin(); it != out.end();) {
    if (it->second.norm() <= 1e-13 * std::max(1.0, E.norm()) && out.size() > 1)
      it = out.erase(it);
    else
      ++it;
  }
  return out;
}

Eigen::MatrixXd q_completion(const Eigen::MatrixXd& S, const Eigen::MatrixXd& beta_sym) {
  if ((S - S.transpose()).norm() > 1e-7 * std::max(1.0, S.norm()))
    throw ValidationError("q_completion: S not symmetric");
  const auto comps = adbeta_components(S, beta_sym);
  Eigen::MatrixXd Q = Eigen::MatrixXd::Zero(S.rows(), S.cols());
  for (const auto& [lambda, comp] : comps) {
    if (lambda == 0.0)
      Q -= comp;
    else if (lambda > 0.0)
      Q -= 2.0 * comp;
  }
  return Q;
}

double lq_pairing(const Eigen::MatrixXd& S, const Eigen::MatrixXd& Q,
                  const Eigen::MatrixXd& beta) {
  return (S * (Q * beta - beta * Q)).trace();
}

BetaData projector_type_beta(const LieAlgebra& L) {
  const int n = L.dim();
  const Subspace nil = nilradical(L);
  if (nil.dim() == n)
    throw ValidationError("projector_type_beta: nilpotent algebra, label not of projector type");
  if (nil.dim() == 0)
    return BetaData(-Eigen::MatrixXd::Identity(n, n) / n, BetaData::Source::kCatalogSupplied);
  const Eigen::MatrixXd P = nil.projector();
  const Eigen::MatrixXd beta = (P - Eigen::MatrixXd::Identity(n, n)) / (n - nil.dim());
  return BetaData(beta, BetaData::Source::kCatalogSupplied);
}

BetaRestriction restrict_beta_to_m(const HomogeneousSpace& space, const BetaData& beta_g,
                                   double tol) {
  const int n = space.dim_g();
  if (beta_g.dim() != n) throw ValidationError("restrict_beta_to_m: dimension mismatch");
  const Eigen::MatrixXd& B = beta_g.beta();
  double split = 0.0;
  for (int j = 0; j < space.dim_m(); ++j)
    split = std::max(split,
                     space.h_coords(B * space.m().basis().col(j)).size() > 0
                         ? space.h_coords(B * space.m().basis().col(j)).cwiseAbs().maxCoeff()
                         : 0.0);
  for (int j = 0; j < space.h().dim(); ++j)
    split = std::max(split, space.m_coords(B * space.h().basis().col(j)).cwiseAbs().maxCoeff());
  if (split > tol)
    throw ValidationError("restrict_beta_to_m: beta does not preserve the h + m splitting, " +
                          std::to_string(split));
  const int d = space.dim_m();
  BetaRestriction out;
  out.beta_m.resize(d, d);
  for (int j = 0; j < d; ++j) out.beta_m.col(j) = space.m_coords(B * space.m().basis().col(j));
  out.beta_m = 0.5 * (out.beta_m + out.beta_m.transpose());
  out.beta_plus_m = out.beta_m / beta_g.beta_norm2() + Eigen::MatrixXd::Identity(d, d);
  return out;
}

Eigen::MatrixXd sample_parabolic_q(const HomogeneousSpace& space, const Eigen::MatrixXd& beta_m,
                                   std::mt19937_64& rng, double spread) {
  const int d = space.dim_m();
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXd R(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) R(i, j) = gauss(rng);

  std::vector<Eigen::MatrixXd> isotropy_ops;
  for (int i = 0; i < space.h().dim(); ++i)
    isotropy_ops.push_back(space.ad_m(space.h().basis().col(i)));
  R = project_commutant(R, isotropy_ops);

  Eigen::MatrixXd Qgen = Eigen::MatrixXd::Zero(d, d);
  for (const auto& [lambda, comp] : adbeta_components(R, beta_m))
    if (lambda >= 0.0) Qgen += comp;
  if (!isotropy_ops.empty()) {
    Qgen = project_commutant(Qgen, isotropy_ops);
    if (commutant_residual(Qgen, isotropy_ops) > 1e-8 * std::max(1.0, Qgen.norm()))
      throw ValidationError("sample_parabolic_q: generator does not commute with ad(h)");
  }
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  const double s = spread * uni(rng) / std::max(1.0, Qgen.norm());
  return expm(s * Qgen);
}

BetaVerifyReport verify_beta(const HomogeneousSpace& space, const InvariantMetric& g,
                             const BetaData& beta_g, int n_samples, std::mt19937_64& rng,
                             double tol) {
  BetaVerifyReport rep;
  const int n = space.dim_g();
  const int d = space.dim_m();
  const Eigen::MatrixXd& B = beta_g.beta();

  for (int j = 0; j < d; ++j) {
    const Eigen::VectorXd hc = space.h_coords(B * space.m().basis().col(j));
    if (hc.size() > 0)
      rep.splitting_residual = std::max(rep.splitting_residual, hc.cwiseAbs().maxCoeff());
  }
  for (int j = 0; j < space.h().dim(); ++j)
    rep.splitting_residual =
        std::max(rep.splitting_residual,
                 space.m_coords(B * space.h().basis().col(j)).cwiseAbs().maxCoeff());
  if (rep.splitting_residual > tol)
    throw ValidationError("verify_beta: beta does not preserve the h + m splitting, residual " +
                          std::to_string(rep.splitting_residual));

  // 1. positivity; ker beta+ matches the gbar-orthocomplement of the
  // nilradical; h sits inside the kernel.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(beta_g.beta_plus());
  rep.beta_plus_min_eig = es.eigenvalues().minCoeff();
  Eigen::MatrixXd ker_cols(n, 0);
  for (int i = 0; i < n; ++i)
    if (std::abs(es.eigenvalues()(i)) <= 1e-7) {
      ker_cols.conservativeResize(n, ker_cols.cols() + 1);
      ker_cols.col(ker_cols.cols() - 1) = es.eigenvectors().col(i);
    }
  const Subspace kernel = ker_cols.cols() == 0 ? Subspace::zero(n) : Subspace(n, ker_cols);
  const Subspace nil = nilradical(space.alg());
  const Eigen::MatrixXd gbar = extended_metric_ambient(space, g);
  Subspace nil_perp = Subspace::full(n);
  if (nil.dim() > 0) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(nil.basis().transpose() * gbar, Eigen::ComputeFullV);
    nil_perp = Subspace(n, svd.matrixV().rightCols(n - nil.dim()));
  }
  rep.kernel_vs_nilrad_orth = kernel.mutual_projection_residual(nil_perp);
  for (int j = 0; j < space.h().dim(); ++j)
    rep.h_in_kernel = std::max(rep.h_in_kernel, kernel.distance(space.h().basis().col(j)));

  // 2. derivations lie in the parabolic with trace pairing zero
  for (const auto& D : derivation_space(space.alg())) {
    for (const auto& [lambda, comp] : adbeta_components(D, B))
      if (lambda < -1e-8)
        rep.max_negative_component = std::max(rep.max_negative_component, comp.norm());
    rep.max_trace_pairing = std::max(rep.max_trace_pairing, std::abs((D * B).trace()));
  }

  // 3. Ricci estimate over sampled parabolic metrics (q = Id first)
  const BetaRestriction br = restrict_beta_to_m(space, beta_g, tol);
  const Eigen::MatrixXd beta_plus_g = B / beta_g.beta_norm2() + Eigen::MatrixXd::Identity(n, n);
  rep.samples = n_samples;
  rep.min_ricci_pairing = std::numeric_limits<double>::infinity();
  const Eigen::MatrixXd Mb = space.m().basis();
  for (int s = 0; s < n_samples; ++s) {
    const Eigen::MatrixXd q =
        s == 0 ? Eigen::MatrixXd::Identity(d, d) : sample_parabolic_q(space, br.beta_m, rng);
    const Eigen::MatrixXd qinv = q.inverse();
    Eigen::MatrixXd Gq = qinv.transpose() * g.G() * qinv;
    Gq = 0.5 * (Gq + Gq.transpose());
    const InvariantMetric gq(space, Gq, 1e-6);
    const Eigen::MatrixXd ric = ricci_operator(space, gq);
    const MeanCurvature mc = mean_curvature(space, gq);
    const double pairing = (ric * q * br.beta_plus_m * qinv).trace() + 2.0 * mc.h;
    rep.min_ricci_pairing = std::min(rep.min_ricci_pairing, pairing);

    // extend q by the identity on h
    Eigen::MatrixXd q_ext = Mb * q * space.m_coords_matrix();
    if (space.h().dim() > 0) q_ext += space.h().basis() * space.h_coords_matrix();
    const Eigen::MatrixXd Dcand = q_ext * beta_plus_g * q_ext.inverse();
    if (space.alg().derivation_residual(Dcand) <= 1e-8) {
      ++rep.equality_cases;
      rep.max_equality_gap = std::max(rep.max_equality_gap, std::abs(pairing));
    }
  }

  rep.passed = rep.beta_plus_min_eig >= -1e-9 && rep.kernel_vs_nilrad_orth <= 1e-6 &&
               rep.h_in_kernel <= 1e-6 && rep.max_negative_component <= 1e-8 &&
               rep.max_trace_pairing <= 1e-8 && rep.min_ricci_pairing >= -1e-7 &&
               rep.max_equality_gap <= 1e-7;
  return rep;
}

}  // namespace riccilab
