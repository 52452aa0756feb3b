#include "riccilab/audit.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <cmath>

namespace riccilab {

AuditReport invariant_audit(const HomogeneousSpace& space, const BetaData& beta_g,
                            const Trajectory& traj, const FlowParams& params) {
  AuditReport rep;
  const auto& S = traj.states;
  const auto& M = traj.monitors;
  const size_t N = M.size();
  if (N < 3) {
    rep.detail = "trajectory too short to audit";
    return rep;
  }
  const double dt = params.dt;
  const double trbp = traj.tr_beta_plus_m;

  double h_scale = 0.0, c1_scale = 0.0, c2_scale = 0.0, e_scale = 0.0, w_scale = 0.0;
  for (const auto& m : M) {
    h_scale = std::max(h_scale, std::abs(m.h));
    c1_scale = std::max(c1_scale, std::abs(m.res_ineq_c1));
    c2_scale = std::max(c2_scale, std::abs(m.res_ineq_c2));
    e_scale = std::max(e_scale, std::abs(m.ric_HH * trbp) + 4.0 * m.h * m.h);
    w_scale = std::max(w_scale, std::abs(m.w_beta));
  }

  // (a), (b): evolution equations against finite differences
  for (size_t i = 1; i + 1 < N; ++i) {
    const Eigen::VectorXd Hfd = (M[i + 1].H - M[i - 1].H) / (2.0 * dt);
    const Eigen::VectorXd Hformula = -2.0 * S[i].Lam * M[i].H;
    rep.max_fd_error_H = std::max(rep.max_fd_error_H, (Hfd - Hformula).norm());
    rep.max_fd_error_hprime =
        std::max(rep.max_fd_error_hprime, std::abs(M[i].h_prime_fd - M[i].h_prime_formula));
    const double hsec_fd = (M[i + 1].h - 2.0 * M[i].h + M[i - 1].h) / (dt * dt);
    const double LamH2 = (S[i].Lam * M[i].H).dot(S[i].G * (S[i].Lam * M[i].H));
    const double hsec_formula =
        2.0 * LamH2 - M[i].trL * M[i].h_prime_formula - 2.0 * M[i].h - M[i].ric_HH;
    rep.max_fd_error_hsecond = std::max(rep.max_fd_error_hsecond, std::abs(hsec_fd - hsec_formula));
  }

  // (c), (e): unconditional inequalities
  rep.min_c1 = std::numeric_limits<double>::infinity();
  rep.min_c2 = std::numeric_limits<double>::infinity();
  rep.min_e = std::numeric_limits<double>::infinity();
  for (const auto& m : M) {
    rep.min_c1 = std::min(rep.min_c1, m.res_ineq_c1);
    rep.min_c2 = std::min(rep.min_c2, m.res_ineq_c2);
    rep.min_e = std::min(rep.min_e, m.res_e);
  }

  // (d): discrete monotonicity of w under the maximum-principle hypothesis
  rep.min_conditional_w_increment = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i + 1 < N; ++i) {
    const bool hyp = trbp >= 2.0 * M[i].h - 1e-12 && trbp >= 2.0 * M[i + 1].h - 1e-12;
    if (!hyp) continue;
    ++rep.conditional_steps;
    rep.min_conditional_w_increment =
        std::min(rep.min_conditional_w_increment, M[i + 1].w_beta - M[i].w_beta);
  }
  if (rep.conditional_steps == 0) rep.min_conditional_w_increment = 0.0;

  // (f): rigidity probe for constant w
  double wmin = M[0].w_beta, wmax = M[0].w_beta;
  for (const auto& m : M) {
    wmin = std::min(wmin, m.w_beta);
    wmax = std::max(wmax, m.w_beta);
  }
  const double eps_w = 1e-7 * (1.0 + w_scale);
  rep.w_constant = (wmax - wmin) <= eps_w;
  if (rep.w_constant) {
    const int n = space.dim_g();
    const Eigen::MatrixXd beta_plus_g =
        beta_g.beta() / beta_g.beta_norm2() + Eigen::MatrixXd::Identity(n, n);
    rep.beta_plus_derivation_residual = space.alg().derivation_residual(beta_plus_g);
    const BetaRestriction br = restrict_beta_to_m(space, beta_g);
    rep.max_q_beta_commutator = 0.0;
    for (const auto& st : S)
      rep.max_q_beta_commutator = std::max(
          rep.max_q_beta_commutator, (st.q * br.beta_m - br.beta_m * st.q).norm());
  }

  const double eps_c1 = 1e-7 * (1.0 + c1_scale);
  const double eps_c2 = 1e-7 * (1.0 + c2_scale);
  const double eps_e = 1e-7 * (1.0 + e_scale);
  const double fd_gate = 1e3 * dt * dt * (1.0 + h_scale);
  rep.passed = traj.completed && rep.min_c1 >= -eps_c1 && rep.min_c2 >= -eps_c2 &&
               rep.min_e >= -eps_e &&
               rep.min_conditional_w_increment >= -1e-7 * (1.0 + w_scale) &&
               rep.max_fd_error_hprime <= fd_gate && rep.max_fd_error_hsecond <= 1e4 * dt * (1.0 + h_scale);
  if (!traj.completed) rep.detail = traj.halt_reason;
  return rep;
}

void parabolic_factor(const Eigen::MatrixXd& M, const Eigen::MatrixXd& beta_m,
                      Eigen::MatrixXd& U, Eigen::MatrixXd& k) {
  const int d = static_cast<int>(M.rows());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(beta_m);
  // descending eigenvalues: upper triangular matrices then have nonnegative
  // ad(beta) components
  Eigen::MatrixXd V(d, d);
  for (int i = 0; i < d; ++i) V.col(i) = es.eigenvectors().col(d - 1 - i);
  const Eigen::MatrixXd Mv = V.transpose() * M * V;
  // RQ decomposition via the exchange trick: M = P R~^T P  *  P Q~^T
  Eigen::MatrixXd P = Eigen::MatrixXd::Zero(d, d);
  for (int i = 0; i < d; ++i) P(i, d - 1 - i) = 1.0;
  const Eigen::MatrixXd A = Mv.transpose() * P;  // = Q~ R~
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(A);
  Eigen::MatrixXd Qt = qr.householderQ();
  Eigen::MatrixXd Rt = Qt.transpose() * A;
  // normalize signs so the triangular factor has positive diagonal
  for (int i = 0; i < d; ++i) {
    if (Rt(i, i) < 0) {
      Rt.row(i) *= -1.0;
      Qt.col(i) *= -1.0;
    }
  }
  const Eigen::MatrixXd Uv = P * Rt.transpose() * P;
  const Eigen::MatrixXd kv = P * Qt.transpose();
  U = V * Uv * V.transpose();
  k = V * kv * V.transpose();
}

ReplayReport conjugation_replay(const HomogeneousSpace& space, const BetaData& beta_g,
                                const Trajectory& traj, const Eigen::MatrixXd& A,
                                const FlowParams& params) {
  ReplayReport rep;
  if (traj.states.empty()) return rep;
  const int d = space.dim_m();
  if (!space.alg().is_automorphism(A, 1e-8))
    throw ValidationError("conjugation_replay: A is not an automorphism");
  for (int j = 0; j < space.h().dim(); ++j)
    if (!space.h().contains(A * space.h().basis().col(j), 1e-8))
      throw ValidationError("conjugation_replay: A does not preserve h");
  for (int j = 0; j < d; ++j)
    if (!space.m().contains(A * space.m().basis().col(j), 1e-8))
      throw ValidationError("conjugation_replay: A does not preserve m");
  Eigen::MatrixXd A_m(d, d);
  for (int j = 0; j < d; ++j) A_m.col(j) = space.m_coords(A * space.m().basis().col(j));
  const Eigen::MatrixXd A_m_inv = A_m.inverse();

  const BetaRestriction br = restrict_beta_to_m(space, beta_g);

  // initial data for the replay: factor A q0 through the parabolic subgroup
  Eigen::MatrixXd U0, k0;
  parabolic_factor(A_m * traj.states.front().q, br.beta_m, U0, k0);
  FlowState init;
  init.t = traj.states.front().t;
  init.G = A_m_inv.transpose() * traj.states.front().G * A_m_inv;
  init.G = 0.5 * (init.G + init.G.transpose());
  init.Lam = A_m * traj.states.front().Lam * A_m_inv;
  init.q = U0;

  FlowParams p2 = params;
  p2.t_end = traj.states.back().t - traj.states.front().t;
  const Trajectory replay = integrate(space, beta_g, init, p2);
  if (!replay.completed)
    throw ValidationError("conjugation_replay: replay halted: " + replay.halt_reason);

  const size_t N = std::min(traj.states.size(), replay.states.size());
  for (size_t i = 0; i < N; ++i) {
    const Eigen::MatrixXd Gexp = A_m_inv.transpose() * traj.states[i].G * A_m_inv;
    const Eigen::MatrixXd Lexp = A_m * traj.states[i].Lam * A_m_inv;
    rep.max_state_gap = std::max(rep.max_state_gap, (replay.states[i].G - Gexp).norm());
    rep.max_state_gap = std::max(rep.max_state_gap, (replay.states[i].Lam - Lexp).norm());

    const Eigen::MatrixXd B = replay.states[i].q.inverse() * A_m * traj.states[i].q;
    rep.max_discrepancy_orth = std::max(
        rep.max_discrepancy_orth,
        (B.transpose() * B - Eigen::MatrixXd::Identity(d, d)).norm());
    if ((B * br.beta_m - br.beta_m * B).norm() <= 1e-9 * std::max(1.0, br.beta_m.norm())) {
      ++rep.commuting_steps;
      rep.max_l_gap_commuting = std::max(
          rep.max_l_gap_commuting,
          std::abs(replay.monitors[i].l_beta - traj.monitors[i].l_beta));
    }
  }
  rep.passed = rep.max_state_gap <= 1e-9 * (1.0 + traj.states.front().G.norm()) &&
               rep.max_l_gap_commuting <= 1e-9;
  return rep;
}

}  // namespace riccilab
