#pragma once

#include "riccilab/flow.hpp"

namespace riccilab {

/// Per-trajectory audit of the lemma-level identities and inequalities:
/// (a) evolution of the mean curvature vector and of h against centered
///     finite differences,
/// (b) the second-order evolution of h,
/// (c) the two unconditional inequalities (parabolic pairing and Ricci-beta
///     pairing),
/// (d) monotonicity of w_beta wherever tr beta+ >= 2h,
/// (e) the Cauchy-Schwarz curvature estimate,
/// (f) the rigidity probe when w_beta is constant over the window.
struct AuditReport {
  double max_fd_error_H = 0.0;       // |H' + 2 Lam H| against centered differences
  double max_fd_error_hprime = 0.0;  // |h'_formula - h'_fd| at interior points
  double max_fd_error_hsecond = 0.0;
  double min_c1 = 0.0;
  double min_c2 = 0.0;
  double min_e = 0.0;
  double min_conditional_w_increment = 0.0;
  int conditional_steps = 0;
  bool w_constant = false;
  double beta_plus_derivation_residual = -1.0;  // filled when the probe fires
  double max_q_beta_commutator = -1.0;
  bool passed = false;
  std::string detail;
};

AuditReport invariant_audit(const HomogeneousSpace& space, const BetaData& beta_g,
                            const Trajectory& traj, const FlowParams& params);

/// Replays a trajectory through an automorphism A preserving h and m:
/// integrates from the pushed-forward initial data and checks that states
/// conjugate (G -> A^{-T} G A^{-1}, Lam -> A Lam A^{-1}) and that l_beta is
/// unchanged at the steps where the orthogonal discrepancy between the two
/// parabolic lifts commutes with beta.
struct ReplayReport {
  double max_state_gap = 0.0;          // conjugation mismatch across the window
  double max_l_gap_commuting = 0.0;    // |l - l~| where the discrepancy commutes
  double max_discrepancy_orth = 0.0;   // ||B^T B - Id|| for B = q~^{-1} A q
  int commuting_steps = 0;
  bool passed = false;
};

ReplayReport conjugation_replay(const HomogeneousSpace& space, const BetaData& beta_g,
                                const Trajectory& traj, const Eigen::MatrixXd& A,
                                const FlowParams& params);

/// Factorization M = U k with U in the parabolic subgroup of beta (upper
/// triangular in the descending eigenbasis) and k orthogonal.
void parabolic_factor(const Eigen::MatrixXd& M, const Eigen::MatrixXd& beta_m,
                      Eigen::MatrixXd& U, Eigen::MatrixXd& k);

}  // namespace riccilab
