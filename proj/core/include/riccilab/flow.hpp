#pragma once

#include <functional>
#include <string>
#include <vector>

#include "riccilab/curvature.hpp"
#include "riccilab/homogeneous_space.hpp"
#include "riccilab/stratum.hpp"

namespace riccilab {

/// State of the orbit-Einstein system along the normal geodesic: the metric
/// G on m, the shape operator Lam (G-symmetric), and the parabolic lift q
/// with G = q^{-T} q^{-1} in the gbar-orthonormal frame.
struct FlowState {
  double t = 0.0;
  Eigen::MatrixXd G;
  Eigen::MatrixXd Lam;
  Eigen::MatrixXd q;
};

/// Scalar diagnostics recorded at every step.
struct Monitors {
  double h = 0.0;
  double h_prime_formula = 0.0;  // -g(Lam H, H)
  double h_prime_fd = 0.0;       // centered difference, one-sided at the ends
  double trL = 0.0;
  double intTrL = 0.0;           // trapezoidal accumulation of tr L
  double l_beta = 0.0;           // tr(Lam q beta+|_m q^{-1})
  double w_beta = 0.0;           // l_beta * exp(intTrL)
  double res_lift = 0.0;         // ||G - q^{-T} q^{-1}||
  double res_sym = 0.0;          // ||G Lam - Lam^T G||
  double res_ineq_c1 = 0.0;      // tr(S [Q, beta]) at the lift step
  double res_ineq_c2 = 0.0;      // tr(Ric q beta+ q^{-1}) + 2h
  double res_e = 0.0;            // -ric(H,H) tr beta+ - 4 h^2
  Eigen::VectorXd H;             // mean curvature vector, m-coordinates
  double ric_HH = 0.0;
};

struct FlowParams {
  double t_end = 5.0;
  double dt = 1e-3;
  double eps_ode = 1e-8;   // symmetry / membership residual gate
  double eps_lift = 1e-6;  // lift consistency gate
};

/// One evaluation of the first-order system: G' = 2 g(Lam ., .) as a form,
/// Lam' = -(tr Lam) Lam + Ric(G) + Id.
struct FlowRhs {
  Eigen::MatrixXd Gdot, Lamdot;
};
FlowRhs flow_rhs(const HomogeneousSpace& space, const FlowState& state);

/// Lift generator: Q = q_completion(q^{-1} Lam q, beta|_m), so q' = q Q keeps
/// q in the parabolic subgroup with L + q' q^{-1} skew w.r.t. g.
Eigen::MatrixXd lift_step(const FlowState& state, const Eigen::MatrixXd& beta_m);

/// A full trajectory: states plus monitors, one entry per accepted step.
struct Trajectory {
  std::vector<FlowState> states;
  std::vector<Monitors> monitors;
  double tr_beta_plus_m = 0.0;
  bool completed = false;
  std::string halt_reason;
};

/// Classical fixed-step RK4 on (G, Lam, q); intTrL by trapezoid; monitors
/// recorded per step; halts when G loses positive definiteness or a hard
/// invariant exceeds ten times its gate. The m-basis of the space must be
/// orthonormal for the background metric (catalog frames are; rebase with
/// make_adapted_frame otherwise).
Trajectory integrate(const HomogeneousSpace& space, const BetaData& beta_g,
                     const FlowState& initial, const FlowParams& params);

/// Initial state with the symmetric lift q0 = G0^{-1/2}; valid whenever G0
/// commutes with beta (in particular G0 = Id).
FlowState make_initial_state(const Eigen::MatrixXd& G0, const Eigen::MatrixXd& Lam0);

/// Rebased presentation in which the background metric becomes the identity:
/// new basis [h-frame orthonormal for -B|_h | m-frame orthonormal for G].
struct AdaptedFrame {
  HomogeneousSpace space;
  Eigen::MatrixXd F;  // columns of the new basis in old ambient coordinates
};
AdaptedFrame make_adapted_frame(const HomogeneousSpace& space, const InvariantMetric& g);

}  // namespace riccilab
