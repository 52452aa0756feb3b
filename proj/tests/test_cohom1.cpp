#include <doctest.h>

#include <random>

#include "riccilab/audit.hpp"
#include "riccilab/catalog.hpp"
#include "riccilab/flow.hpp"
#include "riccilab/linalg.hpp"
#include "riccilab/sampling.hpp"

using namespace riccilab;

namespace {

BetaData axb_beta() {
  return BetaData(*catalog::entry("axb").beta, BetaData::Source::kCatalogSupplied);
}

}  // namespace

TEST_CASE("flow right-hand side") {
  {
    // Einstein product rest state: Ric = -Id, Lam = 0
    const auto space = HomogeneousSpace::group(catalog::axb());
    FlowState st;
    st.G = Eigen::MatrixXd::Identity(2, 2);
    st.Lam = Eigen::MatrixXd::Zero(2, 2);
    st.q = Eigen::MatrixXd::Identity(2, 2);
    const FlowRhs r = flow_rhs(space, st);
    CHECK(r.Gdot.norm() < 1e-12);
    CHECK(r.Lamdot.norm() < 1e-10);
  }
  {
    // abelian fiber with Lam = c Id: Lam' = (1 - 3 c^2) Id on a 3-dim orbit
    const auto space = HomogeneousSpace::group(catalog::abelian(3));
    const double c = 0.4;
    FlowState st;
    st.G = Eigen::MatrixXd::Identity(3, 3);
    st.Lam = c * Eigen::MatrixXd::Identity(3, 3);
    st.q = Eigen::MatrixXd::Identity(3, 3);
    const FlowRhs r = flow_rhs(space, st);
    CHECK((r.Lamdot - (1.0 - 3.0 * c * c) * Eigen::MatrixXd::Identity(3, 3)).norm() < 1e-12);
    CHECK((r.Gdot - 2.0 * c * Eigen::MatrixXd::Identity(3, 3)).norm() < 1e-12);
  }
  {
    // diag(4,1) rescales the hyperbolic plane: Ric = -Id/4, so Lam' != 0
    const auto space = HomogeneousSpace::group(catalog::axb());
    FlowState st;
    st.G = Eigen::Vector2d(4.0, 1.0).asDiagonal();
    st.Lam = Eigen::MatrixXd::Zero(2, 2);
    st.q = st.G;  // any invertible placeholder; rhs does not use q
    const FlowRhs r = flow_rhs(space, st);
    CHECK((r.Lamdot - 0.75 * Eigen::MatrixXd::Identity(2, 2)).norm() < 1e-10);
    CHECK((st.G * r.Lamdot - r.Lamdot.transpose() * st.G).norm() < 1e-10);
  }
}

TEST_CASE("lift step") {
  const BetaData beta = axb_beta();
  const BetaRestriction br{beta.beta(), beta.beta_plus()};
  {
    FlowState st;
    st.G = Eigen::MatrixXd::Identity(2, 2);
    st.Lam = Eigen::MatrixXd::Zero(2, 2);
    st.q = Eigen::MatrixXd::Identity(2, 2);
    CHECK(lift_step(st, br.beta_m).norm() == doctest::Approx(0.0));
  }
  {
    // commuting shape operator: pure centralizer completion
    FlowState st;
    st.G = Eigen::MatrixXd::Identity(2, 2);
    st.Lam = Eigen::Vector2d(0.3, -0.8).asDiagonal();
    st.q = Eigen::MatrixXd::Identity(2, 2);
    CHECK((lift_step(st, br.beta_m) + st.Lam).norm() < 1e-12);
  }
  {
    const double s = 0.21;
    FlowState st;
    st.G = Eigen::MatrixXd::Identity(2, 2);
    st.Lam.resize(2, 2);
    st.Lam << 0, s, s, 0;
    st.q = Eigen::MatrixXd::Identity(2, 2);
    Eigen::MatrixXd expect = Eigen::MatrixXd::Zero(2, 2);
    expect(1, 0) = -2.0 * s;
    CHECK((lift_step(st, br.beta_m) - expect).norm() < 1e-12);
  }
}

TEST_CASE("stationary Einstein product scenario stays put") {
  const auto space = HomogeneousSpace::group(catalog::axb());
  const BetaData beta = axb_beta();
  FlowParams params;
  params.t_end = 5.0;
  params.dt = 1e-3;
  const FlowState init = make_initial_state(Eigen::MatrixXd::Identity(2, 2),
                                            Eigen::MatrixXd::Zero(2, 2));
  const Trajectory traj = integrate(space, beta, init, params);
  REQUIRE(traj.completed);
  double drift = 0.0, wmax = 0.0, lift = 0.0;
  for (size_t i = 0; i < traj.states.size(); ++i) {
    drift = std::max(drift, (traj.states[i].G - init.G).norm());
    drift = std::max(drift, traj.states[i].Lam.norm());
    wmax = std::max(wmax, std::abs(traj.monitors[i].w_beta));
    lift = std::max(lift, traj.monitors[i].res_lift);
  }
  CHECK(drift <= 1e-8);
  CHECK(wmax == doctest::Approx(0.0));
  CHECK(lift <= 1e-8);
  CHECK(traj.tr_beta_plus_m == doctest::Approx(1.0));
  CHECK(traj.monitors.front().h == doctest::Approx(0.5));  // tr beta+ = 1 = 2h

  const AuditReport audit = invariant_audit(space, beta, traj, params);
  CHECK(audit.passed);
  CHECK(audit.w_constant);
  CHECK(audit.beta_plus_derivation_residual <= 1e-10);
  CHECK(audit.max_q_beta_commutator <= 1e-10);
  CHECK(audit.min_conditional_w_increment >= -1e-12);
}

TEST_CASE("perturbed hyperbolic-plane scenario passes the audits") {
  const auto space = HomogeneousSpace::group(catalog::axb());
  const BetaData beta = axb_beta();
  FlowParams params;
  params.t_end = 2.0;
  params.dt = 1e-3;
  Eigen::MatrixXd Lam0(2, 2);
  Lam0 << 0.15, 0.08, 0.08, -0.05;
  FlowState init = make_initial_state(Eigen::MatrixXd::Identity(2, 2), Lam0);
  const Trajectory traj = integrate(space, beta, init, params);
  REQUIRE_MESSAGE(traj.completed, traj.halt_reason);
  const AuditReport audit = invariant_audit(space, beta, traj, params);
  CAPTURE(audit.min_c1);
  CAPTURE(audit.min_c2);
  CAPTURE(audit.min_e);
  CAPTURE(audit.min_conditional_w_increment);
  CAPTURE(audit.max_fd_error_hprime);
  CHECK(audit.passed);
  // the trajectory genuinely moves
  CHECK((traj.states.back().G - traj.states.front().G).norm() > 1e-4);
}

TEST_CASE("unimodular scenario has identically vanishing monitors") {
  const auto space = HomogeneousSpace::group(catalog::sl2r());
  const auto e = catalog::entry("sl2r");
  const BetaData beta(*e.beta, BetaData::Source::kCatalogSupplied);
  FlowParams params;
  params.t_end = 0.25;
  params.dt = 1e-3;
  Eigen::MatrixXd Lam0 = Eigen::MatrixXd::Zero(3, 3);
  Lam0(0, 0) = 0.1;
  const Trajectory traj = integrate(space, beta,
                                    make_initial_state(Eigen::MatrixXd::Identity(3, 3), Lam0),
                                    params);
  REQUIRE_MESSAGE(traj.completed, traj.halt_reason);
  for (const auto& m : traj.monitors) {
    CHECK(std::abs(m.l_beta) < 1e-12);
    CHECK(std::abs(m.w_beta) < 1e-12);
    CHECK(std::abs(m.h) < 1e-12);
  }
  const AuditReport audit = invariant_audit(space, beta, traj, params);
  CHECK(audit.passed);
}

TEST_CASE("lift consistency holds along a moving trajectory") {
  // perturbation of the Einstein scale 2 Id on RH^3, rebased so the
  // perturbed metric becomes the background
  FlowParams params;
  params.t_end = 5.0;
  params.dt = 1e-3;
  Eigen::MatrixXd G0(3, 3);
  G0 << 2.0, 0.02, 0.0, 0.02, 2.06, -0.01, 0.0, -0.01, 1.98;
  const auto base = HomogeneousSpace::group(catalog::rh(3));
  const auto frame = make_adapted_frame(base, InvariantMetric(base, G0));
  const BetaData beta = projector_type_beta(frame.space.alg());
  const int d = frame.space.dim_m();
  Eigen::MatrixXd Lam0 = Eigen::MatrixXd::Zero(d, d);
  Lam0(0, 1) = Lam0(1, 0) = 0.004;
  const Trajectory traj = integrate(frame.space, beta,
                                    make_initial_state(Eigen::MatrixXd::Identity(d, d), Lam0),
                                    params);
  REQUIRE_MESSAGE(traj.completed, traj.halt_reason);
  double lift = 0.0;
  for (const auto& m : traj.monitors) lift = std::max(lift, m.res_lift);
  CHECK(lift <= 1e-6);
  CHECK((traj.states.back().G - traj.states.front().G).norm() > 1e-5);
  const AuditReport audit = invariant_audit(frame.space, beta, traj, params);
  CAPTURE(audit.min_c1);
  CAPTURE(audit.min_c2);
  CAPTURE(audit.min_e);
  CAPTURE(audit.min_conditional_w_increment);
  CHECK(audit.passed);
}

TEST_CASE("finite-difference order improves by at least 3.5x per halving") {
  const auto space = HomogeneousSpace::group(catalog::axb());
  const BetaData beta = axb_beta();
  Eigen::MatrixXd Lam0(2, 2);
  Lam0 << 0.2, 0.1, 0.1, -0.1;
  std::vector<double> errs;
  for (double dt : {2e-3, 1e-3, 5e-4}) {
    FlowParams params;
    params.t_end = 1.0;
    params.dt = dt;
    const Trajectory traj = integrate(space, beta,
                                      make_initial_state(Eigen::MatrixXd::Identity(2, 2), Lam0),
                                      params);
    REQUIRE_MESSAGE(traj.completed, traj.halt_reason);
    const AuditReport audit = invariant_audit(space, beta, traj, params);
    errs.push_back(audit.max_fd_error_hprime);
  }
  CHECK(errs[0] / errs[1] >= 3.5);
  CHECK(errs[1] / errs[2] >= 3.5);
}

TEST_CASE("conjugation replay: identity, rotations and diagonal automorphisms") {
  {
    const auto space = HomogeneousSpace::group(catalog::axb());
    const BetaData beta = axb_beta();
    FlowParams params;
    params.t_end = 1.0;
    params.dt = 1e-3;
    Eigen::MatrixXd Lam0(2, 2);
    Lam0 << 0.15, 0.08, 0.08, -0.05;
    const Trajectory traj = integrate(space, beta,
                                      make_initial_state(Eigen::MatrixXd::Identity(2, 2), Lam0),
                                      params);
    REQUIRE_MESSAGE(traj.completed, traj.halt_reason);
    const ReplayReport rep = conjugation_replay(space, beta, traj,
                                                Eigen::MatrixXd::Identity(2, 2), params);
    CHECK(rep.passed);
    CHECK(rep.max_state_gap <= 1e-12);
  }
  {
    // sl(2,R) with a rotation automorphism Ad(k): beta+ = 0 so l vanishes
    const auto space = HomogeneousSpace::group(catalog::sl2r());
    const BetaData beta(*catalog::entry("sl2r").beta, BetaData::Source::kCatalogSupplied);
    FlowParams params;
    params.t_end = 0.4;
    params.dt = 1e-3;
    Eigen::MatrixXd Lam0 = Eigen::MatrixXd::Zero(3, 3);
    Lam0(1, 1) = 0.15;
    const Trajectory traj = integrate(space, beta,
                                      make_initial_state(Eigen::MatrixXd::Identity(3, 3), Lam0),
                                      params);
    REQUIRE(traj.completed);
    Eigen::VectorXd kgen(3);
    kgen << 0, 1, -1;
    const Eigen::MatrixXd A = expm(0.3 * catalog::sl2r().ad(kgen));
    const ReplayReport rep = conjugation_replay(space, beta, traj, A, params);
    CHECK(rep.passed);
    CHECK(rep.commuting_steps == static_cast<int>(traj.states.size()));
  }
  {
    // Heisenberg diagonal automorphism commuting with beta
    const auto space = HomogeneousSpace::group(catalog::heisenberg3());
    const BetaData beta(*catalog::entry("heisenberg3").beta, BetaData::Source::kCatalogSupplied);
    FlowParams params;
    params.t_end = 0.4;
    params.dt = 1e-3;
    const Trajectory traj = integrate(space, beta,
                                      make_initial_state(Eigen::MatrixXd::Identity(3, 3),
                                                         Eigen::MatrixXd::Zero(3, 3)),
                                      params);
    REQUIRE(traj.completed);
    const double t = 1.2;
    Eigen::MatrixXd A = Eigen::Vector3d(t, t, t * t).asDiagonal();
    const ReplayReport rep = conjugation_replay(space, beta, traj, A, params);
    CHECK(rep.passed);
    CHECK(rep.max_l_gap_commuting <= 1e-9);
  }
}

TEST_CASE("parabolic factorization splits a matrix into parabolic times orthogonal") {
  std::mt19937_64 rng(55);
  Eigen::VectorXd d(4);
  d << -0.7, -0.2, -0.2, 0.1;
  const Eigen::MatrixXd beta = d.asDiagonal();
  for (int rep = 0; rep < 10; ++rep) {
    Eigen::MatrixXd M = random_spd(4, rng) * random_orthogonal(4, rng);
    Eigen::MatrixXd U, k;
    parabolic_factor(M, beta, U, k);
    CHECK((U * k - M).norm() <= 1e-10 * std::max(1.0, M.norm()));
    CHECK((k.transpose() * k - Eigen::MatrixXd::Identity(4, 4)).norm() <= 1e-10);
    for (const auto& [lambda, comp] : adbeta_components(U, beta))
      if (lambda < -1e-9) CHECK(comp.norm() <= 1e-10 * std::max(1.0, U.norm()));
  }
}
