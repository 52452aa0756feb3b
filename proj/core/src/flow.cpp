#include "riccilab/flow.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <cmath>

namespace riccilab {

FlowRhs flow_rhs(const HomogeneousSpace& space, const FlowState& state) {
  const InvariantMetric g(space, state.G, 1e-7);
  const Eigen::MatrixXd ric = ricci_operator(space, g);
  FlowRhs out;
  const Eigen::MatrixXd GL = state.G * state.Lam;
  out.Gdot = GL + GL.transpose();
  out.Lamdot = -state.Lam.trace() * state.Lam + ric +
               Eigen::MatrixXd::Identity(state.Lam.rows(), state.Lam.cols());
  return out;
}

Eigen::MatrixXd lift_step(const FlowState& state, const Eigen::MatrixXd& beta_m) {
  const Eigen::MatrixXd qinv = state.q.inverse();
  const Eigen::MatrixXd S = qinv * state.Lam * state.q;
  const double asym = (S - S.transpose()).norm();
  if (asym > 1e-6 * std::max(1.0, S.norm()))
    throw ValidationError("lift_step: q^{-1} Lam q lost gbar-symmetry, residual " +
                          std::to_string(asym));
  const Eigen::MatrixXd Ssym = 0.5 * (S + S.transpose());
  return state.q * q_completion(Ssym, beta_m);
}

FlowState make_initial_state(const Eigen::MatrixXd& G0, const Eigen::MatrixXd& Lam0) {
  FlowState s;
  s.t = 0.0;
  s.G = G0;
  s.Lam = Lam0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(G0);
  s.q = es.operatorInverseSqrt();
  return s;
}

AdaptedFrame make_adapted_frame(const HomogeneousSpace& space, const InvariantMetric& g) {
  const int n = space.dim_g();
  const int k = space.h().dim();
  const int d = space.dim_m();
  Eigen::MatrixXd F(n, n);
  if (k > 0) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(space.minusB_h());
    F.leftCols(k) = space.h().basis() * es.operatorInverseSqrt();
  }
  F.rightCols(d) = space.m().basis() * g.inv_sqrt();
  LieAlgebra rebased = space.alg().change_basis(F);
  Subspace h_new = k > 0 ? Subspace(n, Eigen::MatrixXd::Identity(n, n).leftCols(k))
                         : Subspace::zero(n);
  return AdaptedFrame{HomogeneousSpace(std::move(rebased), std::move(h_new)), F};
}

namespace {

struct OdeState {
  Eigen::MatrixXd G, Lam, q;
};

OdeState axpy(const OdeState& y, double a, const OdeState& k) {
  return OdeState{y.G + a * k.G, y.Lam + a * k.Lam, y.q + a * k.q};
}

}  // namespace

Trajectory integrate(const HomogeneousSpace& space, const BetaData& beta_g,
                     const FlowState& initial, const FlowParams& params) {
  Trajectory traj;
  const BetaRestriction br = restrict_beta_to_m(space, beta_g);
  traj.tr_beta_plus_m = br.beta_plus_m.trace();

  const int steps = static_cast<int>(std::llround(params.t_end / params.dt));
  auto rhs = [&](const OdeState& y) -> OdeState {
    FlowState st;
    st.G = 0.5 * (y.G + y.G.transpose());
    st.Lam = y.Lam;
    st.q = y.q;
    const FlowRhs r = flow_rhs(space, st);
    const Eigen::MatrixXd qdot = lift_step(st, br.beta_m);
    return OdeState{r.Gdot, r.Lamdot, qdot};
  };

  auto record = [&](const FlowState& st) {
    const InvariantMetric g(space, st.G, 1e-7);
    const Eigen::MatrixXd ric = ricci_operator(space, g);
    const MeanCurvature mc = mean_curvature(space, g);
    Monitors m;
    m.H = mc.H;
    m.h = mc.h;
    m.h_prime_formula = -(st.Lam * mc.H).dot(st.G * mc.H);
    m.trL = st.Lam.trace();
    const Eigen::MatrixXd qinv = st.q.inverse();
    const Eigen::MatrixXd conj_beta_plus = st.q * br.beta_plus_m * qinv;
    m.l_beta = (st.Lam * conj_beta_plus).trace();
    m.res_lift = (st.G - qinv.transpose() * qinv).norm();
    m.res_sym = (st.G * st.Lam - st.Lam.transpose() * st.G).norm();
    const Eigen::MatrixXd S = 0.5 * (qinv * st.Lam * st.q + (qinv * st.Lam * st.q).transpose());
    const Eigen::MatrixXd Q = q_completion(S, br.beta_m);
    m.res_ineq_c1 = lq_pairing(S, Q, br.beta_m);
    m.res_ineq_c2 = (ric * conj_beta_plus).trace() + 2.0 * mc.h;
    m.ric_HH = (ric * mc.H).dot(st.G * mc.H);
    m.res_e = -m.ric_HH * traj.tr_beta_plus_m - 4.0 * mc.h * mc.h;
    return m;
  };

  FlowState st = initial;
  try {
    Monitors m0 = record(st);
    m0.intTrL = 0.0;
    m0.w_beta = m0.l_beta;
    traj.states.push_back(st);
    traj.monitors.push_back(m0);

    for (int k = 0; k < steps; ++k) {
      OdeState y{st.G, st.Lam, st.q};
      const double dt = params.dt;
      const OdeState k1 = rhs(y);
      const OdeState k2 = rhs(axpy(y, 0.5 * dt, k1));
      const OdeState k3 = rhs(axpy(y, 0.5 * dt, k2));
      const OdeState k4 = rhs(axpy(y, dt, k3));
      OdeState next = y;
      next.G += (dt / 6.0) * (k1.G + 2.0 * k2.G + 2.0 * k3.G + k4.G);
      next.Lam += (dt / 6.0) * (k1.Lam + 2.0 * k2.Lam + 2.0 * k3.Lam + k4.Lam);
      next.q += (dt / 6.0) * (k1.q + 2.0 * k2.q + 2.0 * k3.q + k4.q);

      st.t = initial.t + (k + 1) * dt;
      st.G = 0.5 * (next.G + next.G.transpose());
      st.Lam = next.Lam;
      st.q = next.q;

      {
        Eigen::LLT<Eigen::MatrixXd> llt(st.G);
        if (llt.info() != Eigen::Success) {
          traj.halt_reason = "metric lost positive definiteness at step " + std::to_string(k + 1);
          return traj;
        }
      }
      // drift control: re-symmetrize q^{-1} Lam q if needed
      {
        const Eigen::MatrixXd qinv = st.q.inverse();
        const Eigen::MatrixXd S = qinv * st.Lam * st.q;
        if ((S - S.transpose()).norm() > params.eps_ode / 10.0)
          st.Lam = st.q * (0.5 * (S + S.transpose())) * qinv;
      }

      Monitors m = record(st);
      const Monitors& prev = traj.monitors.back();
      m.intTrL = prev.intTrL + 0.5 * params.dt * (prev.trL + m.trL);
      m.w_beta = m.l_beta * std::exp(m.intTrL);

      if (m.res_lift > 10.0 * params.eps_lift) {
        traj.halt_reason = "lift consistency residual " + std::to_string(m.res_lift) +
                           " exceeded 10x tolerance at step " + std::to_string(k + 1);
        return traj;
      }
      if (m.res_sym > 10.0 * params.eps_ode * std::max(1.0, st.G.norm() * st.Lam.norm())) {
        traj.halt_reason = "shape operator symmetry residual " + std::to_string(m.res_sym) +
                           " exceeded 10x tolerance at step " + std::to_string(k + 1);
        return traj;
      }
      traj.states.push_back(st);
      traj.monitors.push_back(m);
    }
  } catch (const std::exception& e) {
    traj.halt_reason = e.what();
    return traj;
  }

  // centered finite differences for h'
  auto& mons = traj.monitors;
  const double dt = params.dt;
  for (size_t i = 0; i < mons.size(); ++i) {
    if (mons.size() < 2) {
      mons[i].h_prime_fd = 0.0;
    } else if (i == 0) {
      mons[i].h_prime_fd = (mons[1].h - mons[0].h) / dt;
    } else if (i + 1 == mons.size()) {
      mons[i].h_prime_fd = (mons[i].h - mons[i - 1].h) / dt;
    } else {
      mons[i].h_prime_fd = (mons[i + 1].h - mons[i - 1].h) / (2.0 * dt);
    }
  }
  traj.completed = true;
  return traj;
}

}  // namespace riccilab
