#include "riccilab/curvature.hpp"

#include <Eigen/Eigenvalues>

namespace riccilab {

MeanCurvature mean_curvature(const HomogeneousSpace& space, const InvariantMetric& g) {
  MeanCurvature out;
  const Eigen::VectorXd tau = space.m_trace_form();
  out.H = g.G().ldlt().solve(tau);
  out.h = 0.5 * tau.dot(out.H);
  return out;
}

namespace {

// Structure tensor of proj_m[.,.] in a g-orthonormal frame X = m-basis * W.
std::vector<Eigen::MatrixXd> onb_bracket_tensor(const HomogeneousSpace& space,
                                                const Eigen::MatrixXd& W,
                                                const Eigen::MatrixXd& Winv) {
  const int d = space.dim_m();
  std::vector<Eigen::MatrixXd> chat(d, Eigen::MatrixXd::Zero(d, d));
  for (int k = 0; k < d; ++k) {
    Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(d, d);
    for (int l = 0; l < d; ++l) acc += Winv(k, l) * (W.transpose() * space.m_bracket_tensor()[l] * W);
    chat[k] = 0.5 * (acc - acc.transpose());
  }
  return chat;
}

}  // namespace

Eigen::MatrixXd ricci_operator(const HomogeneousSpace& space, const InvariantMetric& g) {
  const double inv_res = invariance_check(space, g.G());
  if (inv_res > 1e-8)
    throw ValidationError("ricci_operator: metric not Ad(H)-invariant, residual " +
                          std::to_string(inv_res));
  const int d = space.dim_m();
  const Eigen::MatrixXd W = g.inv_sqrt();   // ONB columns in m-coordinates
  const Eigen::MatrixXd Winv = g.sqrt();
  const auto chat = onb_bracket_tensor(space, W, Winv);

  // <M x, y> = -1/2 sum_{ij} c^j_{xi} c^j_{yi} + 1/4 sum_{ij} c^x_{ij} c^y_{ij}
  Eigen::MatrixXd Mop = Eigen::MatrixXd::Zero(d, d);
  for (int a = 0; a < d; ++a)
    for (int b = a; b < d; ++b) {
      double first = 0.0, second = 0.0;
      for (int j = 0; j < d; ++j) first += chat[j].row(a).dot(chat[j].row(b));
      second = chat[a].cwiseProduct(chat[b]).sum();
      Mop(a, b) = -0.5 * first + 0.25 * second;
      Mop(b, a) = Mop(a, b);
    }

  // Killing form over the ONB
  const Eigen::MatrixXd Bhat = W.transpose() * space.killing_m() * W;

  // mean curvature part over the ONB
  const MeanCurvature mc = mean_curvature(space, g);
  const Eigen::MatrixXd adH = Winv * space.ad_m(space.from_m(mc.H)) * W;
  const Eigen::MatrixXd S = 0.5 * (adH + adH.transpose());

  const Eigen::MatrixXd ric_onb = Mop - 0.5 * Bhat - S;
  return W * ric_onb * Winv;  // back to m-coordinates as an operator
}

Eigen::MatrixXd modified_ricci(const HomogeneousSpace& space, const InvariantMetric& g) {
  const Eigen::MatrixXd ric = ricci_operator(space, g);
  const MeanCurvature mc = mean_curvature(space, g);
  const Eigen::MatrixXd S = g.sym(space.ad_m(space.from_m(mc.H)));
  const double tr_gap = std::abs(S.trace() - 2.0 * mc.h);
  if (tr_gap > 1e-8 * std::max(1.0, std::abs(mc.h)))
    throw ValidationError("modified_ricci: tr S(ad_m H) != 2h, gap " + std::to_string(tr_gap));
  return ric + S;
}

double scalar_curvature(const HomogeneousSpace& space, const InvariantMetric& g) {
  return ricci_operator(space, g).trace();
}

Eigen::MatrixXd ricci_koszul_oracle(const HomogeneousSpace& space, const InvariantMetric& g) {
  if (space.h().dim() != 0)
    throw ValidationError("ricci_koszul_oracle: only implemented for trivial isotropy");
  const int n = space.dim_m();
  const Eigen::MatrixXd& G = g.G();
  const Eigen::MatrixXd Ginv = g.inverse();

  // 2 g(nabla_i j, k) = g([i,j],k) - g([j,k],i) + g([k,i],j), left-invariant fields
  std::vector<Eigen::MatrixXd> nabla(n, Eigen::MatrixXd::Zero(n, n));  // nabla[i](k,j): comp k of nabla_i e_j
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Eigen::VectorXd rhs(n);
      const Eigen::VectorXd ei = Eigen::VectorXd::Unit(n, i);
      const Eigen::VectorXd ej = Eigen::VectorXd::Unit(n, j);
      for (int k = 0; k < n; ++k) {
        const Eigen::VectorXd ek = Eigen::VectorXd::Unit(n, k);
        rhs(k) = 0.5 * (space.bracket_m(ei, ej).dot(G * ek) - space.bracket_m(ej, ek).dot(G * ei) +
                        space.bracket_m(ek, ei).dot(G * ej));
      }
      nabla[i].col(j) = Ginv * rhs;
    }

  // R(x,y)z = nabla_x nabla_y z - nabla_y nabla_x z - nabla_{[x,y]} z
  auto nabla_of = [&](const Eigen::VectorXd& x) {
    Eigen::MatrixXd N = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) N += x(i) * nabla[i];
    return N;
  };
  Eigen::MatrixXd ric_form = Eigen::MatrixXd::Zero(n, n);
  const Eigen::MatrixXd E = g.inv_sqrt();  // ONB columns
  for (int x = 0; x < n; ++x)
    for (int y = x; y < n; ++y) {
      const Eigen::VectorXd ex = Eigen::VectorXd::Unit(n, x);
      const Eigen::VectorXd ey = Eigen::VectorXd::Unit(n, y);
      double val = 0.0;
      for (int a = 0; a < n; ++a) {
        const Eigen::VectorXd Ea = E.col(a);
        const Eigen::MatrixXd Na = nabla_of(Ea);
        const Eigen::MatrixXd Nx = nabla_of(ex);
        const Eigen::VectorXd Rz = Na * (Nx * ey) - Nx * (Na * ey) - nabla_of(space.bracket_m(Ea, ex)) * ey;
        val += Rz.dot(G * Ea);
      }
      ric_form(x, y) = val;
      ric_form(y, x) = val;
    }
  return Ginv * ric_form;
}

StandardnessReport standardness_check(const HomogeneousSpace& space, const InvariantMetric& g,
                                      double tol) {
  StandardnessReport rep;
  const int n = space.dim_g();
  const Subspace nil = nilradical(space.alg());
  rep.nilradical_dim = nil.dim();
  if (nil.dim() == 0) {
    rep.standard = true;
    rep.residual = 0.0;
    return rep;
  }
  const Eigen::MatrixXd gbar = extended_metric_ambient(space, g);
  // u = gbar-orthogonal complement of the nilradical in g
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(nil.basis().transpose() * gbar, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > kAlgTol * std::max(1.0, sv(0))) ++rank;
  const Subspace u(n, svd.matrixV().rightCols(n - rank));
  rep.residual = bracket_containment_residual(space.alg(), u, u, u);
  rep.standard = rep.residual <= tol;
  return rep;
}

Eigen::MatrixXd chi_form(const HomogeneousSpace& space, const InvariantMetric& g,
                         const Subspace& levi) {
  const LieAlgebra& L = space.alg();
  const int n = L.dim();
  const Subspace rad = radical(L);
  if (levi.dim() + rad.dim() != n)
    throw ValidationError("chi_form: levi and radical dimensions do not sum to dim g");
  if (levi.dim() > 0) {
    if (!is_subalgebra(L, levi, 1e-8))
      throw ValidationError("chi_form: supplied Levi factor is not a subalgebra");
    // intrinsic Killing form of the Levi subalgebra must be nondegenerate
    const int r = levi.dim();
    Eigen::MatrixXd Bl(r, r);
    std::vector<Eigen::MatrixXd> adl(r);
    const Eigen::MatrixXd P = levi.projector();
    for (int i = 0; i < r; ++i) {
      Eigen::MatrixXd Ai(r, r);
      for (int j = 0; j < r; ++j)
        Ai.col(j) = levi.orthonormal_basis().transpose() *
                    L.bracket(levi.basis().col(i), levi.orthonormal_basis().col(j));
      adl[i] = Ai;
    }
    // full form via the orthonormal frame of levi
    const Eigen::MatrixXd Q = levi.orthonormal_basis();
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) {
        Eigen::MatrixXd Ai(r, r), Aj(r, r);
        for (int c = 0; c < r; ++c) {
          Ai.col(c) = Q.transpose() * L.bracket(Q.col(i), Q.col(c));
          Aj.col(c) = Q.transpose() * L.bracket(Q.col(j), Q.col(c));
        }
        Bl(i, j) = (Ai * Aj).trace();
      }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (Bl + Bl.transpose()));
    if (es.eigenvalues().cwiseAbs().minCoeff() <= 1e-8 * std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff()))
      throw ValidationError("chi_form: supplied Levi factor is not semisimple");
    if (Subspace::span((Eigen::MatrixXd(n, levi.dim() + rad.dim()) << levi.basis(), rad.basis()).finished()).dim() != n)
      throw ValidationError("chi_form: levi + radical does not span g");
  }
  const int r = levi.dim();
  Eigen::MatrixXd C = Eigen::MatrixXd::Zero(r, r);
  if (rad.dim() == 0 || r == 0) return C;

  // theta(X) = ad(X)|_rad in rad-coordinates; transpose w.r.t. gbar|_rad.
  const Eigen::MatrixXd gbar = extended_metric_ambient(space, g);
  const Eigen::MatrixXd Rb = rad.basis();
  const Eigen::MatrixXd Gr = Rb.transpose() * gbar * Rb;
  const Eigen::MatrixXd Grinv = Gr.inverse();
  const Eigen::MatrixXd lsq = (Rb.transpose() * Rb).inverse() * Rb.transpose();  // rad coords
  auto theta_of = [&](const Eigen::VectorXd& X) {
    Eigen::MatrixXd T(rad.dim(), rad.dim());
    for (int j = 0; j < rad.dim(); ++j) T.col(j) = lsq * space.alg().bracket(X, Rb.col(j));
    return T;
  };
  for (int i = 0; i < r; ++i) {
    const Eigen::MatrixXd Ti = theta_of(levi.basis().col(i));
    const Eigen::MatrixXd Si = Ti + Grinv * Ti.transpose() * Gr;
    for (int j = i; j < r; ++j) {
      const Eigen::MatrixXd Tj = theta_of(levi.basis().col(j));
      const Eigen::MatrixXd Sj = Tj + Grinv * Tj.transpose() * Gr;
      C(i, j) = 0.25 * (Si * Sj).trace();
      C(j, i) = C(i, j);
    }
  }
  return C;
}

double orbit_mean_curvature(const HomogeneousSpace& space, const InvariantMetric& g,
                            const Subspace& gbar) {
  const int d = space.dim_m();
  // Orbit directions in m-coordinates.
  Eigen::MatrixXd T(d, gbar.dim());
  for (int j = 0; j < gbar.dim(); ++j) T.col(j) = space.m_coords(gbar.basis().col(j));
  const Subspace tangent = Subspace::span(T, kAlgTol);
  if (tangent.dim() != d - 1)
    throw ValidationError("orbit_mean_curvature: gbar directions are not codimension one in m");

  // g-orthonormal tangent frame with lifts into gbar.
  const Eigen::MatrixXd& G = g.G();
  Eigen::MatrixXd U(d, d - 1);       // frame in m-coordinates
  Eigen::MatrixXd lifts(space.dim_g(), d - 1);
  {
    Eigen::MatrixXd raw = tangent.basis();
    for (int j = 0; j < d - 1; ++j) {
      Eigen::VectorXd v = raw.col(j);
      for (int i = 0; i < j; ++i) v -= U.col(i) * (U.col(i).dot(G * v));
      v /= std::sqrt(v.dot(G * v));
      U.col(j) = v;
      // lift: solve T c = v in least squares, set xi = gbar-basis * c
      const Eigen::VectorXd c = T.colPivHouseholderQr().solve(v);
      lifts.col(j) = gbar.basis() * c;
      if ((T * c - v).norm() > 1e-9)
        throw ValidationError("orbit_mean_curvature: tangent lift failed");
    }
  }

  // unit normal in m: kernel of T^T G
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(U.transpose() * G, Eigen::ComputeFullV);
  Eigen::VectorXd N = svd.matrixV().col(d - 1);
  N /= std::sqrt(N.dot(G * N));
  const MeanCurvature mc = mean_curvature(space, g);
  if (mc.H.norm() > 1e-10) {
    if (N.dot(G * mc.H) < 0) N = -N;
  } else {
    for (int i = 0; i < d; ++i) {
      if (std::abs(N(i)) > 1e-10) {
        if (N(i) < 0) N = -N;
        break;
      }
    }
  }

  // tr L = - sum_i < proj_m [N, xi_i], U_i >_g with Killing lifts xi_i.
  const Eigen::VectorXd N_amb = space.from_m(N);
  double tr = 0.0;
  for (int i = 0; i < d - 1; ++i) {
    const Eigen::VectorXd br = space.m_coords(space.alg().bracket(N_amb, lifts.col(i)));
    tr -= br.dot(G * U.col(i));
  }
  return tr;
}

Pushforward pushforward_by_automorphism(const HomogeneousSpace& space, const InvariantMetric& g,
                                        const Eigen::MatrixXd& A) {
  const LieAlgebra& L = space.alg();
  if (!L.is_automorphism(A, 1e-8))
    throw ValidationError("pushforward: A is not a Lie algebra automorphism");
  // A must preserve the splitting.
  for (int j = 0; j < space.h().dim(); ++j)
    if (!space.h().contains(A * space.h().basis().col(j), 1e-8))
      throw ValidationError("pushforward: A does not preserve h");
  for (int j = 0; j < space.m().dim(); ++j)
    if (!space.m().contains(A * space.m().basis().col(j), 1e-8))
      throw ValidationError("pushforward: A does not preserve m");
  const int d = space.dim_m();
  Eigen::MatrixXd A_m(d, d);
  for (int j = 0; j < d; ++j) A_m.col(j) = space.m_coords(A * space.m().basis().col(j));
  const Eigen::MatrixXd Ainv = A_m.inverse();
  Eigen::MatrixXd Gp = Ainv.transpose() * g.G() * Ainv;
  Gp = 0.5 * (Gp + Gp.transpose());
  return Pushforward{InvariantMetric(space, Gp, 1e-7), A_m};
}

}  // namespace riccilab
