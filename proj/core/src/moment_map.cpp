#include "riccilab/moment_map.hpp"

#include <cmath>

namespace riccilab {

BracketPoint::BracketPoint(std::vector<Eigen::MatrixXd> components)
    : n_(static_cast<int>(components.size())), c_(std::move(components)) {
  for (const auto& m : c_)
    if (m.rows() != n_ || m.cols() != n_)
      throw ValidationError("BracketPoint: component shape mismatch");
}

BracketPoint BracketPoint::from_algebra(const LieAlgebra& L) {
  return BracketPoint(L.components());
}

double BracketPoint::norm2() const {
  double s = 0.0;
  for (const auto& m : c_) s += m.squaredNorm();
  return s;
}

BracketPoint BracketPoint::scaled(double s) const {
  std::vector<Eigen::MatrixXd> out(c_);
  for (auto& m : out) m *= s;
  return BracketPoint(std::move(out));
}

BracketPoint BracketPoint::act(const Eigen::MatrixXd& k) const {
  const Eigen::MatrixXd kinv = k.inverse();
  std::vector<Eigen::MatrixXd> out(n_, Eigen::MatrixXd::Zero(n_, n_));
  // c'[d](a,b) = sum_{ijl} kinv(i,a) kinv(j,b) k(d,l) c[l](i,j)
  for (int d = 0; d < n_; ++d) {
    Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(n_, n_);
    for (int l = 0; l < n_; ++l) acc += k(d, l) * (kinv.transpose() * c_[l] * kinv);
    out[d] = 0.5 * (acc - acc.transpose());
  }
  return BracketPoint(std::move(out));
}

BracketPoint BracketPoint::pi(const Eigen::MatrixXd& A) const {
  std::vector<Eigen::MatrixXd> out(n_, Eigen::MatrixXd::Zero(n_, n_));
  // first term: A applied to the output slot
  for (int k = 0; k < n_; ++k) {
    Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(n_, n_);
    for (int l = 0; l < n_; ++l) acc += A(k, l) * c_[l];
    // minus mu(A x, y) + mu(x, A y): c[k](A^T applied on both slots)
    acc -= A.transpose() * c_[k] + c_[k] * A;
    out[k] = acc;
  }
  return BracketPoint(std::move(out));
}

double BracketPoint::dot(const BracketPoint& other) const {
  double s = 0.0;
  for (int k = 0; k < n_; ++k) s += c_[k].cwiseProduct(other.c_[k]).sum();
  return s;
}

BracketPoint BracketPoint::operator-(const BracketPoint& other) const {
  std::vector<Eigen::MatrixXd> out(c_);
  for (int k = 0; k < n_; ++k) out[k] -= other.c_[k];
  return BracketPoint(std::move(out));
}

BracketPoint BracketPoint::operator+(const BracketPoint& other) const {
  std::vector<Eigen::MatrixXd> out(c_);
  for (int k = 0; k < n_; ++k) out[k] += other.c_[k];
  return BracketPoint(std::move(out));
}

Eigen::MatrixXd moment_map(const BracketPoint& mu) {
  const int n = mu.dim();
  const double nrm2 = mu.norm2();
  if (nrm2 <= 1e-14) throw std::domain_error("moment map undefined at origin");
  const auto& c = mu.components();
  // m(mu)_ab = [ sum_{ij} c^a_ij c^b_ij - 2 sum_{jk} c^k_aj c^k_bj ] / ||mu||^2
  Eigen::MatrixXd m(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      double first = c[a].cwiseProduct(c[b]).sum();
      double second = 0.0;
      for (int k = 0; k < n; ++k) second += c[k].row(a).dot(c[k].row(b));
      m(a, b) = (first - 2.0 * second) / nrm2;
      m(b, a) = m(a, b);
    }
  return m;
}

MomentFlowResult moment_flow(const BracketPoint& mu0, int max_steps, double tol, double dt0) {
  const double n0 = std::sqrt(mu0.norm2());
  if (n0 <= 1e-14) throw std::domain_error("moment map undefined at origin");
  BracketPoint mu = mu0.scaled(1.0 / n0);

  MomentFlowResult res;
  double dt = dt0;
  Eigen::MatrixXd m = moment_map(mu);
  double energy = m.squaredNorm();
  res.energy_trace.push_back(energy);

  for (int step = 0; step < max_steps; ++step) {
    const BracketPoint v = mu.pi(m);
    const BracketPoint crit = v - mu.scaled(energy);
    const double crit_res = std::sqrt(crit.norm2());
    if (crit_res < tol) {
      res.beta = m;
      res.criticality_residual = crit_res;
      res.steps = step;
      return res;
    }
    // candidate explicit Euler step, renormalized to the sphere
    BracketPoint cand = mu - v.scaled(dt);
    cand = cand.scaled(1.0 / std::sqrt(cand.norm2()));
    const Eigen::MatrixXd m_cand = moment_map(cand);
    const double e_cand = m_cand.squaredNorm();
    if (e_cand <= energy + 1e-14 * (1.0 + energy)) {
      mu = cand;
      m = m_cand;
      energy = e_cand;
      res.energy_trace.push_back(energy);
      dt = std::min(dt * 1.25, 1.0);
    } else {
      dt *= 0.5;
      if (dt < 1e-13)
        throw ValidationError("moment_flow: step size underflow, residual " +
                              std::to_string(crit_res));
    }
  }
  const BracketPoint v = mu.pi(m);
  const BracketPoint crit = v - mu.scaled(energy);
  throw ValidationError("moment_flow: no convergence in " + std::to_string(max_steps) +
                        " steps, last criticality residual " +
                        std::to_string(std::sqrt(crit.norm2())));
}

}  // namespace riccilab
