#include "riccilab/sampling.hpp"

#include <Eigen/QR>

#include "riccilab/linalg.hpp"

namespace riccilab {

Eigen::MatrixXd random_orthogonal(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXd A(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) A(i, j) = gauss(rng);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(A);
  Eigen::MatrixXd Q = qr.householderQ();
  const Eigen::MatrixXd R = Q.transpose() * A;
  for (int i = 0; i < n; ++i)
    if (R(i, i) < 0) Q.col(i) *= -1.0;
  return Q;
}

Eigen::MatrixXd random_symmetric(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXd A(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) A(i, j) = gauss(rng);
  return 0.5 * (A + A.transpose());
}

Eigen::MatrixXd random_spd(int n, std::mt19937_64& rng, double spread) {
  const Eigen::MatrixXd S = random_symmetric(n, rng);
  return expm(spread * S / std::max(1.0, S.norm() / std::sqrt(static_cast<double>(n))));
}

Eigen::MatrixXd random_invariant_metric(const HomogeneousSpace& space, std::mt19937_64& rng,
                                        double spread) {
  const int d = space.dim_m();
  if (space.h().dim() == 0) return random_spd(d, rng, spread);

  // commutant of ad(h)|_m within the symmetric matrices, via the null space
  // of the stacked commutator constraints
  Eigen::MatrixXd S = random_symmetric(d, rng);
  Eigen::MatrixXd sys = Eigen::MatrixXd::Zero(space.h().dim() * d * d, d * d);
  int r0 = 0;
  for (int zi = 0; zi < space.h().dim(); ++zi) {
    const Eigen::MatrixXd Z = space.ad_m(space.h().basis().col(zi));
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
  const Eigen::MatrixXd N = null_space(sys, 1e-9);
  const Eigen::VectorXd s(Eigen::Map<const Eigen::VectorXd>(S.data(), d * d));
  const Eigen::VectorXd proj = N * (N.transpose() * s);
  Eigen::MatrixXd Sc = Eigen::Map<const Eigen::MatrixXd>(proj.data(), d, d);
  Sc = 0.5 * (Sc + Sc.transpose());
  return expm(spread * Sc / std::max(1.0, Sc.norm() / std::sqrt(static_cast<double>(d))));
}

}  // namespace riccilab
