#pragma once

#include <random>

#include "riccilab/homogeneous_space.hpp"

namespace riccilab {

/// Haar-ish random orthogonal matrix (QR of a Gaussian sample with sign fix).
Eigen::MatrixXd random_orthogonal(int n, std::mt19937_64& rng);

/// Random symmetric matrix with N(0,1) entries up to symmetrization.
Eigen::MatrixXd random_symmetric(int n, std::mt19937_64& rng);

/// Random SPD matrix exp(spread * symmetric).
Eigen::MatrixXd random_spd(int n, std::mt19937_64& rng, double spread = 0.6);

/// Random Ad(H)-invariant metric: exp of a random symmetric element of the
/// commutant of ad(h)|_m. For trivial isotropy this is random_spd.
Eigen::MatrixXd random_invariant_metric(const HomogeneousSpace& space, std::mt19937_64& rng,
                                        double spread = 0.6);

}  // namespace riccilab
