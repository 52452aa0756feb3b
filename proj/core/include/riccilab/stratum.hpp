#pragma once

#include <map>
#include <random>
#include <vector>

#include "riccilab/curvature.hpp"
#include "riccilab/homogeneous_space.hpp"
#include "riccilab/moment_map.hpp"

namespace riccilab {

/// The stratum label of a homogeneous space: a symmetric endomorphism beta
/// with tr beta = -1 and its shifted positive part beta+ = beta/||beta||^2 + Id.
/// All matrices are expressed over a gbar-orthonormal basis.
class BetaData {
public:
  enum class Source { kFlowEstimated, kCatalogSupplied };

  BetaData(Eigen::MatrixXd beta, Source source, double criticality_residual = 0.0);

  const Eigen::MatrixXd& beta() const { return beta_; }
  double beta_norm2() const { return norm2_; }
  const Eigen::MatrixXd& beta_plus() const { return beta_plus_; }
  Source source() const { return source_; }
  double criticality_residual() const { return crit_; }

  int dim() const { return static_cast<int>(beta_.rows()); }
  double trace_beta_plus() const { return beta_plus_.trace(); }

  /// Eigenvalues sorted ascending; the gauge-robust fingerprint of the label.
  Eigen::VectorXd sorted_eigenvalues() const;

private:
  Eigen::MatrixXd beta_, beta_plus_;
  double norm2_ = 0.0, crit_ = 0.0;
  Source source_;
};

/// Decomposition of E over the eigenvalues of ad(beta) = [beta, .] for a
/// symmetric beta; keys are the clustered eigenvalue gaps and the components
/// sum back to E. Symmetric E has paired components E_{-l} = E_l^T.
std::map<double, Eigen::MatrixXd> adbeta_components(const Eigen::MatrixXd& E,
                                                    const Eigen::MatrixXd& beta_sym,
                                                    double cluster_tol = 1e-8);

/// The parabolic completion of a symmetric S: the unique Q with only
/// nonnegative ad(beta)-components such that S + Q is skew-symmetric
/// (Q_lambda = -2 S_lambda for lambda > 0, Q_0 = -S_0).
Eigen::MatrixXd q_completion(const Eigen::MatrixXd& S, const Eigen::MatrixXd& beta_sym);

/// tr S [Q, beta]; nonnegative for Q = q_completion(S, beta), vanishing iff
/// [Q, beta] = 0.
double lq_pairing(const Eigen::MatrixXd& S, const Eigen::MatrixXd& Q,
                  const Eigen::MatrixXd& beta);

/// Closed-form stratum label, valid in any gbar-orthonormal gauge, for the
/// algebras whose beta+ is the orthogonal projector onto the nilradical
/// (proper nonzero nilradical): beta = (P_nil - Id)/(dim g - dim nil).
/// Semisimple algebras get -Id/n. Throws for nilpotent algebras, whose label
/// is not of projector type.
BetaData projector_type_beta(const LieAlgebra& L);

/// The m-restriction of a g-level label: the m-blocks of beta and beta+.
/// Requires beta to preserve the h + m splitting within tol.
struct BetaRestriction {
  Eigen::MatrixXd beta_m;       // m-block of beta
  Eigen::MatrixXd beta_plus_m;  // m-block of beta/||beta||^2 + Id
};
BetaRestriction restrict_beta_to_m(const HomogeneousSpace& space, const BetaData& beta_g,
                                   double tol = 1e-7);

/// One sampled element of the parabolic subgroup compatible with the
/// isotropy: q = exp(s Q) with Q a random endomorphism of m projected onto
/// the commutant of ad(h)|_m and onto nonnegative ad(beta)-components.
Eigen::MatrixXd sample_parabolic_q(const HomogeneousSpace& space,
                                   const Eigen::MatrixXd& beta_m, std::mt19937_64& rng,
                                   double spread = 0.7);

/// Verification report for the three stratum-label properties: positivity
/// with kernel alignment, the automorphism-group constraint on derivations,
/// and the Ricci curvature estimate over sampled invariant metrics.
struct BetaVerifyReport {
  double splitting_residual = 0.0;      // beta vs the h + m splitting
  double beta_plus_min_eig = 0.0;       // >= -1e-9 required
  double kernel_vs_nilrad_orth = 0.0;   // mutual projection residual
  double h_in_kernel = 0.0;             // containment residual
  double max_negative_component = 0.0;  // derivation components at lambda < 0
  double max_trace_pairing = 0.0;       // |tr(D beta)| over the derivation space
  double min_ricci_pairing = 0.0;       // min of tr(Ric_q q b+ q^-1) + |H_q|^2
  int samples = 0;
  int equality_cases = 0;               // samples where q b+ q^-1 is a derivation
  double max_equality_gap = 0.0;        // |pairing| over the equality cases
  bool passed = false;
};

/// Runs the three property checks in the supplied gauge. The ambient basis
/// must be gbar-orthonormal (catalog bases are); beta must preserve the
/// h + m splitting within tol or this throws.
BetaVerifyReport verify_beta(const HomogeneousSpace& space, const InvariantMetric& g,
                             const BetaData& beta_g, int n_samples, std::mt19937_64& rng,
                             double tol = 1e-7);

}  // namespace riccilab
