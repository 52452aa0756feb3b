#pragma once

#include <vector>

#include "riccilab/lie_algebra.hpp"

namespace riccilab {

/// An antisymmetric bracket tensor expressed over an orthonormal basis of g.
/// Unlike LieAlgebra this carries no Jacobi requirement: the gradient flow
/// moves through the closure of a basis-change orbit where roundoff may
/// perturb Jacobi slightly.
class BracketPoint {
public:
  explicit BracketPoint(std::vector<Eigen::MatrixXd> components);
  static BracketPoint from_algebra(const LieAlgebra& L);

  int dim() const { return n_; }
  const std::vector<Eigen::MatrixXd>& components() const { return c_; }

  /// Sum of squares over all ordered index pairs (each unordered bracket
  /// counted twice).
  double norm2() const;

  BracketPoint scaled(double s) const;

  /// Change-of-basis action: (k . mu)(x, y) = k mu(k^{-1} x, k^{-1} y).
  BracketPoint act(const Eigen::MatrixXd& k) const;

  /// Derivative of the action: (pi(A) mu)(x,y) = A mu(x,y) - mu(Ax,y) - mu(x,Ay).
  BracketPoint pi(const Eigen::MatrixXd& A) const;

  /// Inner product sum over all ordered pairs.
  double dot(const BracketPoint& other) const;

  BracketPoint operator-(const BracketPoint& other) const;
  BracketPoint operator+(const BracketPoint& other) const;

private:
  int n_;
  std::vector<Eigen::MatrixXd> c_;
};

/// Moment map m(mu), symmetric with tr m(mu) = -1; throws on the zero
/// bracket ("moment map undefined at origin").
Eigen::MatrixXd moment_map(const BracketPoint& mu);

/// Result of the normalized moment-map gradient flow mu' = -pi(m(mu)) mu.
struct MomentFlowResult {
  Eigen::MatrixXd beta;         // m(mu) at the accepted end state
  double criticality_residual;  // || pi(m(mu)) mu - ||m||^2 mu || at ||mu|| = 1
  int steps = 0;
  std::vector<double> energy_trace;  // ||m||^2 along accepted steps
};

/// Projected explicit Euler with step halving on energy increase; stops when
/// the criticality residual drops below tol. Throws on non-convergence.
MomentFlowResult moment_flow(const BracketPoint& mu0, int max_steps = 100000,
                             double tol = 1e-8, double dt0 = 0.05);

}  // namespace riccilab
