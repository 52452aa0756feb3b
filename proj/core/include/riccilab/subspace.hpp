#pragma once

#include <Eigen/Dense>

#include "riccilab/lie_algebra.hpp"

namespace riccilab {

/// A linear subspace of R^n, stored as a matrix whose columns form a basis.
/// Basis choice is gauge; equality is always tested by mutual projection.
class Subspace {
public:
  Subspace() : ambient_(0) {}
  Subspace(int ambient_dim, Eigen::MatrixXd basis);

  /// The zero subspace of R^n.
  static Subspace zero(int ambient_dim);
  /// All of R^n.
  static Subspace full(int ambient_dim);
  /// Span of the given (possibly dependent) columns, rank-truncated at tol.
  static Subspace span(const Eigen::MatrixXd& vectors, double tol = kAlgTol);

  int ambient_dim() const { return ambient_; }
  int dim() const { return static_cast<int>(basis_.cols()); }
  const Eigen::MatrixXd& basis() const { return basis_; }

  /// Euclidean-orthonormal basis of the same subspace.
  Eigen::MatrixXd orthonormal_basis() const;

  /// Euclidean orthogonal projector onto the subspace.
  Eigen::MatrixXd projector() const;

  /// Projector onto the subspace orthogonal w.r.t. the SPD form M.
  Eigen::MatrixXd projector(const Eigen::MatrixXd& M) const;

  /// Distance from v to the subspace (Euclidean).
  double distance(const Eigen::VectorXd& v) const;

  bool contains(const Eigen::VectorXd& v, double tol = kAlgTol) const;
  bool contains(const Subspace& other, double tol = kAlgTol) const;

  /// max(dist(this -> other), dist(other -> this)) over unit vectors;
  /// zero iff the subspaces agree.
  double mutual_projection_residual(const Subspace& other) const;

  /// Direct sum; throws if the pieces intersect nontrivially.
  Subspace direct_sum(const Subspace& other) const;

private:
  int ambient_;
  Eigen::MatrixXd basis_;
};

/// Span of all brackets [x, y], x in a, y in b.
Subspace bracket_span(const LieAlgebra& L, const Subspace& a, const Subspace& b,
                      double tol = kAlgTol);

/// Residual of "[a, b] is contained in c": max over basis pairs of the
/// distance from [x, y] to c, normalized by bracket size.
double bracket_containment_residual(const LieAlgebra& L, const Subspace& a,
                                    const Subspace& b, const Subspace& c);

/// True if the subspace is closed under the bracket.
bool is_subalgebra(const LieAlgebra& L, const Subspace& s, double tol = kAlgTol);

}  // namespace riccilab
