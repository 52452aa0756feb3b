#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>
#include <vector>

namespace riccilab {

/// Thrown when an input fails a structural validation (bad dimensions,
/// degenerate forms, failed verification of a computed decomposition).
class ValidationError : public std::runtime_error {
public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// Default tolerance for algebraic residuals. Catalog structure constants
/// are small integers, so double precision leaves several orders of headroom.
inline constexpr double kAlgTol = 1e-9;

/// A finite-dimensional real Lie algebra given by structure constants over a
/// labeled basis: [e_i, e_j] = sum_k c[i][j][k] e_k.
///
/// The tensor is stored as one matrix per output component,
/// component(k)(i,j) = c[i][j][k], antisymmetric in (i,j).
class LieAlgebra {
public:
  /// Builds the algebra from sparse bracket entries (i, j, k, value) with
  /// i < j; antisymmetric counterparts are filled in automatically.
  LieAlgebra(int dim, std::vector<std::string> labels,
             const std::vector<std::tuple<int, int, int, double>>& brackets);

  /// Builds the algebra from a full antisymmetric tensor (one matrix per k).
  LieAlgebra(std::vector<Eigen::MatrixXd> components, std::vector<std::string> labels);

  int dim() const { return n_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const Eigen::MatrixXd& component(int k) const { return c_[k]; }
  const std::vector<Eigen::MatrixXd>& components() const { return c_; }

  /// Bracket of two coefficient vectors.
  Eigen::VectorXd bracket(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const;

  /// Matrix of ad(x): y -> [x, y]. Linear in x.
  Eigen::MatrixXd ad(const Eigen::VectorXd& x) const;

  /// ad of the i-th basis vector.
  Eigen::MatrixXd ad_basis(int i) const;

  /// Killing form B(i,j) = tr(ad e_i ad e_j).
  Eigen::MatrixXd killing_form() const;

  /// Max norm of the cyclic Jacobi sum over basis triples; zero for a
  /// genuine Lie algebra.
  double jacobi_residual() const;

  /// Max over basis triples of |B([x,y],z) + B(y,[x,z])|.
  double killing_invariance_residual() const;

  /// tr ad(x) = 0 for all x.
  bool is_unimodular(double tol = kAlgTol) const;

  /// Vector of traces (tr ad e_0, ..., tr ad e_{n-1}).
  Eigen::VectorXd trace_form() const;

  /// Structure constants after the basis change e'_j = sum_i T(i,j) e_i.
  LieAlgebra change_basis(const Eigen::MatrixXd& T) const;

  /// True if A[x,y] = [Ax, Ay] on all basis pairs within tol.
  bool is_automorphism(const Eigen::MatrixXd& A, double tol = kAlgTol) const;

  /// Max over basis pairs of |D[x,y] - [Dx,y] - [x,Dy]|.
  double derivation_residual(const Eigen::MatrixXd& D) const;

private:
  void validate_antisymmetry() const;

  int n_;
  std::vector<std::string> labels_;
  std::vector<Eigen::MatrixXd> c_;
};

}  // namespace riccilab
