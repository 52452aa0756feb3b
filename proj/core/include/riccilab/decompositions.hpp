#pragma once

#include "riccilab/lie_algebra.hpp"
#include "riccilab/subspace.hpp"

namespace riccilab {

/// Derived subalgebra [s, s].
Subspace derived_subalgebra(const LieAlgebra& L, const Subspace& s, double tol = kAlgTol);

/// True if the derived series of s terminates at zero.
bool is_solvable(const LieAlgebra& L, const Subspace& s, double tol = kAlgTol);

/// True if the lower central series of s terminates at zero.
bool is_nilpotent_subalgebra(const LieAlgebra& L, const Subspace& s, double tol = kAlgTol);

/// True if [g, s] is contained in s.
bool is_ideal(const LieAlgebra& L, const Subspace& s, double tol = kAlgTol);

/// Maximal solvable ideal, via Cartan's criterion:
/// rad = { X : B(X, [g,g]) = 0 }. The result is verified to be a solvable
/// ideal; a verification failure throws with the offending residual.
Subspace radical(const LieAlgebra& L, double tol = kAlgTol);

/// Maximal nilpotent ideal. Seeds with [g, rad], extends by rad-basis
/// elements with nilpotent ad, and verifies the span is a nilpotent ideal;
/// throws with residuals on pathological input rather than guessing.
Subspace nilradical(const LieAlgebra& L, double tol = kAlgTol);

/// Killing-orthogonal complement m of a subalgebra h, with g = h + m and
/// [h, m] inside m, all verified. Throws if B restricted to h is degenerate.
Subspace reductive_complement(const LieAlgebra& L, const Subspace& h, double tol = kAlgTol);

/// Basis of the space of derivations: solutions of D[x,y] = [Dx,y] + [x,Dy].
std::vector<Eigen::MatrixXd> derivation_space(const LieAlgebra& L, double tol = kAlgTol);

}  // namespace riccilab
