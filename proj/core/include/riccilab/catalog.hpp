#pragma once

#include <optional>
#include <string>
#include <vector>

#include "riccilab/homogeneous_space.hpp"
#include "riccilab/lie_algebra.hpp"
#include "riccilab/subspace.hpp"

namespace riccilab::catalog {

/// One curated algebra with whatever reference data is known for it. Every
/// shipped entry passes the load-time checks in catalog_self_check().
struct Entry {
  std::string name;
  LieAlgebra algebra;
  std::optional<Subspace> isotropy;
  std::optional<Eigen::MatrixXd> cartan_involution;
  std::optional<Eigen::MatrixXd> beta;            // catalog gauge
  std::optional<Eigen::MatrixXd> einstein_metric; // on m, when known
  std::string notes;
};

// Individual constructors. Structure constants are frozen small integers in
// the bases documented in the notes of each entry.
LieAlgebra abelian(int n);
LieAlgebra heisenberg3();
LieAlgebra axb();
LieAlgebra rh(int n);  // basis (A, X_1..X_{n-1}), [A, X_i] = X_i
LieAlgebra e2_like_solvable();
LieAlgebra sl2r();  // basis (H, E, F): [H,E] = 2E, [H,F] = -2F, [E,F] = H
LieAlgebra sl2r_x2();
LieAlgebra su2();
LieAlgebra sl2r_semidirect_r2();
LieAlgebra nonstandard4();
LieAlgebra so23();  // 10-dim, basis adapted to so(2) + so(3) + R^{2x3}

/// The skewed metric on nonstandard4 whose nilradical complement fails to
/// close under the bracket.
Eigen::MatrixXd nonstandard4_skewed_metric();

/// Invariant metric on so(2,3)/so(3) from the 4-parameter family:
/// s on the so(2) direction, the SPD 2x2 P acting across the two rows of the
/// R^{2x3} block.
Eigen::MatrixXd so23_metric(double s, const Eigen::Matrix2d& P);

/// so(2,3)/so(3) with the m-basis ordered (a, b00, b01, b02, b10, b11, b12),
/// matching so23_metric.
HomogeneousSpace so23_space();

/// All shipped entries, in catalog order.
std::vector<Entry> entries();

/// Lookup by name; throws ValidationError when absent.
Entry entry(const std::string& name);

}  // namespace riccilab::catalog
