#include <doctest.h>

#include "riccilab/catalog.hpp"
#include "riccilab/decompositions.hpp"

using namespace riccilab;

TEST_CASE("radical: solvable, semisimple and mixed cases") {
  const LieAlgebra axb = catalog::axb();
  CHECK(radical(axb).dim() == 2);

  CHECK(radical(catalog::sl2r()).dim() == 0);

  const LieAlgebra mixed = catalog::sl2r_semidirect_r2();
  const Subspace rad = radical(mixed);
  CHECK(rad.dim() == 2);
  Eigen::MatrixXd r2 = Eigen::MatrixXd::Zero(5, 2);
  r2(3, 0) = r2(4, 1) = 1.0;
  CHECK(rad.mutual_projection_residual(Subspace(5, r2)) < 1e-9);
}

TEST_CASE("nilradical: nilpotent, solvable and semisimple cases") {
  CHECK(nilradical(catalog::heisenberg3()).dim() == 3);

  const Subspace n_axb = nilradical(catalog::axb());
  CHECK(n_axb.dim() == 1);
  CHECK(n_axb.contains(Eigen::VectorXd::Unit(2, 1)));

  CHECK(nilradical(catalog::sl2r_x2()).dim() == 0);
  CHECK(nilradical(catalog::e2_like_solvable()).dim() == 2);
  CHECK(nilradical(catalog::nonstandard4()).dim() == 2);
}

TEST_CASE("radical contains nilradical and [g, rad] lands in the nilradical") {
  for (const auto& e : catalog::entries()) {
    CAPTURE(e.name);
    const Subspace rad = radical(e.algebra);
    const Subspace nil = nilradical(e.algebra);
    CHECK(rad.contains(nil, 1e-8));
    CHECK(bracket_containment_residual(e.algebra, Subspace::full(e.algebra.dim()), rad, nil) <=
          1e-8);
  }
}

TEST_CASE("reductive complement") {
  const LieAlgebra sl2 = catalog::sl2r();
  Eigen::MatrixXd k(3, 1);
  k << 0, 1, -1;  // E - F
  const Subspace m = reductive_complement(sl2, Subspace(3, k));
  Eigen::MatrixXd expect(3, 2);
  expect << 1, 0, 0, 1, 0, 1;  // span(H, E + F)
  CHECK(m.mutual_projection_residual(Subspace::span(expect)) < 1e-9);

  CHECK(reductive_complement(sl2, Subspace::zero(3)).dim() == 3);

  const LieAlgebra h3 = catalog::heisenberg3();
  Eigen::MatrixXd z(3, 1);
  z << 0, 0, 1;
  CHECK_THROWS_AS(reductive_complement(h3, Subspace(3, z)), ValidationError);
}

TEST_CASE("derivation spaces") {
  CHECK(derivation_space(catalog::abelian(3)).size() == 9);
  CHECK(derivation_space(catalog::heisenberg3()).size() == 6);

  const LieAlgebra sl2 = catalog::sl2r();
  const auto ders = derivation_space(sl2);
  CHECK(ders.size() == 3);
  // inner derivations must lie in the span
  Eigen::MatrixXd flat(9, 3);
  for (int c = 0; c < 3; ++c)
    flat.col(c) = Eigen::Map<const Eigen::VectorXd>(ders[c].data(), 9);
  const Subspace span = Subspace::span(flat);
  for (int i = 0; i < 3; ++i) {
    const Eigen::MatrixXd adi = sl2.ad_basis(i);
    const Eigen::VectorXd v = Eigen::Map<const Eigen::VectorXd>(adi.data(), 9);
    CHECK(span.distance(v) <= 1e-8 * std::max(1.0, v.norm()));
  }
}

TEST_CASE("every ad(x) is a derivation across the catalog") {
  for (const auto& e : catalog::entries()) {
    CAPTURE(e.name);
    const auto ders = derivation_space(e.algebra);
    const int n = e.algebra.dim();
    if (ders.empty()) continue;
    Eigen::MatrixXd flat(n * n, static_cast<int>(ders.size()));
    for (size_t c = 0; c < ders.size(); ++c)
      flat.col(static_cast<int>(c)) = Eigen::Map<const Eigen::VectorXd>(ders[c].data(), n * n);
    const Subspace span = Subspace::span(flat);
    for (int i = 0; i < n; ++i) {
      const Eigen::MatrixXd adi = e.algebra.ad_basis(i);
      const Eigen::VectorXd v = Eigen::Map<const Eigen::VectorXd>(adi.data(), n * n);
      CHECK(span.distance(v) <= 1e-8 * std::max(1.0, v.norm()));
    }
  }
}
