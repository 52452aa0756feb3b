#include <doctest.h>

#include "riccilab/catalog.hpp"
#include "riccilab/iwasawa.hpp"

using namespace riccilab;

TEST_CASE("Iwasawa decomposition of sl(2,R)") {
  const auto entry = catalog::entry("sl2r");
  const IwasawaData iw = iwasawa_decomposition(entry.algebra, *entry.cartan_involution);

  Eigen::MatrixXd kexp(3, 1);
  kexp << 0, 1, -1;
  CHECK(iw.k.mutual_projection_residual(Subspace::span(kexp)) < 1e-8);

  Eigen::MatrixXd aexp(3, 1);
  aexp << 1, 0, 0;
  CHECK(iw.a.mutual_projection_residual(Subspace::span(aexp)) < 1e-8);

  REQUIRE(iw.roots.size() == 2);
  // root values are +-2 once the functional is normalized to lambda(H)
  for (const auto& root : iw.roots) {
    const double coeff = iw.a.basis()(0, 0);  // a-basis = c * H
    CHECK(std::abs(std::abs(root.functional(0) / coeff) - 2.0) < 1e-8);
    CHECK(root.space.dim() == 1);
  }
  CHECK(iw.n.dim() == 1);
  CHECK(root_space_residual(entry.algebra, iw) <= 1e-7);
}

TEST_CASE("Iwasawa decomposition of sl(2,R) x sl(2,R) is blockwise") {
  const auto entry = catalog::entry("sl2r_x2");
  const IwasawaData iw = iwasawa_decomposition(entry.algebra, *entry.cartan_involution);
  CHECK(iw.a.dim() == 2);
  CHECK(iw.n.dim() == 2);
  CHECK(iw.k.dim() == 2);
  CHECK(iw.roots.size() == 4);
  CHECK(root_space_residual(entry.algebra, iw) <= 1e-7);
}

TEST_CASE("compact algebra degenerates to an empty root system") {
  const auto entry = catalog::entry("su2");
  const IwasawaData iw = iwasawa_decomposition(entry.algebra, *entry.cartan_involution);
  CHECK(iw.k.dim() == 3);
  CHECK(iw.a.dim() == 0);
  CHECK(iw.n.dim() == 0);
  CHECK(iw.roots.empty());
}

TEST_CASE("non-semisimple input is rejected") {
  const LieAlgebra axb = catalog::axb();
  CHECK_THROWS_AS(iwasawa_decomposition(axb, Eigen::MatrixXd::Identity(2, 2)), ValidationError);
}

TEST_CASE("Iwasawa decomposition of so(2,3)") {
  const auto entry = catalog::entry("so23_so3");
  const IwasawaData iw = iwasawa_decomposition(entry.algebra, *entry.cartan_involution);
  CHECK(iw.k.dim() == 4);
  CHECK(iw.a.dim() == 2);
  CHECK(iw.n.dim() == 4);
  CHECK(iw.roots.size() == 8);
  CHECK(root_space_residual(entry.algebra, iw) <= 1e-7);
  // theta maps each root space to the opposite one (checked internally), and
  // k + a + n really is a direct sum
  CHECK(iw.k.direct_sum(iw.an()).dim() == 10);
}
