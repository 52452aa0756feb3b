#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <nlohmann/json.hpp>

#include "riccilab/catalog.hpp"
#include "riccilab/json_io.hpp"

using namespace riccilab;

TEST_CASE("algebra json round trip") {
  for (const auto& e : catalog::entries()) {
    CAPTURE(e.name);
    const auto j = io::algebra_to_json(e.algebra);
    const LieAlgebra back = io::algebra_from_json(j);
    CHECK(back.dim() == e.algebra.dim());
    for (int k = 0; k < back.dim(); ++k)
      CHECK((back.component(k) - e.algebra.component(k)).norm() == doctest::Approx(0.0));
    CHECK(back.labels() == e.algebra.labels());
  }
}

TEST_CASE("subspace and matrix json round trips") {
  Eigen::MatrixXd b(3, 2);
  b << 1, 0, 0.5, 1, 0, 2;
  const Subspace s(3, b);
  const Subspace back = io::subspace_from_json(io::subspace_to_json(s), 3);
  CHECK(back.mutual_projection_residual(s) < 1e-12);

  Eigen::MatrixXd m(2, 3);
  m << 1, 2, 3, 4, 5, 6;
  CHECK((io::matrix_from_json(io::matrix_to_json(m)) - m).norm() == 0.0);
}

TEST_CASE("beta json round trip") {
  const BetaData beta(*catalog::entry("heisenberg3").beta, BetaData::Source::kCatalogSupplied);
  const BetaData back = io::beta_from_json(io::beta_to_json(beta));
  CHECK((back.beta() - beta.beta()).norm() == doctest::Approx(0.0));
  CHECK(back.source() == BetaData::Source::kCatalogSupplied);
}

TEST_CASE("malformed algebra json is rejected") {
  CHECK_THROWS_AS(io::algebra_from_json(nlohmann::json{{"dim", 2}}), ValidationError);
  nlohmann::json bad{{"dim", 2}, {"brackets", {{1, 0, 0, 1.0}}}};
  CHECK_THROWS_AS(io::algebra_from_json(bad), ValidationError);  // needs i < j
}

TEST_CASE("shipped catalog files match the built-in constructors") {
  const char* root = std::getenv("RICCILAB_SOURCE_DIR");
  const std::string base = root ? std::string(root) : std::string(RICCILAB_SOURCE_DIR);
  for (const auto& e : catalog::entries()) {
    CAPTURE(e.name);
    const std::string path = base + "/catalog/" + e.name + ".json";
    std::ifstream probe(path);
    REQUIRE_MESSAGE(probe.good(), ("missing catalog file " + path).c_str());
    const LieAlgebra loaded = io::algebra_from_json(io::load_json_file(path));
    REQUIRE(loaded.dim() == e.algebra.dim());
    for (int k = 0; k < loaded.dim(); ++k)
      CHECK((loaded.component(k) - e.algebra.component(k)).norm() <= 1e-12);
    CHECK(loaded.jacobi_residual() <= 1e-9);
    if (e.beta) {
      const std::string bpath = base + "/catalog/" + e.name + ".beta.json";
      const BetaData b = io::beta_from_json(io::load_json_file(bpath));
      CHECK((b.beta() - *e.beta).norm() <= 1e-12);
    }
  }
}
