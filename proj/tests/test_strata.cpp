#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <random>

#include "riccilab/catalog.hpp"
#include "riccilab/moment_map.hpp"
#include "riccilab/sampling.hpp"
#include "riccilab/stratum.hpp"

using namespace riccilab;

namespace {

// Independent route to the moment map, straight from the defining pairing
// <m(mu), A> = <pi(A) mu, mu> / |mu|^2 over matrix units.
Eigen::MatrixXd moment_map_pairing_oracle(const BracketPoint& mu) {
  const int n = mu.dim();
  Eigen::MatrixXd m(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Eigen::MatrixXd Eab = Eigen::MatrixXd::Zero(n, n);
      Eab(a, b) = 1.0;
      m(a, b) = mu.pi(Eab).dot(mu) / mu.norm2();
    }
  return m;
}

BracketPoint random_bracket(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<Eigen::MatrixXd> c(n, Eigen::MatrixXd::Zero(n, n));
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        c[k](i, j) = gauss(rng);
        c[k](j, i) = -c[k](i, j);
      }
  return BracketPoint(std::move(c));
}

}  // namespace

TEST_CASE("moment map closed forms and the defining-pairing oracle") {
  {
    const auto mu = BracketPoint::from_algebra(catalog::heisenberg3());
    const Eigen::MatrixXd m = moment_map(mu);
    Eigen::VectorXd expect(3);
    expect << -1, -1, 1;
    CHECK((m - Eigen::MatrixXd(expect.asDiagonal())).norm() < 1e-14);
  }
  {
    const auto mu = BracketPoint::from_algebra(catalog::axb());
    const Eigen::MatrixXd m = moment_map(mu);
    Eigen::VectorXd expect(2);
    expect << -1, 0;
    CHECK((m - Eigen::MatrixXd(expect.asDiagonal())).norm() < 1e-14);
  }
  std::mt19937_64 rng(5);
  for (int rep = 0; rep < 10; ++rep) {
    const BracketPoint mu = random_bracket(4, rng);
    const Eigen::MatrixXd m = moment_map(mu);
    CHECK(m.trace() == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK((m - moment_map_pairing_oracle(mu)).norm() < 1e-12);
    CHECK((m - m.transpose()).norm() < 1e-12);
  }
}

TEST_CASE("moment map is equivariant under orthogonal basis change") {
  std::mt19937_64 rng(17);
  for (int rep = 0; rep < 10; ++rep) {
    const BracketPoint mu = random_bracket(5, rng);
    const Eigen::MatrixXd k = random_orthogonal(5, rng);
    const Eigen::MatrixXd lhs = moment_map(mu.act(k));
    const Eigen::MatrixXd rhs = k * moment_map(mu) * k.transpose();
    CHECK((lhs - rhs).norm() <= 1e-9 * std::max(1.0, rhs.norm()));
  }
}

TEST_CASE("moment map rejects the zero bracket") {
  const auto mu = BracketPoint::from_algebra(catalog::abelian(3));
  CHECK_THROWS_WITH_AS(moment_map(mu), "moment map undefined at origin", std::domain_error);
}

TEST_CASE("moment flow reproduces the catalog labels") {
  {
    // already critical: immediate convergence
    const auto res = moment_flow(BracketPoint::from_algebra(catalog::axb()), 100000, 1e-8);
    Eigen::VectorXd expect(2);
    expect << -1, 0;
    CHECK((res.beta - Eigen::MatrixXd(expect.asDiagonal())).norm() < 1e-8);
    CHECK(res.steps < 5);
    CHECK(res.criticality_residual <= 1e-8);
  }
  {
    const auto res = moment_flow(BracketPoint::from_algebra(catalog::heisenberg3()), 100000, 1e-8);
    Eigen::VectorXd expect(3);
    expect << -1, -1, 1;
    CHECK((res.beta - Eigen::MatrixXd(expect.asDiagonal())).norm() < 1e-8);
  }
  {
    // a rotated start converges to the conjugated label
    std::mt19937_64 rng(23);
    const Eigen::MatrixXd k = random_orthogonal(3, rng);
    const auto res = moment_flow(BracketPoint::from_algebra(catalog::heisenberg3()).act(k),
                                 100000, 1e-8);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(res.beta);
    Eigen::VectorXd expect(3);
    expect << -1, -1, 1;
    CHECK((es.eigenvalues() - expect).cwiseAbs().maxCoeff() < 1e-7);
  }
  {
    const auto res = moment_flow(BracketPoint::from_algebra(catalog::sl2r()), 100000, 1e-8);
    CHECK((res.beta + Eigen::MatrixXd::Identity(3, 3) / 3.0).norm() < 1e-6);
  }
  {
    const auto res = moment_flow(BracketPoint::from_algebra(catalog::su2()), 100000, 1e-8);
    CHECK((res.beta + Eigen::MatrixXd::Identity(3, 3) / 3.0).norm() < 1e-6);
  }
}

TEST_CASE("moment flow energy is non-increasing and the trace identities hold") {
  for (const char* name : {"axb", "heisenberg3", "sl2r", "e2_like_solvable"}) {
    CAPTURE(name);
    const auto res =
        moment_flow(BracketPoint::from_algebra(catalog::entry(name).algebra), 100000, 1e-8);
    for (size_t i = 1; i < res.energy_trace.size(); ++i)
      CHECK(res.energy_trace[i] <= res.energy_trace[i - 1] + 1e-12);
    const BetaData data(res.beta, BetaData::Source::kFlowEstimated, res.criticality_residual);
    const int n = data.dim();
    CHECK(std::abs(data.beta().trace() + 1.0) <= 1e-7);
    CHECK(std::abs(data.trace_beta_plus() - (n - 1.0 / data.beta_norm2())) <= 1e-7);
    CHECK(std::abs((data.beta_plus() * data.beta_plus()).trace() - data.trace_beta_plus()) <=
          1e-7);
  }
}

TEST_CASE("ad(beta) component decomposition") {
  const BetaData beta(Eigen::Vector2d(-1, 0).asDiagonal(), BetaData::Source::kCatalogSupplied);
  {
    // commuting input: a single zero component
    Eigen::MatrixXd E = Eigen::Vector2d(2.0, -3.0).asDiagonal();
    const auto comps = adbeta_components(E, beta.beta());
    REQUIRE(comps.size() == 1);
    CHECK(comps.count(0.0) == 1);
    CHECK((comps.at(0.0) - E).norm() < 1e-12);
  }
  {
    Eigen::MatrixXd E = Eigen::MatrixXd::Zero(2, 2);
    E(1, 0) = 1.0;  // gap b_2 - b_1 = +1
    const auto comps = adbeta_components(E, beta.beta());
    REQUIRE(comps.size() == 1);
    CHECK(comps.count(1.0) == 1);
  }
  std::mt19937_64 rng(31);
  for (int rep = 0; rep < 10; ++rep) {
    const Eigen::MatrixXd E = random_symmetric(4, rng);
    Eigen::VectorXd d(4);
    d << -0.7, -0.2, -0.2, 0.1;
    const auto comps = adbeta_components(E, Eigen::MatrixXd(d.asDiagonal()));
    Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(4, 4);
    for (const auto& [lambda, comp] : comps) {
      sum += comp;
      if (lambda != 0.0) {
        REQUIRE(comps.count(-lambda) == 1);
        CHECK((comps.at(-lambda) - comp.transpose()).norm() < 1e-10);
      }
    }
    CHECK((sum - E).norm() < 1e-12);
  }
}

TEST_CASE("parabolic completion") {
  const Eigen::MatrixXd beta = Eigen::Vector2d(-1, 0).asDiagonal();
  {
    const Eigen::MatrixXd S = Eigen::Vector2d(0.4, -1.2).asDiagonal();
    const Eigen::MatrixXd Q = q_completion(S, beta);
    CHECK((Q + S).norm() < 1e-12);
  }
  {
    const double s = 0.37;
    Eigen::MatrixXd S(2, 2);
    S << 0, s, s, 0;
    const Eigen::MatrixXd Q = q_completion(S, beta);
    Eigen::MatrixXd Qexp = Eigen::MatrixXd::Zero(2, 2);
    Qexp(1, 0) = -2.0 * s;
    CHECK((Q - Qexp).norm() < 1e-12);
    CHECK(((S + Q) + (S + Q).transpose()).norm() < 1e-12);
    CHECK(lq_pairing(S, Q, beta) == doctest::Approx(2.0 * s * s));
  }
}

TEST_CASE("parabolic completion pairing is nonnegative with commuting rigidity") {
  std::mt19937_64 rng(41);
  std::vector<Eigen::MatrixXd> betas;
  for (const auto& e : catalog::entries())
    if (e.beta) betas.push_back(*e.beta);
  int equality_seen = 0;
  for (const auto& beta : betas) {
    const int n = static_cast<int>(beta.rows());
    for (int rep = 0; rep < 60; ++rep) {
      const Eigen::MatrixXd S = random_symmetric(n, rng);
      const Eigen::MatrixXd Q = q_completion(S, beta);
      // Q has only nonnegative components; S + Q is skew
      for (const auto& [lambda, comp] : adbeta_components(Q, beta))
        if (lambda < -1e-9) CHECK(comp.norm() < 1e-10);
      CHECK(((S + Q) + (S + Q).transpose()).norm() < 1e-10 * std::max(1.0, S.norm()));
      const double pairing = lq_pairing(S, Q, beta);
      CHECK(pairing >= -1e-9);
      if (pairing <= 1e-9) {
        CHECK((Q * beta - beta * Q).norm() <= 1e-6);
        ++equality_seen;
      }
    }
    // engineered equality case: project S onto the centralizer of beta
    Eigen::MatrixXd S = random_symmetric(n, rng);
    Eigen::MatrixXd S0 = Eigen::MatrixXd::Zero(n, n);
    for (const auto& [lambda, comp] : adbeta_components(S, beta))
      if (lambda == 0.0) S0 += comp;
    const Eigen::MatrixXd Q0 = q_completion(S0, beta);
    CHECK(std::abs(lq_pairing(S0, Q0, beta)) <= 1e-9);
    CHECK((Q0 * beta - beta * Q0).norm() <= 1e-6);
    ++equality_seen;
  }
  CHECK(equality_seen > 0);
}

TEST_CASE("projector-type labels match the catalog") {
  for (const char* name : {"axb", "rh2", "rh3", "rh4", "rh5", "e2_like_solvable",
                           "sl2r_semidirect_r2", "nonstandard4", "sl2r", "su2", "sl2r_x2"}) {
    CAPTURE(name);
    const auto e = catalog::entry(name);
    const BetaData b = projector_type_beta(e.algebra);
    CHECK((b.beta() - *e.beta).norm() < 1e-9);
  }
  CHECK_THROWS_AS(projector_type_beta(catalog::heisenberg3()), ValidationError);
}

TEST_CASE("verify_beta passes on every catalog label") {
  std::mt19937_64 rng(77);
  for (const auto& e : catalog::entries()) {
    if (!e.beta) continue;
    CAPTURE(e.name);
    const auto space = e.name == "so23_so3"
                           ? catalog::so23_space()
                           : (e.isotropy ? HomogeneousSpace(e.algebra, *e.isotropy)
                                         : HomogeneousSpace::group(e.algebra));
    const InvariantMetric g(
        space, Eigen::MatrixXd::Identity(space.dim_m(), space.dim_m()));
    const BetaData beta(*e.beta, BetaData::Source::kCatalogSupplied);
    const auto rep = verify_beta(space, g, beta, 40, rng);
    CAPTURE(rep.beta_plus_min_eig);
    CAPTURE(rep.kernel_vs_nilrad_orth);
    CAPTURE(rep.h_in_kernel);
    CAPTURE(rep.max_negative_component);
    CAPTURE(rep.max_trace_pairing);
    CAPTURE(rep.min_ricci_pairing);
    CAPTURE(rep.max_equality_gap);
    CHECK(rep.passed);
  }
}

TEST_CASE("verify_beta detects equality cases at distinguished metrics") {
  std::mt19937_64 rng(78);
  {
    const auto space = HomogeneousSpace::group(catalog::axb());
    const InvariantMetric g(space, Eigen::MatrixXd::Identity(2, 2));
    const BetaData beta(*catalog::entry("axb").beta, BetaData::Source::kCatalogSupplied);
    const auto rep = verify_beta(space, g, beta, 5, rng);
    CHECK(rep.equality_cases >= 1);  // q = Id: beta+ = diag(0,1) is a derivation
    CHECK(rep.max_equality_gap <= 1e-8);
  }
  {
    const auto space = HomogeneousSpace::group(catalog::heisenberg3());
    const InvariantMetric g(space, Eigen::MatrixXd::Identity(3, 3));
    const BetaData beta(*catalog::entry("heisenberg3").beta, BetaData::Source::kCatalogSupplied);
    const auto rep = verify_beta(space, g, beta, 5, rng);
    CHECK(rep.equality_cases >= 1);  // the identity metric is the nilsoliton
    CHECK(rep.max_equality_gap <= 1e-8);
  }
}

TEST_CASE("verify_beta fails loudly on a wrong label") {
  std::mt19937_64 rng(79);
  const auto space = HomogeneousSpace::group(catalog::axb());
  const InvariantMetric g(space, Eigen::MatrixXd::Identity(2, 2));
  const BetaData wrong(Eigen::Vector2d(0, -1).asDiagonal(), BetaData::Source::kCatalogSupplied);
  const auto rep = verify_beta(space, g, wrong, 5, rng);
  CHECK_FALSE(rep.passed);
  CHECK(rep.kernel_vs_nilrad_orth > 0.5);
}
