#include "riccilab/catalog.hpp"

#include <cmath>

namespace riccilab::catalog {

namespace {

using Brackets = std::vector<std::tuple<int, int, int, double>>;

Eigen::MatrixXd diag(std::initializer_list<double> d) {
  Eigen::VectorXd v(static_cast<int>(d.size()));
  int i = 0;
  for (double x : d) v(i++) = x;
  return v.asDiagonal();
}

}  // namespace

LieAlgebra abelian(int n) {
  return LieAlgebra(n, {}, {});
}

LieAlgebra heisenberg3() {
  return LieAlgebra(3, {"e1", "e2", "e3"}, Brackets{{0, 1, 2, 1.0}});
}

LieAlgebra axb() {
  return LieAlgebra(2, {"A", "X"}, Brackets{{0, 1, 1, 1.0}});
}

LieAlgebra rh(int n) {
  if (n < 2) throw ValidationError("rh: need n >= 2");
  std::vector<std::string> labels{"A"};
  Brackets br;
  for (int i = 1; i < n; ++i) {
    labels.push_back("X" + std::to_string(i));
    br.emplace_back(0, i, i, 1.0);
  }
  return LieAlgebra(n, labels, br);
}

LieAlgebra e2_like_solvable() {
  // [A, X] = Y, [A, Y] = -X: unimodular solvable, non-nilpotent
  return LieAlgebra(3, {"A", "X", "Y"}, Brackets{{0, 1, 2, 1.0}, {0, 2, 1, -1.0}});
}

LieAlgebra sl2r() {
  return LieAlgebra(3, {"H", "E", "F"},
                    Brackets{{0, 1, 1, 2.0}, {0, 2, 2, -2.0}, {1, 2, 0, 1.0}});
}

LieAlgebra sl2r_x2() {
  Brackets br;
  for (int blk = 0; blk < 2; ++blk) {
    const int o = 3 * blk;
    br.emplace_back(o + 0, o + 1, o + 1, 2.0);
    br.emplace_back(o + 0, o + 2, o + 2, -2.0);
    br.emplace_back(o + 1, o + 2, o + 0, 1.0);
  }
  return LieAlgebra(6, {"H1", "E1", "F1", "H2", "E2", "F2"}, br);
}

LieAlgebra su2() {
  return LieAlgebra(3, {"e1", "e2", "e3"},
                    Brackets{{0, 1, 2, 1.0}, {1, 2, 0, 1.0}, {0, 2, 1, -1.0}});
}

LieAlgebra sl2r_semidirect_r2() {
  // sl(2,R) acting on R^2 = span(u, v) by the defining representation
  Brackets br{{0, 1, 1, 2.0}, {0, 2, 2, -2.0}, {1, 2, 0, 1.0},
              {0, 3, 3, 1.0}, {0, 4, 4, -1.0}, {1, 4, 3, 1.0}, {2, 3, 4, 1.0}};
  return LieAlgebra(5, {"H", "E", "F", "u", "v"}, br);
}

LieAlgebra nonstandard4() {
  // [A1,X] = X, [A1,Y] = Y, [A2,X] = -Y, [A2,Y] = X: nilradical span(X, Y)
  Brackets br{{0, 2, 2, 1.0}, {0, 3, 3, 1.0}, {1, 2, 3, -1.0}, {1, 3, 2, 1.0}};
  return LieAlgebra(4, {"A1", "A2", "X", "Y"}, br);
}

Eigen::MatrixXd nonstandard4_skewed_metric() {
  // mixes A2 with X so the metric complement of the nilradical fails to close
  Eigen::MatrixXd G = Eigen::MatrixXd::Identity(4, 4);
  G(1, 1) = 2.0;
  G(1, 2) = -1.0;
  G(2, 1) = -1.0;
  return G;
}

LieAlgebra so23() {
  const int N = 5;
  auto unit = [&](int r, int c) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(N, N);
    m(r, c) = 1.0;
    return m;
  };
  std::vector<Eigen::MatrixXd> basis;
  std::vector<std::string> labels;
  basis.push_back(unit(0, 1) - unit(1, 0));  // so(2)
  labels.push_back("a");
  const int so3_pairs[3][2] = {{2, 3}, {2, 4}, {3, 4}};
  for (int i = 0; i < 3; ++i) {
    basis.push_back(unit(so3_pairs[i][0], so3_pairs[i][1]) -
                    unit(so3_pairs[i][1], so3_pairs[i][0]));
    labels.push_back("c" + std::to_string(i + 1));
  }
  for (int i = 0; i < 2; ++i)
    for (int al = 0; al < 3; ++al) {
      basis.push_back(unit(i, 2 + al) + unit(2 + al, i));
      labels.push_back("b" + std::to_string(i) + std::to_string(al));
    }
  const int n = static_cast<int>(basis.size());
  auto pair = [](const Eigen::MatrixXd& X, const Eigen::MatrixXd& Y) {
    return 0.5 * (X.transpose() * Y).trace();
  };
  std::vector<Eigen::MatrixXd> comps(n, Eigen::MatrixXd::Zero(n, n));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Eigen::MatrixXd C = basis[i] * basis[j] - basis[j] * basis[i];
      for (int k = 0; k < n; ++k) {
        const double v = pair(C, basis[k]);
        comps[k](i, j) = v;
        comps[k](j, i) = -v;
      }
    }
  return LieAlgebra(std::move(comps), labels);
}

Eigen::MatrixXd so23_metric(double s, const Eigen::Matrix2d& P) {
  // m-basis order: (a, b00, b01, b02, b10, b11, b12)
  Eigen::MatrixXd G = Eigen::MatrixXd::Zero(7, 7);
  G(0, 0) = s;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int al = 0; al < 3; ++al) G(1 + 3 * i + al, 1 + 3 * j + al) = P(i, j);
  return G;
}

HomogeneousSpace so23_space() {
  LieAlgebra alg = so23();
  Eigen::MatrixXd iso = Eigen::MatrixXd::Zero(10, 3);
  iso(1, 0) = iso(2, 1) = iso(3, 2) = 1.0;
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(10, 7);
  m(0, 0) = 1.0;
  for (int j = 0; j < 6; ++j) m(4 + j, 1 + j) = 1.0;
  return HomogeneousSpace(std::move(alg), Subspace(10, iso), Subspace(10, m));
}

std::vector<Entry> entries() {
  std::vector<Entry> out;

  out.push_back(Entry{"abelian3", abelian(3), {}, {}, {}, {},
                      "flat R^3; zero bracket, no stratum label"});

  out.push_back(Entry{"heisenberg3", heisenberg3(), {}, {},
                      diag({-1.0, -1.0, 1.0}), {},
                      "Heisenberg algebra, [e1,e2] = e3; the identity metric is the nilsoliton"});

  out.push_back(Entry{"axb", axb(), {}, {}, diag({-1.0, 0.0}),
                      Eigen::MatrixXd::Identity(2, 2),
                      "hyperbolic plane as a solvable group, [A,X] = X"});

  for (int n = 2; n <= 5; ++n) {
    Eigen::MatrixXd beta = Eigen::MatrixXd::Zero(n, n);
    beta(0, 0) = -1.0;
    out.push_back(Entry{"rh" + std::to_string(n), rh(n), {}, {}, beta,
                        Eigen::MatrixXd::Identity(n, n),
                        "real hyperbolic space RH^" + std::to_string(n) +
                            " as a solvable group, [A,X_i] = X_i"});
  }

  out.push_back(Entry{"e2_like_solvable", e2_like_solvable(), {}, {},
                      diag({-1.0, 0.0, 0.0}), {},
                      "unimodular solvable rotation algebra, [A,X] = Y, [A,Y] = -X"});

  {
    // Cartan involution for sl(2,R) in the (H, E, F) basis: negative
    // transpose of the defining representation swaps E and F.
    Eigen::MatrixXd theta = Eigen::MatrixXd::Zero(3, 3);
    theta(0, 0) = -1.0;
    theta(1, 2) = -1.0;
    theta(2, 1) = -1.0;
    out.push_back(Entry{"sl2r", sl2r(), {}, theta,
                        Eigen::MatrixXd(-Eigen::MatrixXd::Identity(3, 3) / 3.0), {},
                        "split simple rank one; Iwasawa subalgebra span(H, E)"});
  }

  {
    Eigen::MatrixXd theta = Eigen::MatrixXd::Zero(6, 6);
    for (int blk = 0; blk < 2; ++blk) {
      const int o = 3 * blk;
      theta(o, o) = -1.0;
      theta(o + 1, o + 2) = -1.0;
      theta(o + 2, o + 1) = -1.0;
    }
    out.push_back(Entry{"sl2r_x2", sl2r_x2(), {}, theta,
                        Eigen::MatrixXd(-Eigen::MatrixXd::Identity(6, 6) / 6.0), {},
                        "product of two split simple factors"});
  }

  out.push_back(Entry{"su2", su2(), {}, Eigen::MatrixXd::Identity(3, 3),
                      Eigen::MatrixXd(-Eigen::MatrixXd::Identity(3, 3) / 3.0), {},
                      "compact form; -B is the round bi-invariant metric"});

  {
    Eigen::MatrixXd beta = Eigen::MatrixXd::Zero(5, 5);
    beta(0, 0) = beta(1, 1) = beta(2, 2) = -1.0 / 3.0;
    out.push_back(Entry{"sl2r_semidirect_r2", sl2r_semidirect_r2(), {}, {}, beta, {},
                        "sl(2,R) acting on R^2 by the defining representation; "
                        "Levi factor span(H,E,F), radical span(u,v)"});
  }

  out.push_back(Entry{"nonstandard4", nonstandard4(), {}, {},
                      diag({-0.5, -0.5, 0.0, 0.0}), {},
                      "solvable with rotating part; the shipped skewed metric "
                      "makes the nilradical complement non-closed"});

  {
    LieAlgebra alg = so23();
    Eigen::MatrixXd iso = Eigen::MatrixXd::Zero(10, 3);
    iso(1, 0) = iso(2, 1) = iso(3, 2) = 1.0;
    Eigen::VectorXd th(10);
    th << 1, 1, 1, 1, -1, -1, -1, -1, -1, -1;
    out.push_back(Entry{"so23_so3", std::move(alg), Subspace(10, iso),
                        Eigen::MatrixXd(th.asDiagonal()),
                        Eigen::MatrixXd(-Eigen::MatrixXd::Identity(10, 10) / 10.0), {},
                        "hyperquadric presentation so(2,3)/so(3) with the "
                        "block Cartan involution and a 4-parameter metric family"});
  }
  return out;
}

Entry entry(const std::string& name) {
  for (auto& e : entries())
    if (e.name == name) return e;
  throw ValidationError("catalog: no entry named '" + name + "'");
}

}  // namespace riccilab::catalog
