#include "riccilab/json_io.hpp"

#include <fstream>
#include <nlohmann/json.hpp>

namespace riccilab::io {

json algebra_to_json(const LieAlgebra& L) {
  json j;
  j["dim"] = L.dim();
  j["labels"] = L.labels();
  json brackets = json::array();
  for (int k = 0; k < L.dim(); ++k)
    for (int i = 0; i < L.dim(); ++i)
      for (int jj = i + 1; jj < L.dim(); ++jj)
        if (L.component(k)(i, jj) != 0.0)
          brackets.push_back({i, jj, k, L.component(k)(i, jj)});
  j["brackets"] = brackets;
  return j;
}

LieAlgebra algebra_from_json(const json& j) {
  if (!j.contains("dim") || !j.contains("brackets"))
    throw ValidationError("algebra json: missing 'dim' or 'brackets'");
  const int n = j.at("dim").get<int>();
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
  std::vector<std::tuple<int, int, int, double>> br;
  for (const auto& e : j.at("brackets")) {
    if (!e.is_array() || e.size() != 4)
      throw ValidationError("algebra json: bracket entries must be [i, j, k, value]");
    const int i = e[0].get<int>(), jj = e[1].get<int>(), k = e[2].get<int>();
    if (i >= jj)
      throw ValidationError("algebra json: bracket entries must have i < j");
    br.emplace_back(i, jj, k, e[3].get<double>());
  }
  return LieAlgebra(n, std::move(labels), br);
}

json subspace_to_json(const Subspace& s) {
  json rows = json::array();
  for (int c = 0; c < s.dim(); ++c) {
    json row = json::array();
    for (int r = 0; r < s.ambient_dim(); ++r) row.push_back(s.basis()(r, c));
    rows.push_back(row);
  }
  return json{{"basis", rows}};
}

Subspace subspace_from_json(const json& j, int ambient_dim) {
  if (!j.contains("basis")) throw ValidationError("subspace json: missing 'basis'");
  const auto& rows = j.at("basis");
  Eigen::MatrixXd basis(ambient_dim, static_cast<int>(rows.size()));
  int c = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != ambient_dim)
      throw ValidationError("subspace json: basis vector has wrong length");
    for (int r = 0; r < ambient_dim; ++r) basis(r, c) = row[r].get<double>();
    ++c;
  }
  return Subspace(ambient_dim, basis);
}

json matrix_to_json(const Eigen::MatrixXd& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(row);
  }
  return rows;
}

Eigen::MatrixXd matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw ValidationError("matrix json: expected nested arrays");
  const int rows = static_cast<int>(j.size());
  const int cols = static_cast<int>(j[0].size());
  Eigen::MatrixXd m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    if (static_cast<int>(j[r].size()) != cols)
      throw ValidationError("matrix json: ragged rows");
    for (int c = 0; c < cols; ++c) m(r, c) = j[r][c].get<double>();
  }
  return m;
}

json beta_to_json(const BetaData& b) {
  json j;
  j["beta"] = matrix_to_json(b.beta());
  j["source"] = b.source() == BetaData::Source::kCatalogSupplied ? "catalog" : "flow";
  j["criticality_residual"] = b.criticality_residual();
  return j;
}

BetaData beta_from_json(const json& j) {
  if (!j.contains("beta")) throw ValidationError("beta json: missing 'beta'");
  const Eigen::MatrixXd beta = matrix_from_json(j.at("beta"));
  const std::string source = j.value("source", "catalog");
  const double crit = j.value("criticality_residual", 0.0);
  return BetaData(beta,
                  source == "flow" ? BetaData::Source::kFlowEstimated
                                   : BetaData::Source::kCatalogSupplied,
                  crit);
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ValidationError("invalid json in " + path + ": " + e.what());
  }
  return j;
}

void save_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write file: " + path);
  out << j.dump(2) << "\n";
}

}  // namespace riccilab::io
