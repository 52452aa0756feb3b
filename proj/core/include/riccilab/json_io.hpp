#pragma once

#include <nlohmann/json_fwd.hpp>
#include <optional>
#include <string>

#include "riccilab/lie_algebra.hpp"
#include "riccilab/stratum.hpp"
#include "riccilab/subspace.hpp"

namespace riccilab::io {

using nlohmann::json;

/// Lie algebra schema: {"dim": n, "labels": [...], "brackets": [[i,j,k,v],...]}
/// with 0-based indices and only i < j entries stored.
json algebra_to_json(const LieAlgebra& L);
LieAlgebra algebra_from_json(const json& j);

/// Subspace schema: {"basis": [[...], ...]} with one row per basis vector.
json subspace_to_json(const Subspace& s);
Subspace subspace_from_json(const json& j, int ambient_dim);

/// Dense matrices as row-major nested arrays.
json matrix_to_json(const Eigen::MatrixXd& m);
Eigen::MatrixXd matrix_from_json(const json& j);

/// Beta schema: {"beta": [[...]], "source": "catalog"|"flow",
/// "criticality_residual": x}.
json beta_to_json(const BetaData& b);
BetaData beta_from_json(const json& j);

json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const json& j);

}  // namespace riccilab::io
