// Regenerates the shipped catalog JSON files from the built-in constructors.
// Usage: riccilab-gen-catalog <output-dir>

#include <iostream>
#include <nlohmann/json.hpp>

#include "riccilab/catalog.hpp"
#include "riccilab/json_io.hpp"

using namespace riccilab;
using nlohmann::json;

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: riccilab-gen-catalog <output-dir>\n";
    return 2;
  }
  const std::string dir = argv[1];
  json index = json::array();
  for (const auto& e : catalog::entries()) {
    json meta;
    meta["name"] = e.name;
    meta["algebra"] = e.name + ".json";
    meta["dim"] = e.algebra.dim();
    meta["notes"] = e.notes;
    io::save_json_file(dir + "/" + e.name + ".json", io::algebra_to_json(e.algebra));
    if (e.beta) {
      const BetaData b(*e.beta, BetaData::Source::kCatalogSupplied);
      io::save_json_file(dir + "/" + e.name + ".beta.json", io::beta_to_json(b));
      meta["beta"] = e.name + ".beta.json";
    }
    if (e.isotropy) {
      io::save_json_file(dir + "/" + e.name + ".isotropy.json", io::subspace_to_json(*e.isotropy));
      meta["isotropy"] = e.name + ".isotropy.json";
    }
    if (e.cartan_involution) {
      io::save_json_file(dir + "/" + e.name + ".theta.json",
                         json{{"theta", io::matrix_to_json(*e.cartan_involution)}});
      meta["cartan_involution"] = e.name + ".theta.json";
    }
    if (e.einstein_metric) {
      io::save_json_file(dir + "/" + e.name + ".metric.json",
                         json{{"G", io::matrix_to_json(*e.einstein_metric)}});
      meta["einstein_metric"] = e.name + ".metric.json";
    }
    index.push_back(meta);
  }
  io::save_json_file(dir + "/index.json", index);
  std::cout << "wrote " << index.size() << " catalog entries to " << dir << "\n";
  return 0;
}
