#include "homalg/algebra_io.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace homalg {

namespace {

using Json = nlohmann::ordered_json;

Json matrix_to_json(const LinearMap& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.dim(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.dim(); ++j) row.push_back(m.at(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

LinearMap matrix_from_json(const Json& rows, int dim, const std::string& where) {
  if (!rows.is_array() || static_cast<int>(rows.size()) != dim)
    throw std::invalid_argument(where + ": expected " + std::to_string(dim) + " rows");
  LinearMap m(dim);
  for (int i = 0; i < dim; ++i) {
    const Json& row = rows[i];
    if (!row.is_array() || static_cast<int>(row.size()) != dim)
      throw std::invalid_argument(where + "[" + std::to_string(i) + "]: expected " +
                                  std::to_string(dim) + " entries");
    for (int j = 0; j < dim; ++j) {
      if (!row[j].is_string())
        throw std::invalid_argument(where + "[" + std::to_string(i) + "][" +
                                    std::to_string(j) + "]: expected rational string");
      try {
        m.at(i, j) = Rational::parse(row[j].get<std::string>());
      } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(where + "[" + std::to_string(i) + "][" +
                                    std::to_string(j) + "]: " + e.what());
      }
    }
  }
  return m;
}

}  // namespace

std::string algebra_to_json(const HomAlgebra& h) {
  Json j;
  j["format_version"] = 1;
  j["dim"] = h.dim();
  if (!h.labels().empty()) j["labels"] = h.labels();
  Json sc = Json::array();
  for (const ScEntry& e : h.structure_constants())
    sc.push_back(Json::array({e.i, e.j, e.k, e.value.str()}));
  j["structure_constants"] = std::move(sc);
  j["alpha"] = matrix_to_json(h.alpha());
  if (h.conjugation()) j["conjugation"] = matrix_to_json(*h.conjugation());
  if (!h.metadata().empty()) {
    Json meta;
    for (const auto& [k, v] : h.metadata()) meta[k] = v;
    j["metadata"] = std::move(meta);
  }
  return j.dump(2) + "\n";
}

void save_algebra(const HomAlgebra& h, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << algebra_to_json(h);
}

HomAlgebra algebra_from_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("parse error: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("top level must be an object");

  static const std::set<std::string> known = {
      "format_version", "dim", "labels", "structure_constants",
      "alpha",          "conjugation",   "metadata"};
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (!known.count(key))
      throw std::invalid_argument("unknown field '" + key + "' at /" + key);
  }
  for (const char* req : {"format_version", "dim", "structure_constants", "alpha"})
    if (!j.contains(req))
      throw std::invalid_argument(std::string("missing field '") + req + "'");
  if (!j["format_version"].is_number_integer() || j["format_version"].get<int>() != 1)
    throw std::invalid_argument("unsupported format_version");
  if (!j["dim"].is_number_integer())
    throw std::invalid_argument("/dim: expected integer");
  const int dim = j["dim"].get<int>();
  if (dim < 1) throw std::invalid_argument("/dim: must be positive");

  std::vector<ScEntry> sc;
  const Json& scJson = j["structure_constants"];
  if (!scJson.is_array())
    throw std::invalid_argument("/structure_constants: expected array");
  for (std::size_t n = 0; n < scJson.size(); ++n) {
    const std::string where = "/structure_constants[" + std::to_string(n) + "]";
    const Json& row = scJson[n];
    if (!row.is_array() || row.size() != 4)
      throw std::invalid_argument(where + ": expected [i, j, k, \"p/q\"]");
    for (int t = 0; t < 3; ++t)
      if (!row[t].is_number_integer())
        throw std::invalid_argument(where + ": indices must be integers");
    const int i = row[0].get<int>(), jj = row[1].get<int>(), k = row[2].get<int>();
    if (i < 0 || i >= dim || jj < 0 || jj >= dim || k < 0 || k >= dim)
      throw std::invalid_argument(where + ": index out of range [0," +
                                  std::to_string(dim) + ")");
    if (!row[3].is_string())
      throw std::invalid_argument(where + ": value must be a rational string");
    try {
      sc.push_back({i, jj, k, Rational::parse(row[3].get<std::string>())});
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(where + ": " + e.what());
    }
  }

  const LinearMap alpha = matrix_from_json(j["alpha"], dim, "/alpha");
  std::optional<LinearMap> conj;
  if (j.contains("conjugation"))
    conj = matrix_from_json(j["conjugation"], dim, "/conjugation");

  std::vector<std::string> labels;
  if (j.contains("labels")) {
    const Json& lj = j["labels"];
    if (!lj.is_array() || static_cast<int>(lj.size()) != dim)
      throw std::invalid_argument("/labels: expected " + std::to_string(dim) + " strings");
    for (const auto& l : lj) {
      if (!l.is_string()) throw std::invalid_argument("/labels: expected strings");
      labels.push_back(l.get<std::string>());
    }
  }

  std::map<std::string, std::string> metadata;
  if (j.contains("metadata")) {
    const Json& mj = j["metadata"];
    if (!mj.is_object()) throw std::invalid_argument("/metadata: expected object");
    for (const auto& [k, v] : mj.items()) {
      if (!v.is_string()) throw std::invalid_argument("/metadata/" + k + ": expected string");
      metadata[k] = v.get<std::string>();
    }
  }

  return HomAlgebra(dim, sc, alpha, labels, conj, metadata);
}

HomAlgebra load_algebra(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return algebra_from_json(buf.str());
}

}  // namespace homalg
