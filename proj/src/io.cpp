#include "nary/io.hpp"

#include <fstream>
#include <sstream>

#include "nary/catalog.hpp"

namespace nary {

namespace {

Rational value_from_json(const nlohmann::json& v) {
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_string()) {
    auto r = try_rational_from_string(v.get<std::string>());
    if (r) return *r;
  }
  throw InputError("constant values must be integers or \"p/q\" strings");
}

}  // namespace

NAryAlgebra algebra_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InputError("algebra file must be a JSON object");
  for (const char* field : {"arity", "dim", "symmetry", "constants"})
    if (!j.contains(field)) throw InputError(std::string("missing field '") + field + "'");

  if (!j["arity"].is_number_integer() || !j["dim"].is_number_integer())
    throw InputError("arity and dim must be integers");
  int arity = j["arity"].get<int>();
  int dim = j["dim"].get<int>();
  if (arity < 2) throw InputError("arity must be >= 2");
  if (dim < 1) throw InputError("dim must be >= 1");

  auto symmetry = j["symmetry"].is_string() ? symmetry_from_string(j["symmetry"].get<std::string>())
                                            : std::nullopt;
  if (!symmetry) throw InputError("symmetry must be one of \"full\", \"first_n_minus_1\", \"none\"");

  NAryAlgebra a(arity, dim, *symmetry, j.value("name", std::string{}));

  if (!j["constants"].is_array()) throw InputError("constants must be an array");
  for (const auto& entry : j["constants"]) {
    if (!entry.is_object() || !entry.contains("idx") || !entry.contains("target") || !entry.contains("value"))
      throw InputError("each constant needs idx, target and value");
    if (!entry["idx"].is_array() || static_cast<int>(entry["idx"].size()) != arity)
      throw InputError("idx must list exactly arity basis indices");
    std::vector<int> idx;
    for (const auto& v : entry["idx"]) {
      if (!v.is_number_integer()) throw InputError("idx entries must be integers");
      idx.push_back(v.get<int>());
    }
    if (!entry["target"].is_number_integer()) throw InputError("target must be an integer");
    try {
      a.set_constant(std::move(idx), entry["target"].get<int>(), value_from_json(entry["value"]));
    } catch (const std::domain_error& e) {
      throw InputError(e.what());
    }
  }

  if (j.contains("metric")) {
    const auto& m = j["metric"];
    if (!m.is_array() || static_cast<int>(m.size()) != dim) throw InputError("metric must be a dim x dim array");
    Matrix g(dim, dim);
    for (int i = 0; i < dim; ++i) {
      if (!m[i].is_array() || static_cast<int>(m[i].size()) != dim)
        throw InputError("metric must be a dim x dim array");
      for (int c = 0; c < dim; ++c) g.at(i, c) = value_from_json(m[i][c]);
    }
    try {
      a.set_metric(std::move(g));
    } catch (const std::domain_error& e) {
      throw InputError(e.what());
    }
  }
  return a;
}

nlohmann::ordered_json algebra_to_json(const NAryAlgebra& a) {
  nlohmann::ordered_json j;
  j["name"] = a.name();
  j["arity"] = a.arity();
  j["dim"] = a.dim();
  j["symmetry"] = to_string(a.symmetry());
  j["constants"] = nlohmann::ordered_json::array();
  for (const auto& [key, v] : a.constants()) {
    nlohmann::ordered_json entry;
    entry["idx"] = key.args;
    entry["target"] = key.target;
    entry["value"] = to_string(v);
    j["constants"].push_back(std::move(entry));
  }
  if (a.metric()) {
    auto rows = nlohmann::ordered_json::array();
    for (int i = 0; i < a.dim(); ++i) {
      auto row = nlohmann::ordered_json::array();
      for (int c = 0; c < a.dim(); ++c) row.push_back(to_string(a.metric()->at(i, c)));
      rows.push_back(std::move(row));
    }
    j["metric"] = std::move(rows);
  }
  return j;
}

NAryAlgebra load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("JSON parse error in '" + path + "': " + e.what());
  }
  return algebra_from_json(j);
}

void save_algebra_file(const NAryAlgebra& a, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << algebra_to_json(a).dump(2) << "\n";
}

NAryAlgebra resolve_algebra(const std::string& name_or_path) {
  if (auto a = catalog_by_name(name_or_path)) return std::move(*a);
  if (std::ifstream probe(name_or_path); probe.good()) return load_algebra_file(name_or_path);
  throw InputError("'" + name_or_path + "' is neither a catalog name nor a readable file");
}

std::string digest(const NAryAlgebra& a) {
  std::ostringstream content;
  content << a.arity() << ';' << a.dim() << ';' << to_string(a.symmetry()) << ';';
  for (const auto& [key, v] : a.constants()) {
    for (int i : key.args) content << i << ',';
    content << '>' << key.target << '=' << to_string(v) << ';';
  }
  if (a.metric()) {
    content << "g:";
    for (int i = 0; i < a.dim(); ++i)
      for (int c = 0; c < a.dim(); ++c) content << to_string(a.metric()->at(i, c)) << ',';
  }
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (char c : content.str()) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ull;
  }
  std::ostringstream hex;
  hex << std::hex;
  hex.width(16);
  hex.fill('0');
  hex << h;
  return hex.str();
}

}  // namespace nary
