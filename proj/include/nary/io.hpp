#pragma once

#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "nary/algebra.hpp"

namespace nary {

// Malformed or unresolvable input (files, names, shapes). CLI exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// JSON interchange schema:
//   { "name": str, "arity": int, "dim": int,
//     "symmetry": "full" | "first_n_minus_1" | "none",
//     "constants": [ {"idx": [int,...], "target": int, "value": "p/q"}, ... ],
//     "metric": [ ["p/q", ...], ... ] }            (optional)
// Non-canonical idx entries are folded in with their permutation sign;
// contradictory duplicates for one canonical key are an error.
NAryAlgebra algebra_from_json(const nlohmann::json& j);
nlohmann::ordered_json algebra_to_json(const NAryAlgebra& a);

NAryAlgebra load_algebra_file(const std::string& path);
void save_algebra_file(const NAryAlgebra& a, const std::string& path);

// Catalog name if it resolves, otherwise a file path.
NAryAlgebra resolve_algebra(const std::string& name_or_path);

// FNV-1a 64 hex digest of the canonical content (name excluded).
std::string digest(const NAryAlgebra& a);

}  // namespace nary
