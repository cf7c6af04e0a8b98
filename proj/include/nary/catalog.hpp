#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nary/algebra.hpp"

namespace nary {

// Sign factors eps_a of the simple Filippov algebra family.
struct Signature {
  std::vector<int> signs;  // entries +1 / -1, length n+1

  static Signature euclidean(int count) { return Signature{std::vector<int>(count, 1)}; }
  static Signature lorentzian(int minus, int plus);
};

// The (n+1)-dimensional simple Filippov algebra with
// [e_1,...,e-hat_a,...,e_{n+1}] = (-1)^{a+1} eps_a e_a. Carries the invariant
// metric g = diag(eps) and is FI-checked at construction.
NAryAlgebra simple_fa(int arity, const Signature& sig);

// All-zero brackets on N generators.
NAryAlgebra abelian(int arity, int dim);

// Block sum: cross-block constants vanish; metrics combine blockwise when
// both summands carry one.
NAryAlgebra direct_sum(const NAryAlgebra& a, const NAryAlgebra& b);

// Resolves catalog names: "A4".."A9", "A_s_t", "so3", "so12",
// "abelian:n:N", "sum:<item>:<item>". Returns nullopt for unknown names.
std::optional<NAryAlgebra> catalog_by_name(const std::string& name);

}  // namespace nary
