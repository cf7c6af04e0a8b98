#pragma once

#include "nary/algebra.hpp"

namespace nary {

// Fully antisymmetric even-arity structure constants Omega_{i_1..i_n}^j.
// The characteristic identity is the generalized Jacobi identity; a tensor
// satisfying it is simultaneously a linear generalized Poisson tensor.
class GLATensor {
 public:
  GLATensor(int arity, int dim, std::string name = {});
  explicit GLATensor(NAryAlgebra constants);  // must be FullSkew, even arity

  const NAryAlgebra& constants() const { return alg_; }
  int arity() const { return alg_.arity(); }
  int dim() const { return alg_.dim(); }

  void set(std::vector<int> indices, int target, const Rational& v) {
    alg_.set_constant(std::move(indices), target, v);
  }

 private:
  NAryAlgebra alg_;
};

struct GjiWitness {
  std::vector<int> block;  // canonical (2n-1)-subset being antisymmetrized
  int target = 0;
  Rational violation;
};

struct GjiReport {
  Rational max_violation;
  std::vector<GjiWitness> witnesses;

  bool ok() const { return witnesses.empty(); }
};

// Antisymmetrized double contraction Omega_{[j_1..j_n}^l Omega_{j_{n+1}..j_{2n-1}]l}^s,
// enumerated over canonical shuffles of strictly increasing (2n-1)-subsets.
// Zero iff Omega defines a generalized Lie algebra.
GjiReport gji_residual(const GLATensor& omega);

}  // namespace nary
