#pragma once

#include <vector>

#include "nary/algebra.hpp"

namespace nary {

// Linear subspace of the algebra carrier, kept as an echelonized basis.
struct Subspace {
  std::vector<Vector> basis;

  int dimension() const { return static_cast<int>(basis.size()); }
};

// Echelonizes a spanning set into a canonical basis.
Subspace make_subspace(int dim, const std::vector<Vector>& spanning);

bool subspace_contains(const Subspace& s, const Vector& v);

struct DerivedSeriesReport {
  std::vector<int> dims;  // I^(0), I^(1), ... up to and including the first repeat or 0
  bool solvable = false;
};

// Derived series I^(s) = [I^(s-1),...,I^(s-1)]; solvable iff it reaches 0.
DerivedSeriesReport derived_series(const NAryAlgebra& a);

// Trace form k(X,Y) = Tr(ad_X ad_Y) on the canonical fundamental-object basis.
Matrix kasymov_form(const NAryAlgebra& a);

struct SemisimpleReport {
  bool semisimple = false;
  std::vector<Vector> kernel;  // degenerate directions, empty iff semisimple
};

// Cartan-like criterion: semisimple iff k(Z, ...) = 0 over all canonical
// completions and all fundamental objects forces Z = 0.
SemisimpleReport is_semisimple(const NAryAlgebra& a);

// True iff [G,...,G,Z] lands in s for every basis completion and Z in s.
bool is_ideal(const NAryAlgebra& a, const Subspace& s);

struct LieAlgebraReport {
  int dim = 0;
  std::vector<Matrix> basis;  // echelonized span of the inner derivations
  bool closure_ok = false;    // every pairwise commutator stays in the span
};

// The ordinary Lie algebra generated by the inner derivations ad_X.
LieAlgebraReport lie_algebra_of(const NAryAlgebra& a);

struct MetricReport {
  bool invariance = false;             // f_{a..b}^l g_{lc} + f_{a..c}^l g_{bl} = 0
  bool lowered_antisymmetric = false;  // f_{a_1..a_{n+1}} fully antisymmetric
  bool invariant_tensor = false;       // sum_i f_{a..b_i}^l f_{b_1..l..b_{n+1}} = 0

  bool all_ok() const { return invariance && lowered_antisymmetric && invariant_tensor; }
};

// Exact metric-invariance checks; requires an attached symmetric metric.
MetricReport metric_checks(const NAryAlgebra& a);

}  // namespace nary
