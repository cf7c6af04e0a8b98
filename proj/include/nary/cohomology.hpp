#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nary/algebra.hpp"

namespace nary {

// Action of the algebra on cochain values: scalars (central extensions) or
// the algebra itself (deformations).
enum class Action { Trivial, Adjoint };

std::string to_string(Action a);

// One-cochain complex over a Filippov algebra, in either the fully
// antisymmetric class or the restricted n-Leibniz class (cochains skew in the
// first n-1 arguments only). Owns the algebra plus the precomputed ad and
// composition tables every assembly needs.
class ComplexSpec {
 public:
  ComplexSpec(NAryAlgebra algebra, Action action, Symmetry symmetry);

  const NAryAlgebra& algebra() const { return algebra_; }
  Action action() const { return action_; }
  Symmetry symmetry() const { return symmetry_; }

  int value_dim() const { return action_ == Action::Adjoint ? algebra_.dim() : 1; }
  int arg_count() const;
  int cochain_dim() const { return arg_count() * value_dim(); }
  int degree0_dim() const { return action_ == Action::Adjoint ? algebra_.dim() * algebra_.dim() : algebra_.dim(); }

  // Cochain argument (X_1..X_{n-1}; Z) -> (argument index, fold sign);
  // nullopt when the full-skew fold degenerates. t must be canonical.
  std::optional<std::pair<int, int>> arg_index(std::span<const int> t, int z) const;

  std::string coordinate_label(int coord) const;

  const SubsetIndexer& fo() const { return fo_; }
  const SubsetIndexer& full_args() const { return full_args_; }
  const Matrix& ad(int fo_rank) const { return ad_[fo_rank]; }
  const SparseRow& compose_pair(int x_rank, int y_rank) const;

 private:
  NAryAlgebra algebra_;
  Action action_;
  Symmetry symmetry_;
  SubsetIndexer fo_;         // (n-1)-subsets: fundamental objects
  SubsetIndexer full_args_;  // n-subsets: full-skew cochain arguments
  std::vector<Matrix> ad_;
  std::vector<SparseRow> compose_;
};

// Degree-1 cochain of a complex, stored as exact coordinates.
struct Cochain {
  Action action = Action::Trivial;
  Symmetry symmetry = Symmetry::FullSkew;
  std::vector<Rational> coeffs;

  bool operator==(const Cochain&) const = default;
};

// alpha(e_{args[0]},...,e_{args[n-1]}) as a value_dim-sized vector.
std::vector<Rational> cochain_value(const ComplexSpec& spec, const Cochain& c, std::span<const int> args);

// Identifies one scalar cocycle equation: fundamental-object ranks of the two
// outer arguments, the inner basis index, and the value component.
struct CocycleRowMeta {
  int x_rank = 0;
  int y_rank = 0;
  int z = 0;
  int comp = 1;
};

// Streams every scalar degree-1 cocycle equation as a sparse row over cochain
// coordinates. Zero rows are skipped.
void for_each_cocycle_row(const ComplexSpec& spec,
                          const std::function<void(const CocycleRowMeta&, const SparseRow&)>& fn);

// Degree-1 cocycle conditions, one row per canonical (X, Y, Z[, component]).
Matrix cocycle_matrix(const ComplexSpec& spec);

// Degree 0 -> 1 coboundary map over cochain coordinates.
Matrix coboundary_matrix(const ComplexSpec& spec);

// Columns of the coboundary matrix, one per degree-0 basis cochain.
std::vector<SparseRow> coboundary_columns(const ComplexSpec& spec);

struct CohomologyReport {
  int c1 = 0;
  int z1 = 0;
  int b1 = 0;
  int h1 = 0;
  std::vector<Cochain> representatives;  // echelon normal form modulo coboundaries
  std::vector<bool> exact_fi_ok;         // per representative: induced algebra passes the FI exactly
};

// Computes H^1 = Z^1/B^1 with certified representatives. Throws
// std::logic_error if the image fails to lie inside the kernel (assembly bug).
CohomologyReport h1(const ComplexSpec& spec);

// Max |entry| of the composite delta(degree1) . delta(degree0) applied to the
// degree-0 basis; exactly zero for every valid complex.
Rational delta_square_residual(const ComplexSpec& spec);

// The explicit restricted-class adjoint cocycle of the 4-dimensional simple
// Filippov algebras: alpha((a1,a2),c)^d = 2 eps_c (delta_{a1 c} delta_{a2 d} -
// delta_{a1 d} delta_{a2 c}). Certified at construction to be a non-trivial
// cocycle. Domain error unless the algebra is a 3-ary simple FA.
Cochain restricted_deformation_cocycle(const NAryAlgebra& a);

// Thrown when an extension/deformation is requested for a non-cocycle.
class CocycleError : public std::domain_error {
 public:
  CocycleError(std::string message, CocycleRowMeta violated)
      : std::domain_error(std::move(message)), violated_(violated) {}

  const CocycleRowMeta& violated() const { return violated_; }

 private:
  CocycleRowMeta violated_;
};

// Central extension by a scalar one-cocycle: one extra central generator, the
// bracket picks up alpha(X_1..X_n) on it. Rejects non-cocycles (CocycleError
// with the violated triple); the result is FI-verified exactly.
NAryAlgebra central_extend(const NAryAlgebra& a, const Cochain& alpha);

struct DeformResult {
  NAryAlgebra algebra;
  bool first_order_ok = false;  // alpha satisfies the cocycle condition
  bool exact_fi_ok = false;     // deformed constants satisfy the FI exactly
};

// Infinitesimal deformation f + t*alpha with an algebra-valued cochain. The
// result lives in the restricted class when alpha does.
DeformResult deform(const NAryAlgebra& a, const Cochain& alpha, const Rational& t);

// Coordinates of the degree-0 coboundary delta(beta) in the given complex;
// beta has degree0_dim coefficients (beta[p*N+q]: coefficient of e_p in
// beta(e_q) for the adjoint action).
Cochain coboundary_of(const ComplexSpec& spec, const std::vector<Rational>& beta);

}  // namespace nary
