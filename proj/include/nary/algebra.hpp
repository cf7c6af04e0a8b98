#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nary/linalg.hpp"
#include "nary/multi_index.hpp"
#include "nary/rational.hpp"

namespace nary {

// Symmetry class of the structure-constant tensor: fully antisymmetric
// (Filippov), antisymmetric in the first n-1 slots only (the restricted
// n-Leibniz class), or no symmetry at all (general n-Leibniz).
enum class Symmetry { FullSkew, SkewFirstNMinus1, None };

std::string to_string(Symmetry s);
std::optional<Symmetry> symmetry_from_string(std::string_view s);

// Element of the algebra: coefficients over the basis {e_1..e_N}.
using Vector = std::vector<Rational>;

// Sparse basis combination, 1-based basis indices, ascending.
using SparseVec = std::vector<std::pair<int, Rational>>;

// Canonical storage key of a structure constant f_{args}^target.
struct ConstantKey {
  std::vector<int> args;  // canonical: skew block strictly increasing
  int target = 0;

  auto operator<=>(const ConstantKey&) const = default;
};

// An n-ary algebra given by structure constants over a fixed basis.
// Constants are stored sparsely over canonical keys only; insertion folds
// non-canonical keys in with the permutation sign of the skew block.
class NAryAlgebra {
 public:
  NAryAlgebra(int arity, int dim, Symmetry symmetry, std::string name = {});

  int arity() const { return arity_; }
  int dim() const { return dim_; }
  Symmetry symmetry() const { return symmetry_; }
  int skew_arity() const;

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  // Sets f_{args}^target = v. Conflicting re-assignment of the same canonical
  // key is a domain error; assigning a nonzero value to a degenerate skew key
  // is too. Zero assignments erase.
  void set_constant(std::vector<int> args, int target, const Rational& v);

  // Accumulates f_{args}^target += v (degenerate keys are silently zero).
  void add_constant(std::vector<int> args, int target, const Rational& v);

  // Sign-resolved lookup of f_{args}^target.
  Rational constant(std::vector<int> args, int target) const;

  const std::map<ConstantKey, Rational>& constants() const { return f_; }

  void set_metric(Matrix g);
  const std::optional<Matrix>& metric() const { return metric_; }

  bool operator==(const NAryAlgebra&) const = default;

 private:
  // canonical key + sign; sign 0 for degenerate skew blocks
  std::pair<ConstantKey, int> canonical_key(std::vector<int> args, int target) const;

  int arity_;
  int dim_;
  Symmetry symmetry_;
  std::string name_;
  std::map<ConstantKey, Rational> f_;
  std::optional<Matrix> metric_;
};

// [e_{a_1},...,e_{a_n}] as a sparse combination of basis elements.
SparseVec bracket_basis(const NAryAlgebra& a, std::span<const int> args);

// Multilinear bracket of n coefficient vectors.
Vector bracket(const NAryAlgebra& a, std::span<const Vector> args);

// Fundamental object: coefficients over the canonical basis of skew
// (n-1)-tuples, i.e. strictly increasing (n-1)-subsets of {1..N} in
// lexicographic order (dimension C(N, n-1)).
struct FundamentalObject {
  std::vector<Rational> coeffs;

  bool operator==(const FundamentalObject&) const = default;
};

SubsetIndexer fo_indexer(const NAryAlgebra& a);

// Unit fundamental object on the given (n-1)-tuple; folds in the permutation
// sign, zero on repeated entries.
FundamentalObject fo_basis_element(const NAryAlgebra& a, std::span<const int> tuple);

// N x N matrix of Z -> [X_1,...,X_{n-1},Z]. Requires a skew fundamental-object
// basis, i.e. symmetry FullSkew or SkewFirstNMinus1.
Matrix ad_matrix(const NAryAlgebra& a, const FundamentalObject& x);
Matrix ad_matrix_basis(const NAryAlgebra& a, std::span<const int> subset);

// Composition X·Y = sum_a (Y_1,...,[X,Y_a],...,Y_{n-1}) of fundamental objects.
FundamentalObject compose(const NAryAlgebra& a, const FundamentalObject& x, const FundamentalObject& y);

// Composition of two canonical basis objects as a sparse vector over
// fundamental-object ranks (0-based).
SparseRow compose_basis(const NAryAlgebra& a, std::span<const int> s, std::span<const int> t,
                        const SubsetIndexer& indexer);

struct FiWitness {
  std::vector<int> b_block;
  std::vector<int> a_block;
  int target = 0;
  Rational violation;
};

struct FiReport {
  Rational max_violation;
  std::vector<FiWitness> witnesses;

  bool ok() const { return witnesses.empty(); }
};

// Filippov identity residual in structure-constant coordinates, evaluated over
// all canonical index tuples of the declared symmetry class. Zero iff the
// identity holds.
FiReport fi_residual(const NAryAlgebra& a);

struct SymmetryViolation {
  std::vector<int> args;
  int target = 0;
  int slot_i = 0;  // transposed slots, 0-based
  int slot_j = 0;
  Rational value;
  Rational swapped_value;
};

struct SymmetryAuditReport {
  Symmetry audited = Symmetry::None;
  bool ok = true;
  std::vector<SymmetryViolation> violations;
};

// Certifies that the stored constants behave antisymmetrically under every
// transposition inside the audited skew range. Auditing a class stricter than
// the declared one (e.g. FullSkew on a SkewFirstNMinus1 algebra) detects
// genuine symmetry violations; violations are reported, never thrown.
SymmetryAuditReport symmetry_audit(const NAryAlgebra& a);
SymmetryAuditReport symmetry_audit(const NAryAlgebra& a, Symmetry audited);

// Same bracket expressed on the new basis e'_i = sum_j p(j,i) e_j.
// p must be invertible.
NAryAlgebra transform_basis(const NAryAlgebra& a, const Matrix& p);

// Re-stores the constants under a weaker symmetry class (e.g. FullSkew ->
// SkewFirstNMinus1). Strengthening is a domain error.
NAryAlgebra as_symmetry(const NAryAlgebra& a, Symmetry target);

std::optional<Matrix> inverse(const Matrix& m);

}  // namespace nary
