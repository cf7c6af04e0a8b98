#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "nary/rational.hpp"

namespace nary {

// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

  static Matrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Rational& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  std::vector<Rational> row(int i) const;
  std::vector<Rational> col(int j) const;

  bool is_zero() const;
  bool is_symmetric() const;
  Rational max_abs() const;

  Matrix operator*(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  std::vector<Rational> apply(const std::vector<Rational>& v) const;  // m·v

  bool operator==(const Matrix&) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> a_;
};

// Sparse row: (column, value) pairs sorted by column, values nonzero.
using SparseRow = std::vector<std::pair<int, Rational>>;

SparseRow to_sparse(const std::vector<Rational>& dense);
std::vector<Rational> to_dense(const SparseRow& row, int width);

// Incremental reduced row echelon form over an exact field. Rows are inserted
// one at a time; the accumulator keeps a fully reduced basis of the row space
// (unit pivots, pivot columns cleared everywhere else), so ranks, kernels and
// membership tests are deterministic.
class RrefAccumulator {
 public:
  explicit RrefAccumulator(int width) : width_(width) {}

  int width() const { return width_; }
  int rank() const { return static_cast<int>(rows_.size()); }

  // Returns true when the row enlarged the span.
  bool insert(SparseRow row);

  // Residue of a row after elimination against the current basis; empty iff
  // the row lies in the span.
  SparseRow reduce(SparseRow row) const;
  bool contains(const SparseRow& row) const { return reduce(row).empty(); }

  // pivot column -> reduced row, ascending.
  const std::map<int, SparseRow>& rows() const { return rows_; }

  // Canonical kernel basis of the accumulated row space, one vector per free
  // column in ascending column order; vector j has a unit at its free column.
  std::vector<std::vector<Rational>> kernel_basis() const;

 private:
  int width_;
  std::map<int, SparseRow> rows_;
};

struct RankKernel {
  int rank = 0;
  std::vector<std::vector<Rational>> kernel;
};

// Row rank and canonical kernel basis; rank + kernel.size() == cols always.
RankKernel rank_and_kernel(const Matrix& m);

// Some x with m·x = rhs, or nullopt when rhs is outside the column space.
std::optional<std::vector<Rational>> solve_in_image(const Matrix& m, const std::vector<Rational>& rhs);

}  // namespace nary
