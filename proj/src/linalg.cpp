#include "nary/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace nary {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

std::vector<Rational> Matrix::row(int i) const {
  return {a_.begin() + static_cast<std::ptrdiff_t>(i) * cols_,
          a_.begin() + static_cast<std::ptrdiff_t>(i + 1) * cols_};
}

std::vector<Rational> Matrix::col(int j) const {
  std::vector<Rational> out(rows_);
  for (int i = 0; i < rows_; ++i) out[i] = at(i, j);
  return out;
}

bool Matrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Rational& v) { return v == 0; });
}

bool Matrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

Rational Matrix::max_abs() const {
  Rational m = 0;
  for (const Rational& v : a_) {
    Rational a = rational_abs(v);
    if (a > m) m = a;
  }
  return m;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::domain_error("matrix product shape mismatch");
  Matrix out(rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rational& v = at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < rhs.cols_; ++j) {
        if (rhs.at(k, j) == 0) continue;
        out.at(i, j) += v * rhs.at(k, j);
      }
    }
  return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::domain_error("matrix difference shape mismatch");
  Matrix out(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] - rhs.a_[i];
  return out;
}

std::vector<Rational> Matrix::apply(const std::vector<Rational>& v) const {
  if (static_cast<int>(v.size()) != cols_) throw std::domain_error("matrix apply shape mismatch");
  std::vector<Rational> out(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != 0 && v[j] != 0) out[i] += at(i, j) * v[j];
  return out;
}

SparseRow to_sparse(const std::vector<Rational>& dense) {
  SparseRow out;
  for (int j = 0; j < static_cast<int>(dense.size()); ++j)
    if (dense[j] != 0) out.emplace_back(j, dense[j]);
  return out;
}

std::vector<Rational> to_dense(const SparseRow& row, int width) {
  std::vector<Rational> out(width);
  for (const auto& [c, v] : row) out[c] = v;
  return out;
}

namespace {

// row -= factor * other, both sorted sparse
SparseRow axpy(const SparseRow& row, const Rational& factor, const SparseRow& other) {
  SparseRow out;
  out.reserve(row.size() + other.size());
  std::size_t i = 0, j = 0;
  while (i < row.size() || j < other.size()) {
    if (j == other.size() || (i < row.size() && row[i].first < other[j].first)) {
      out.push_back(row[i++]);
    } else if (i == row.size() || other[j].first < row[i].first) {
      out.emplace_back(other[j].first, -factor * other[j].second);
      ++j;
    } else {
      Rational v = row[i].second - factor * other[j].second;
      if (v != 0) out.emplace_back(row[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

SparseRow RrefAccumulator::reduce(SparseRow row) const {
  // Pivot rows only carry columns >= their pivot, so one ascending sweep
  // fully reduces the row.
  std::size_t pos = 0;
  while (pos < row.size()) {
    auto it = rows_.find(row[pos].first);
    if (it == rows_.end()) {
      ++pos;
      continue;
    }
    Rational factor = row[pos].second;  // pivot value in basis row is 1
    row = axpy(row, factor, it->second);
  }
  return row;
}

bool RrefAccumulator::insert(SparseRow row) {
  row = reduce(std::move(row));
  if (row.empty()) return false;
  int pivot = row[0].first;
  Rational inv = Rational(1) / row[0].second;
  for (auto& [c, v] : row) v *= inv;
  // clear the new pivot column from existing rows
  for (auto& [p, r] : rows_) {
    auto it = std::lower_bound(r.begin(), r.end(), pivot,
                               [](const auto& e, int c) { return e.first < c; });
    if (it != r.end() && it->first == pivot) {
      Rational factor = it->second;
      r = axpy(r, factor, row);
    }
  }
  rows_.emplace(pivot, std::move(row));
  return true;
}

std::vector<std::vector<Rational>> RrefAccumulator::kernel_basis() const {
  std::vector<std::vector<Rational>> out;
  for (int c = 0; c < width_; ++c) {
    if (rows_.count(c)) continue;
    std::vector<Rational> v(width_);
    v[c] = 1;
    for (const auto& [p, r] : rows_) {
      auto it = std::lower_bound(r.begin(), r.end(), c,
                                 [](const auto& e, int col) { return e.first < col; });
      if (it != r.end() && it->first == c) v[p] = -it->second;
    }
    out.push_back(std::move(v));
  }
  return out;
}

RankKernel rank_and_kernel(const Matrix& m) {
  RrefAccumulator acc(m.cols());
  for (int i = 0; i < m.rows(); ++i) acc.insert(to_sparse(m.row(i)));
  return RankKernel{acc.rank(), acc.kernel_basis()};
}

std::optional<std::vector<Rational>> solve_in_image(const Matrix& m, const std::vector<Rational>& rhs) {
  if (static_cast<int>(rhs.size()) != m.rows()) throw std::domain_error("solve rhs length mismatch");
  // Insert columns of m augmented with unit tails recording combinations; a
  // zero front residue of [rhs | 0] yields x from the (negated) tail.
  int front = m.rows();
  RrefAccumulator acc(front + m.cols());
  for (int j = 0; j < m.cols(); ++j) {
    SparseRow r;
    for (int i = 0; i < front; ++i)
      if (m.at(i, j) != 0) r.emplace_back(i, m.at(i, j));
    r.emplace_back(front + j, Rational(1));
    acc.insert(std::move(r));
  }
  SparseRow probe;
  for (int i = 0; i < front; ++i)
    if (rhs[i] != 0) probe.emplace_back(i, rhs[i]);
  SparseRow residue = acc.reduce(std::move(probe));
  for (const auto& [c, v] : residue)
    if (c < front) return std::nullopt;
  std::vector<Rational> x(m.cols());
  for (const auto& [c, v] : residue) x[c - front] = -v;
  return x;
}

}  // namespace nary
