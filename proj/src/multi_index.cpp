#include "nary/multi_index.hpp"

#include <stdexcept>
#include <string>

namespace nary {

int sort_skew_block(std::span<int> values) {
  int sign = 1;
  for (std::size_t i = 1; i < values.size(); ++i) {
    std::size_t j = i;
    while (j > 0 && values[j - 1] > values[j]) {
      std::swap(values[j - 1], values[j]);
      sign = -sign;
      --j;
    }
  }
  for (std::size_t i = 1; i < values.size(); ++i)
    if (values[i] == values[i - 1]) return 0;
  return sign;
}

CanonicalIndex canonicalize(MultiIndex idx, int dim) {
  if (idx.skew_arity < 0 || idx.skew_arity > static_cast<int>(idx.indices.size()))
    throw std::domain_error("skew_arity exceeds index length");
  for (int v : idx.indices) {
    if (v < 1 || (dim > 0 && v > dim))
      throw std::domain_error("basis index " + std::to_string(v) + " out of range");
  }
  int sign = sort_skew_block(std::span<int>(idx.indices.data(), idx.skew_arity));
  return CanonicalIndex{std::move(idx), sign};
}

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
  }
  return r;
}

std::vector<std::vector<int>> increasing_subsets(int dim, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > dim) return out;
  std::vector<int> cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i + 1;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == dim - (k - 1 - i)) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

SubsetIndexer::SubsetIndexer(int dim, int k)
    : dim_(dim), k_(k), subsets_(increasing_subsets(dim, k)) {}

int SubsetIndexer::rank(std::span<const int> subset) const {
  // lexicographic rank via the combinatorial number system
  std::int64_t r = 0;
  int prev = 0;
  for (int i = 0; i < k_; ++i) {
    for (int v = prev + 1; v < subset[i]; ++v) r += binomial(dim_ - v, k_ - 1 - i);
    prev = subset[i];
  }
  return static_cast<int>(r);
}

}  // namespace nary
