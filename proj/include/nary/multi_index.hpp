#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace nary {

// Ordered block of 1-based basis indices. The first skew_arity slots are
// subject to antisymmetrization; trailing slots are free.
struct MultiIndex {
  std::vector<int> indices;
  int skew_arity = 0;

  bool operator==(const MultiIndex&) const = default;
};

// Canonical form of a MultiIndex together with the permutation sign picked up
// while sorting the skew block. sign == 0 flags a degenerate index (repeated
// entry inside the skew block).
struct CanonicalIndex {
  MultiIndex index;
  int sign = 0;

  bool degenerate() const { return sign == 0; }
};

// Sorts the skew block ascending, counting transpositions. If dim > 0, indices
// are range-checked against 1..dim. Idempotent: canonical input comes back
// unchanged with sign +1. Throws std::domain_error on out-of-range indices or
// skew_arity > length.
CanonicalIndex canonicalize(MultiIndex idx, int dim = 0);

// Sorts values[0..skew_arity) ascending in place, returns the permutation sign
// (0 on a repeated value). The cheap core of canonicalize for hot loops.
int sort_skew_block(std::span<int> values);

std::int64_t binomial(int n, int k);

// All strictly increasing k-subsets of {1..dim} in lexicographic order.
std::vector<std::vector<int>> increasing_subsets(int dim, int k);

// Rank lookup within the lexicographic enumeration above.
class SubsetIndexer {
 public:
  SubsetIndexer() = default;
  SubsetIndexer(int dim, int k);

  int dim() const { return dim_; }
  int k() const { return k_; }
  int count() const { return static_cast<int>(subsets_.size()); }
  const std::vector<std::vector<int>>& subsets() const { return subsets_; }
  const std::vector<int>& subset(int rank) const { return subsets_[rank]; }

  // rank of a strictly increasing subset; the inverse of subset().
  int rank(std::span<const int> subset) const;

 private:
  int dim_ = 0;
  int k_ = 0;
  std::vector<std::vector<int>> subsets_;
};

}  // namespace nary
