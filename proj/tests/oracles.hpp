// Test-only helpers: independent oracles and seeded random generators.
#pragma once

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "nary/algebra.hpp"

namespace nary::testing {

// Deterministic splitmix64; the suites honor NARY_SEED (decimal) when set.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // uniform in [lo, hi]
  long long range(long long lo, long long hi) {
    return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  Rational rational(long long lo = -4, long long hi = 4, long long max_den = 3) {
    return Rational(range(lo, hi), range(1, max_den));
  }

 private:
  std::uint64_t state_;
};

inline std::uint64_t env_seed(std::uint64_t fallback) {
  if (const char* s = std::getenv("NARY_SEED")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(s, &end, 10);
    if (end && *end == '\0') return v;
  }
  return fallback;
}

// Direct evaluation of the nested-bracket Filippov identity on all canonical
// basis tuples: [X, [Y_1..Y_n]] - sum_a [Y_1..[X,Y_a]..Y_n]. Independent of
// the structure-constant formula used by fi_residual.
struct DirectFiWitness {
  std::vector<int> b_block;
  std::vector<int> a_block;
  int target = 0;
  Rational violation;
};

inline std::vector<DirectFiWitness> fi_direct_oracle(const NAryAlgebra& a) {
  const int n = a.arity();
  const int dim = a.dim();
  std::vector<DirectFiWitness> witnesses;

  auto unit = [&](int i) {
    Vector e(dim);
    e[i - 1] = 1;
    return e;
  };

  std::vector<std::vector<int>> a_blocks;
  std::vector<std::vector<int>> b_blocks;
  if (a.symmetry() == Symmetry::None) {
    std::vector<int> cur;
    std::function<void(int, int, std::vector<std::vector<int>>&)> all = [&](int len, int pos, auto& out) {
      if (pos == len) {
        out.push_back(cur);
        return;
      }
      for (int v = 1; v <= dim; ++v) {
        cur.push_back(v);
        all(len, pos + 1, out);
        cur.pop_back();
      }
    };
    all(n - 1, 0, a_blocks);
    all(n, 0, b_blocks);
  } else {
    a_blocks = increasing_subsets(dim, n - 1);
    if (a.symmetry() == Symmetry::FullSkew) {
      b_blocks = increasing_subsets(dim, n);
    } else {
      for (const auto& head : increasing_subsets(dim, n - 1))
        for (int last = 1; last <= dim; ++last) {
          std::vector<int> b = head;
          b.push_back(last);
          b_blocks.push_back(std::move(b));
        }
    }
  }

  for (const auto& b : b_blocks) {
    std::vector<Vector> ys;
    for (int i : b) ys.push_back(unit(i));
    Vector inner = bracket(a, ys);
    for (const auto& ab : a_blocks) {
      std::vector<Vector> args;
      for (int i : ab) args.push_back(unit(i));
      args.push_back(inner);
      Vector lhs = bracket(a, args);

      Vector rhs(dim);
      for (int k = 0; k < n; ++k) {
        args.back() = ys[k];
        Vector mid = bracket(a, args);
        std::vector<Vector> outer = ys;
        outer[k] = std::move(mid);
        Vector term = bracket(a, outer);
        for (int s = 0; s < dim; ++s) rhs[s] += term[s];
      }
      for (int s = 0; s < dim; ++s) {
        Rational r = lhs[s] - rhs[s];
        if (r != 0) witnesses.push_back(DirectFiWitness{b, ab, s + 1, std::move(r)});
      }
    }
  }
  return witnesses;
}

// Random invertible change-of-basis matrix with small integer entries.
inline Matrix random_invertible(Rng& rng, int dim) {
  while (true) {
    Matrix p(dim, dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) p.at(i, j) = rng.range(-2, 2);
    if (inverse(p)) return p;
  }
}

inline Vector random_vector(Rng& rng, int dim) {
  Vector v(dim);
  for (int i = 0; i < dim; ++i) v[i] = rng.rational();
  return v;
}

}  // namespace nary::testing
