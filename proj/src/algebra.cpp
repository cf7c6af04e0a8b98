#include "nary/algebra.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace nary {

std::string to_string(Symmetry s) {
  switch (s) {
    case Symmetry::FullSkew: return "full";
    case Symmetry::SkewFirstNMinus1: return "first_n_minus_1";
    case Symmetry::None: return "none";
  }
  return "?";
}

std::optional<Symmetry> symmetry_from_string(std::string_view s) {
  if (s == "full") return Symmetry::FullSkew;
  if (s == "first_n_minus_1") return Symmetry::SkewFirstNMinus1;
  if (s == "none") return Symmetry::None;
  return std::nullopt;
}

NAryAlgebra::NAryAlgebra(int arity, int dim, Symmetry symmetry, std::string name)
    : arity_(arity), dim_(dim), symmetry_(symmetry), name_(std::move(name)) {
  if (arity_ < 2) throw std::domain_error("arity must be >= 2");
  if (dim_ < 1) throw std::domain_error("dimension must be >= 1");
}

int NAryAlgebra::skew_arity() const {
  switch (symmetry_) {
    case Symmetry::FullSkew: return arity_;
    case Symmetry::SkewFirstNMinus1: return arity_ - 1;
    case Symmetry::None: return 0;
  }
  return 0;
}

std::pair<ConstantKey, int> NAryAlgebra::canonical_key(std::vector<int> args, int target) const {
  if (static_cast<int>(args.size()) != arity_) throw std::domain_error("wrong number of bracket slots");
  if (target < 1 || target > dim_) throw std::domain_error("target index out of range");
  for (int v : args)
    if (v < 1 || v > dim_) throw std::domain_error("basis index out of range");
  int sign = sort_skew_block(std::span<int>(args.data(), skew_arity()));
  return {ConstantKey{std::move(args), target}, sign};
}

void NAryAlgebra::set_constant(std::vector<int> args, int target, const Rational& v) {
  auto [key, sign] = canonical_key(std::move(args), target);
  if (sign == 0) {
    if (v != 0) throw std::domain_error("nonzero constant on a degenerate skew index");
    return;
  }
  Rational folded = sign * v;
  auto it = f_.find(key);
  if (it != f_.end() && it->second != folded)
    throw std::domain_error("conflicting values for one canonical structure constant");
  if (folded == 0)
    f_.erase(key);
  else
    f_.insert_or_assign(std::move(key), std::move(folded));
}

void NAryAlgebra::add_constant(std::vector<int> args, int target, const Rational& v) {
  auto [key, sign] = canonical_key(std::move(args), target);
  if (sign == 0) return;
  Rational& slot = f_[key];
  slot += sign * v;
  if (slot == 0) f_.erase(key);
}

Rational NAryAlgebra::constant(std::vector<int> args, int target) const {
  auto [key, sign] = canonical_key(std::move(args), target);
  if (sign == 0) return 0;
  auto it = f_.find(key);
  if (it == f_.end()) return 0;
  return sign * it->second;
}

void NAryAlgebra::set_metric(Matrix g) {
  if (g.rows() != dim_ || g.cols() != dim_) throw std::domain_error("metric shape mismatch");
  if (!g.is_symmetric()) throw std::domain_error("metric must be symmetric");
  metric_ = std::move(g);
}

SparseVec bracket_basis(const NAryAlgebra& a, std::span<const int> args) {
  if (static_cast<int>(args.size()) != a.arity()) throw std::domain_error("wrong number of bracket slots");
  std::vector<int> canon(args.begin(), args.end());
  int sign = sort_skew_block(std::span<int>(canon.data(), a.skew_arity()));
  SparseVec out;
  if (sign == 0) return out;
  ConstantKey lo{canon, 0};
  for (auto it = a.constants().lower_bound(lo); it != a.constants().end() && it->first.args == canon; ++it)
    out.emplace_back(it->first.target, sign * it->second);
  return out;
}

Vector bracket(const NAryAlgebra& a, std::span<const Vector> args) {
  if (static_cast<int>(args.size()) != a.arity()) throw std::domain_error("bracket expects n arguments");
  for (const Vector& v : args)
    if (static_cast<int>(v.size()) != a.dim()) throw std::domain_error("argument dimension mismatch");
  Vector out(a.dim());
  std::vector<int> idx(a.arity());
  std::function<void(int, const Rational&)> rec = [&](int slot, const Rational& coeff) {
    if (slot == a.arity()) {
      for (const auto& [d, c] : bracket_basis(a, idx)) out[d - 1] += coeff * c;
      return;
    }
    for (int b = 1; b <= a.dim(); ++b) {
      const Rational& v = args[slot][b - 1];
      if (v == 0) continue;
      idx[slot] = b;
      rec(slot + 1, Rational(coeff * v));
    }
  };
  rec(0, Rational(1));
  return out;
}

SubsetIndexer fo_indexer(const NAryAlgebra& a) { return SubsetIndexer(a.dim(), a.arity() - 1); }

FundamentalObject fo_basis_element(const NAryAlgebra& a, std::span<const int> tuple) {
  if (static_cast<int>(tuple.size()) != a.arity() - 1)
    throw std::domain_error("fundamental object takes n-1 basis indices");
  SubsetIndexer ix = fo_indexer(a);
  FundamentalObject out{std::vector<Rational>(ix.count())};
  std::vector<int> canon(tuple.begin(), tuple.end());
  int sign = sort_skew_block(canon);
  if (sign != 0) out.coeffs[ix.rank(canon)] = sign;
  return out;
}

static void require_skew_fo(const NAryAlgebra& a) {
  if (a.symmetry() == Symmetry::None)
    throw std::domain_error("unsupported symmetry: fundamental objects need a skew (n-1)-block");
}

Matrix ad_matrix_basis(const NAryAlgebra& a, std::span<const int> subset) {
  require_skew_fo(a);
  Matrix m(a.dim(), a.dim());
  std::vector<int> args(subset.begin(), subset.end());
  args.push_back(0);
  for (int z = 1; z <= a.dim(); ++z) {
    args.back() = z;
    for (const auto& [d, c] : bracket_basis(a, args)) m.at(d - 1, z - 1) += c;
  }
  return m;
}

Matrix ad_matrix(const NAryAlgebra& a, const FundamentalObject& x) {
  require_skew_fo(a);
  SubsetIndexer ix = fo_indexer(a);
  if (static_cast<int>(x.coeffs.size()) != ix.count())
    throw std::domain_error("fundamental object coefficient count mismatch");
  Matrix m(a.dim(), a.dim());
  for (int i = 0; i < ix.count(); ++i) {
    if (x.coeffs[i] == 0) continue;
    Matrix basis = ad_matrix_basis(a, ix.subset(i));
    for (int r = 0; r < a.dim(); ++r)
      for (int c = 0; c < a.dim(); ++c)
        if (basis.at(r, c) != 0) m.at(r, c) += x.coeffs[i] * basis.at(r, c);
  }
  return m;
}

SparseRow compose_basis(const NAryAlgebra& a, std::span<const int> s, std::span<const int> t,
                        const SubsetIndexer& indexer) {
  require_skew_fo(a);
  std::map<int, Rational> acc;
  std::vector<int> args(s.begin(), s.end());
  args.push_back(0);
  std::vector<int> slot(t.begin(), t.end());
  for (std::size_t pos = 0; pos < t.size(); ++pos) {
    args.back() = t[pos];
    for (const auto& [d, c] : bracket_basis(a, args)) {
      slot = {t.begin(), t.end()};
      slot[pos] = d;
      int sign = sort_skew_block(slot);
      if (sign == 0) continue;
      acc[indexer.rank(slot)] += sign * c;
    }
  }
  SparseRow out;
  for (auto& [rank, v] : acc)
    if (v != 0) out.emplace_back(rank, std::move(v));
  return out;
}

FundamentalObject compose(const NAryAlgebra& a, const FundamentalObject& x, const FundamentalObject& y) {
  require_skew_fo(a);
  SubsetIndexer ix = fo_indexer(a);
  if (static_cast<int>(x.coeffs.size()) != ix.count() || static_cast<int>(y.coeffs.size()) != ix.count())
    throw std::domain_error("fundamental object coefficient count mismatch");
  FundamentalObject out{std::vector<Rational>(ix.count())};
  for (int i = 0; i < ix.count(); ++i) {
    if (x.coeffs[i] == 0) continue;
    for (int j = 0; j < ix.count(); ++j) {
      if (y.coeffs[j] == 0) continue;
      Rational c = x.coeffs[i] * y.coeffs[j];
      for (const auto& [rank, v] : compose_basis(a, ix.subset(i), ix.subset(j), ix))
        out.coeffs[rank] += c * v;
    }
  }
  return out;
}

namespace {

// Enumerates the canonical argument blocks of the given length: the leading
// skew slots run over strictly increasing subsets, the rest over everything.
void for_each_canonical_block(int dim, int length, int skew, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<std::vector<int>> heads = increasing_subsets(dim, std::min(skew, length));
  int free_slots = length - std::min(skew, length);
  for (const auto& head : heads) {
    std::vector<int> block = head;
    block.resize(length, 1);
    std::function<void(int)> rec = [&](int pos) {
      if (pos == free_slots) {
        fn(block);
        return;
      }
      for (int v = 1; v <= dim; ++v) {
        block[head.size() + pos] = v;
        rec(pos + 1);
      }
    };
    rec(0);
  }
}

}  // namespace

FiReport fi_residual(const NAryAlgebra& a) {
  const int n = a.arity();
  const int dim = a.dim();
  FiReport report;
  report.max_violation = 0;

  // a-block: first n-1 slots of f_{a_1..a_{n-1} l}; skew in both FA and
  // restricted-Leibniz classes, free for symmetry None.
  int a_skew = a.symmetry() == Symmetry::None ? 0 : n - 1;

  std::vector<std::vector<int>> a_blocks;
  for_each_canonical_block(dim, n - 1, a_skew, [&](const std::vector<int>& blk) { a_blocks.push_back(blk); });

  for_each_canonical_block(dim, n, a.skew_arity(), [&](const std::vector<int>& b) {
    SparseVec inner = bracket_basis(a, b);
    for (const auto& a_blk : a_blocks) {
      std::vector<int> args(a_blk);
      args.push_back(0);
      // lhs_s = f_b^l f_{a,l}^s
      std::vector<Rational> lhs(dim), rhs(dim);
      for (const auto& [l, cl] : inner) {
        args.back() = l;
        for (const auto& [s, cs] : bracket_basis(a, args)) lhs[s - 1] += cl * cs;
      }
      // rhs_s = sum_k f_{a,b_k}^l f_{b_1..l@k..b_n}^s
      std::vector<int> bb(b);
      for (int k = 0; k < n; ++k) {
        args.back() = b[k];
        for (const auto& [l, cl] : bracket_basis(a, args)) {
          bb = b;
          bb[k] = l;
          for (const auto& [s, cs] : bracket_basis(a, bb)) rhs[s - 1] += cl * cs;
        }
      }
      for (int s = 1; s <= dim; ++s) {
        Rational r = lhs[s - 1] - rhs[s - 1];
        if (r != 0) {
          Rational av = rational_abs(r);
          if (av > report.max_violation) report.max_violation = av;
          report.witnesses.push_back(FiWitness{b, a_blk, s, std::move(r)});
        }
      }
    }
  });
  return report;
}

SymmetryAuditReport symmetry_audit(const NAryAlgebra& a) { return symmetry_audit(a, a.symmetry()); }

SymmetryAuditReport symmetry_audit(const NAryAlgebra& a, Symmetry audited) {
  SymmetryAuditReport report;
  report.audited = audited;
  int range = 0;
  switch (audited) {
    case Symmetry::FullSkew: range = a.arity(); break;
    case Symmetry::SkewFirstNMinus1: range = a.arity() - 1; break;
    case Symmetry::None: range = 0; break;
  }
  // Every violation involves a nonzero value, hence a stored key, so checking
  // all transpositions of stored keys is exhaustive.
  for (const auto& [key, value] : a.constants()) {
    for (int i = 0; i < range; ++i) {
      for (int j = i + 1; j < range; ++j) {
        std::vector<int> swapped = key.args;
        std::swap(swapped[i], swapped[j]);
        Rational other = a.constant(std::move(swapped), key.target);
        if (other != -value) {
          report.violations.push_back(SymmetryViolation{key.args, key.target, i, j, value, other});
        }
      }
    }
  }
  report.ok = report.violations.empty();
  return report;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const int n = m.rows();
  RrefAccumulator acc(2 * n);
  for (int i = 0; i < n; ++i) {
    SparseRow r;
    for (int j = 0; j < n; ++j)
      if (m.at(i, j) != 0) r.emplace_back(j, m.at(i, j));
    r.emplace_back(n + i, Rational(1));
    acc.insert(std::move(r));
  }
  Matrix inv(n, n);
  for (const auto& [pivot, row] : acc.rows()) {
    if (pivot >= n) return std::nullopt;  // singular
    for (const auto& [c, v] : row)
      if (c >= n) inv.at(pivot, c - n) = v;
  }
  return acc.rank() == n ? std::optional<Matrix>(std::move(inv)) : std::nullopt;
}

NAryAlgebra transform_basis(const NAryAlgebra& a, const Matrix& p) {
  if (p.rows() != a.dim() || p.cols() != a.dim()) throw std::domain_error("basis change shape mismatch");
  auto pinv = inverse(p);
  if (!pinv) throw std::domain_error("basis change matrix is singular");
  NAryAlgebra out(a.arity(), a.dim(), a.symmetry(), a.name());
  std::vector<Vector> cols(a.dim());
  for (int j = 0; j < a.dim(); ++j) cols[j] = p.col(j);
  for_each_canonical_block(a.dim(), a.arity(), a.skew_arity(), [&](const std::vector<int>& args) {
    std::vector<Vector> vecs;
    vecs.reserve(args.size());
    for (int idx : args) vecs.push_back(cols[idx - 1]);
    Vector w = bracket(a, vecs);
    Vector wprime = pinv->apply(w);
    for (int d = 1; d <= a.dim(); ++d)
      if (wprime[d - 1] != 0) out.set_constant(args, d, wprime[d - 1]);
  });
  if (a.metric()) {
    // g'_{ij} = g(p e_i, p e_j)
    const Matrix& g = *a.metric();
    Matrix gp(a.dim(), a.dim());
    for (int i = 0; i < a.dim(); ++i)
      for (int j = 0; j < a.dim(); ++j) {
        Rational v = 0;
        for (int r = 0; r < a.dim(); ++r)
          for (int s = 0; s < a.dim(); ++s)
            if (p.at(r, i) != 0 && p.at(s, j) != 0 && g.at(r, s) != 0) v += p.at(r, i) * g.at(r, s) * p.at(s, j);
        gp.at(i, j) = std::move(v);
      }
    out.set_metric(std::move(gp));
  }
  return out;
}

NAryAlgebra as_symmetry(const NAryAlgebra& a, Symmetry target) {
  auto strength = [](Symmetry s) {
    switch (s) {
      case Symmetry::FullSkew: return 2;
      case Symmetry::SkewFirstNMinus1: return 1;
      case Symmetry::None: return 0;
    }
    return 0;
  };
  if (strength(target) > strength(a.symmetry()))
    throw std::domain_error("cannot strengthen a symmetry class by re-storing");
  NAryAlgebra out(a.arity(), a.dim(), target, a.name());
  int skew = target == Symmetry::FullSkew ? a.arity() : (target == Symmetry::SkewFirstNMinus1 ? a.arity() - 1 : 0);
  for_each_canonical_block(a.dim(), a.arity(), skew, [&](const std::vector<int>& args) {
    for (int d = 1; d <= a.dim(); ++d) {
      Rational v = a.constant(args, d);
      if (v != 0) out.set_constant(args, d, v);
    }
  });
  if (a.metric()) out.set_metric(*a.metric());
  return out;
}

}  // namespace nary
