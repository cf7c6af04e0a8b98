#include "nary/structure.hpp"

#include <functional>
#include <stdexcept>

namespace nary {

namespace {

RrefAccumulator accumulate(int width, const std::vector<Vector>& vectors) {
  RrefAccumulator acc(width);
  for (const Vector& v : vectors) acc.insert(to_sparse(v));
  return acc;
}

std::vector<Vector> echelon_vectors(const RrefAccumulator& acc) {
  std::vector<Vector> out;
  for (const auto& [pivot, row] : acc.rows()) out.push_back(to_dense(row, acc.width()));
  return out;
}

// Enumerates argument blocks with the leading `skew` slots strictly
// increasing over 1..count and the remaining slots free.
void for_each_block(int count, int length, int skew, const std::function<void(const std::vector<int>&)>& fn) {
  skew = std::min(skew, length);
  for (const auto& head : increasing_subsets(count, skew)) {
    std::vector<int> block = head;
    block.resize(length, 1);
    std::function<void(int)> rec = [&](int pos) {
      if (pos == length - skew) {
        fn(block);
        return;
      }
      for (int v = 1; v <= count; ++v) {
        block[skew + pos] = v;
        rec(pos + 1);
      }
    };
    rec(0);
  }
}

}  // namespace

Subspace make_subspace(int dim, const std::vector<Vector>& spanning) {
  return Subspace{echelon_vectors(accumulate(dim, spanning))};
}

bool subspace_contains(const Subspace& s, const Vector& v) {
  if (s.basis.empty()) return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
  RrefAccumulator acc = accumulate(static_cast<int>(v.size()), s.basis);
  return acc.contains(to_sparse(v));
}

DerivedSeriesReport derived_series(const NAryAlgebra& a) {
  DerivedSeriesReport report;
  std::vector<Vector> current;
  for (int i = 0; i < a.dim(); ++i) {
    Vector e(a.dim());
    e[i] = 1;
    current.push_back(std::move(e));
  }
  report.dims.push_back(a.dim());

  while (true) {
    int count = static_cast<int>(current.size());
    RrefAccumulator acc(a.dim());
    // span of brackets of n elements drawn from the current basis
    for_each_block(count, a.arity(), a.skew_arity(), [&](const std::vector<int>& block) {
      std::vector<Vector> args;
      args.reserve(block.size());
      for (int i : block) args.push_back(current[i - 1]);
      Vector w = bracket(a, args);
      acc.insert(to_sparse(w));
    });
    int next_dim = acc.rank();
    report.dims.push_back(next_dim);
    if (next_dim == 0 || next_dim == static_cast<int>(current.size())) break;
    current = echelon_vectors(acc);
  }
  report.solvable = report.dims.back() == 0;
  return report;
}

Matrix kasymov_form(const NAryAlgebra& a) {
  SubsetIndexer ix = fo_indexer(a);
  std::vector<Matrix> ad(ix.count());
  for (int i = 0; i < ix.count(); ++i) ad[i] = ad_matrix_basis(a, ix.subset(i));
  Matrix k(ix.count(), ix.count());
  for (int i = 0; i < ix.count(); ++i) {
    for (int j = i; j < ix.count(); ++j) {
      Rational tr = 0;
      for (int r = 0; r < a.dim(); ++r)
        for (int c = 0; c < a.dim(); ++c)
          if (ad[i].at(r, c) != 0 && ad[j].at(c, r) != 0) tr += ad[i].at(r, c) * ad[j].at(c, r);
      k.at(i, j) = tr;
      k.at(j, i) = std::move(tr);
    }
  }
  return k;
}

SemisimpleReport is_semisimple(const NAryAlgebra& a) {
  const int n = a.arity();
  const int dim = a.dim();
  SubsetIndexer ix = fo_indexer(a);
  Matrix k = kasymov_form(a);

  // rows: (completion C of n-2 slots, fundamental object Y); cols: Z = e_z
  std::vector<std::vector<int>> completions = increasing_subsets(dim, n - 2);
  Matrix m(static_cast<int>(completions.size()) * ix.count(), dim);
  int row = 0;
  std::vector<int> tuple(n - 1);
  for (const auto& comp : completions) {
    for (int j = 0; j < ix.count(); ++j, ++row) {
      for (int z = 1; z <= dim; ++z) {
        tuple.assign(1, z);
        tuple.insert(tuple.end(), comp.begin(), comp.end());
        int sign = sort_skew_block(tuple);
        if (sign == 0) continue;
        m.at(row, z - 1) = sign * k.at(ix.rank(tuple), j);
      }
    }
  }
  RankKernel rk = rank_and_kernel(m);
  return SemisimpleReport{rk.kernel.empty(), std::move(rk.kernel)};
}

bool is_ideal(const NAryAlgebra& a, const Subspace& s) {
  if (s.basis.empty()) return true;
  RrefAccumulator acc = accumulate(a.dim(), s.basis);
  std::vector<Vector> basis_vectors;
  for (int i = 0; i < a.dim(); ++i) {
    Vector e(a.dim());
    e[i] = 1;
    basis_vectors.push_back(std::move(e));
  }
  bool ok = true;
  for_each_block(a.dim(), a.arity() - 1, std::min(a.skew_arity(), a.arity() - 1),
                 [&](const std::vector<int>& block) {
                   if (!ok) return;
                   std::vector<Vector> args;
                   for (int i : block) args.push_back(basis_vectors[i - 1]);
                   args.push_back({});
                   for (const Vector& z : s.basis) {
                     args.back() = z;
                     if (!acc.contains(to_sparse(bracket(a, args)))) {
                       ok = false;
                       return;
                     }
                   }
                 });
  return ok;
}

LieAlgebraReport lie_algebra_of(const NAryAlgebra& a) {
  SubsetIndexer ix = fo_indexer(a);
  const int dim = a.dim();
  auto flatten = [&](const Matrix& m) {
    Vector v(static_cast<std::size_t>(dim) * dim);
    for (int r = 0; r < dim; ++r)
      for (int c = 0; c < dim; ++c) v[static_cast<std::size_t>(r) * dim + c] = m.at(r, c);
    return v;
  };
  RrefAccumulator acc(dim * dim);
  for (int i = 0; i < ix.count(); ++i) acc.insert(to_sparse(flatten(ad_matrix_basis(a, ix.subset(i)))));

  LieAlgebraReport report;
  report.dim = acc.rank();
  for (const auto& [pivot, row] : acc.rows()) {
    Vector flat = to_dense(row, dim * dim);
    Matrix m(dim, dim);
    for (int r = 0; r < dim; ++r)
      for (int c = 0; c < dim; ++c) m.at(r, c) = flat[static_cast<std::size_t>(r) * dim + c];
    report.basis.push_back(std::move(m));
  }
  report.closure_ok = true;
  for (std::size_t i = 0; i < report.basis.size() && report.closure_ok; ++i)
    for (std::size_t j = i + 1; j < report.basis.size() && report.closure_ok; ++j) {
      Matrix comm = report.basis[i] * report.basis[j] - report.basis[j] * report.basis[i];
      if (!acc.contains(to_sparse(flatten(comm)))) report.closure_ok = false;
    }
  return report;
}

MetricReport metric_checks(const NAryAlgebra& a) {
  if (!a.metric()) throw std::domain_error("metric_checks needs an attached metric");
  const Matrix& g = *a.metric();
  const int n = a.arity();
  const int dim = a.dim();
  MetricReport report;

  // f_{args}^l g_{l,c-1}
  auto lowered = [&](std::vector<int> args, int c) {
    Rational out = 0;
    for (const auto& [l, v] : bracket_basis(a, args))
      if (g.at(l - 1, c - 1) != 0) out += v * g.at(l - 1, c - 1);
    return out;
  };

  // (i) invariance
  report.invariance = true;
  for_each_block(dim, n - 1, std::min(a.skew_arity(), n - 1), [&](const std::vector<int>& ab) {
    if (!report.invariance) return;
    std::vector<int> args(ab);
    args.push_back(0);
    for (int b = 1; b <= dim && report.invariance; ++b)
      for (int c = 1; c <= dim && report.invariance; ++c) {
        args.back() = b;
        Rational lhs = lowered(args, c);
        args.back() = c;
        Rational rhs = lowered(args, b);
        if (lhs + rhs != 0) report.invariance = false;
      }
  });

  // (ii) lowered tensor fully antisymmetric: adjacent transpositions of the
  // n+1 lowered slots over canonical blocks cover all cases
  report.lowered_antisymmetric = true;
  for_each_block(dim, n, a.skew_arity(), [&](const std::vector<int>& blk) {
    if (!report.lowered_antisymmetric) return;
    for (int c = 1; c <= dim && report.lowered_antisymmetric; ++c) {
      std::vector<int> slots(blk);
      slots.push_back(c);
      Rational base = lowered({slots.begin(), slots.end() - 1}, slots.back());
      for (int t = 0; t + 1 <= n && report.lowered_antisymmetric; ++t) {
        std::vector<int> swapped(slots);
        std::swap(swapped[t], swapped[t + 1]);
        Rational other = lowered({swapped.begin(), swapped.end() - 1}, swapped.back());
        if (other != -base) report.lowered_antisymmetric = false;
      }
    }
  });

  // (iii) invariant tensor: sum_i f_{a..b_i}^l f_{b_1..l@i..b_{n+1}} = 0
  report.invariant_tensor = true;
  int bskew = a.symmetry() == Symmetry::FullSkew ? n + 1 : 0;
  for_each_block(dim, n - 1, std::min(a.skew_arity(), n - 1), [&](const std::vector<int>& ab) {
    if (!report.invariant_tensor) return;
    std::vector<int> args(ab);
    args.push_back(0);
    for_each_block(dim, n + 1, bskew, [&](const std::vector<int>& b) {
      if (!report.invariant_tensor) return;
      Rational total = 0;
      for (int i = 0; i < n + 1; ++i) {
        args.back() = b[i];
        for (const auto& [l, v] : bracket_basis(a, args)) {
          std::vector<int> bb(b);
          bb[i] = l;
          total += v * lowered({bb.begin(), bb.end() - 1}, bb.back());
        }
      }
      if (total != 0) report.invariant_tensor = false;
    });
  });

  return report;
}

}  // namespace nary
