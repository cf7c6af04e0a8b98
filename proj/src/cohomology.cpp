#include "nary/cohomology.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "nary/catalog.hpp"

namespace nary {

std::string to_string(Action a) { return a == Action::Trivial ? "trivial" : "adjoint"; }

ComplexSpec::ComplexSpec(NAryAlgebra algebra, Action action, Symmetry symmetry)
    : algebra_(std::move(algebra)), action_(action), symmetry_(symmetry) {
  if (algebra_.symmetry() != Symmetry::FullSkew)
    throw std::domain_error("cochain complexes are built over fully skew algebras");
  if (symmetry_ == Symmetry::None)
    throw std::domain_error("cochain symmetry class must be full or first_n_minus_1");
  if (!fi_residual(algebra_).ok())
    throw std::domain_error("complex undefined: algebra fails the Filippov identity");
  fo_ = SubsetIndexer(algebra_.dim(), algebra_.arity() - 1);
  full_args_ = SubsetIndexer(algebra_.dim(), algebra_.arity());
  ad_.reserve(fo_.count());
  for (int i = 0; i < fo_.count(); ++i) ad_.push_back(ad_matrix_basis(algebra_, fo_.subset(i)));
  compose_.resize(static_cast<std::size_t>(fo_.count()) * fo_.count());
  for (int i = 0; i < fo_.count(); ++i)
    for (int j = 0; j < fo_.count(); ++j)
      compose_[static_cast<std::size_t>(i) * fo_.count() + j] =
          compose_basis(algebra_, fo_.subset(i), fo_.subset(j), fo_);
}

int ComplexSpec::arg_count() const {
  if (symmetry_ == Symmetry::FullSkew) return full_args_.count();
  return fo_.count() * algebra_.dim();
}

const SparseRow& ComplexSpec::compose_pair(int x_rank, int y_rank) const {
  return compose_[static_cast<std::size_t>(x_rank) * fo_.count() + y_rank];
}

std::optional<std::pair<int, int>> ComplexSpec::arg_index(std::span<const int> t, int z) const {
  if (symmetry_ == Symmetry::FullSkew) {
    std::vector<int> s(t.begin(), t.end());
    s.push_back(z);
    int sign = sort_skew_block(s);
    if (sign == 0) return std::nullopt;
    return std::make_pair(full_args_.rank(s), sign);
  }
  return std::make_pair(fo_.rank(t) * algebra_.dim() + (z - 1), 1);
}

std::string ComplexSpec::coordinate_label(int coord) const {
  int arg = coord / value_dim();
  int comp = coord % value_dim();
  std::ostringstream out;
  out << '[';
  if (symmetry_ == Symmetry::FullSkew) {
    const auto& s = full_args_.subset(arg);
    for (std::size_t i = 0; i < s.size(); ++i) out << (i ? "," : "") << s[i];
  } else {
    const auto& t = fo_.subset(arg / algebra_.dim());
    for (std::size_t i = 0; i < t.size(); ++i) out << (i ? "," : "") << t[i];
    out << '|' << (arg % algebra_.dim()) + 1;
  }
  out << ']';
  if (action_ == Action::Adjoint) out << '^' << comp + 1;
  return out.str();
}

std::vector<Rational> cochain_value(const ComplexSpec& spec, const Cochain& c, std::span<const int> args) {
  const int n = spec.algebra().arity();
  if (static_cast<int>(args.size()) != n) throw std::domain_error("cochain takes n arguments");
  if (static_cast<int>(c.coeffs.size()) != spec.cochain_dim())
    throw std::domain_error("cochain coefficient count mismatch");
  std::vector<Rational> out(spec.value_dim());
  std::vector<int> t(args.begin(), args.end() - 1);
  int s0 = sort_skew_block(t);
  if (s0 == 0) return out;
  auto e = spec.arg_index(t, args.back());
  if (!e) return out;
  for (int d = 0; d < spec.value_dim(); ++d)
    out[d] = Rational(s0 * e->second) * c.coeffs[static_cast<std::size_t>(e->first) * spec.value_dim() + d];
  return out;
}

namespace {

using Entries = std::map<int, Rational>;

void emit(std::vector<Entries>& comps, const CocycleRowMeta& base,
          const std::function<void(const CocycleRowMeta&, const SparseRow&)>& fn) {
  for (int s = 1; s <= static_cast<int>(comps.size()); ++s) {
    Entries& row = comps[s - 1];
    SparseRow sparse;
    sparse.reserve(row.size());
    for (auto& [c, v] : row)
      if (v != 0) sparse.emplace_back(c, std::move(v));
    if (!sparse.empty()) {
      CocycleRowMeta meta = base;
      meta.comp = s;
      fn(meta, sparse);
    }
    row.clear();
  }
}

}  // namespace

void for_each_cocycle_row(const ComplexSpec& spec,
                          const std::function<void(const CocycleRowMeta&, const SparseRow&)>& fn) {
  const NAryAlgebra& a = spec.algebra();
  const int dim = a.dim();
  const SubsetIndexer& fo = spec.fo();
  const int vd = spec.value_dim();

  if (spec.action() == Action::Trivial) {
    std::vector<Entries> comps(1);
    for (int xr = 0; xr < fo.count(); ++xr) {
      const auto& x = fo.subset(xr);
      for (int yr = 0; yr < fo.count(); ++yr) {
        const auto& y = fo.subset(yr);
        const SparseRow& comp_xy = spec.compose_pair(xr, yr);
        for (int z = 1; z <= dim; ++z) {
          Entries& row = comps[0];
          // +alpha(X, Y.Z)
          for (int dd = 1; dd <= dim; ++dd) {
            const Rational& c = spec.ad(yr).at(dd - 1, z - 1);
            if (c == 0) continue;
            if (auto e = spec.arg_index(x, dd)) row[e->first] += Rational(e->second) * c;
          }
          // -alpha(X.Y, Z)
          for (const auto& [tr, ct] : comp_xy)
            if (auto e = spec.arg_index(fo.subset(tr), z)) row[e->first] -= Rational(e->second) * ct;
          // -alpha(Y, X.Z)
          for (int dd = 1; dd <= dim; ++dd) {
            const Rational& c = spec.ad(xr).at(dd - 1, z - 1);
            if (c == 0) continue;
            if (auto e = spec.arg_index(y, dd)) row[e->first] -= Rational(e->second) * c;
          }
          emit(comps, CocycleRowMeta{xr, yr, z, 1}, fn);
        }
      }
    }
    return;
  }

  std::vector<Entries> comps(dim);
  std::vector<int> scratch;
  for (int xr = 0; xr < fo.count(); ++xr) {
    const auto& x = fo.subset(xr);
    for (int yr = 0; yr < fo.count(); ++yr) {
      const auto& y = fo.subset(yr);
      const SparseRow& comp_xy = spec.compose_pair(xr, yr);
      for (int z = 1; z <= dim; ++z) {
        auto add = [&](int s, int argi, int d, Rational c) {
          if (c != 0) comps[s - 1][argi * vd + (d - 1)] += std::move(c);
        };
        // ad_X alpha(Y, Z)
        if (auto e = spec.arg_index(y, z)) {
          for (int s = 1; s <= dim; ++s)
            for (int d = 1; d <= dim; ++d) {
              const Rational& c = spec.ad(xr).at(s - 1, d - 1);
              if (c != 0) add(s, e->first, d, Rational(e->second) * c);
            }
        }
        // -ad_Y alpha(X, Z)
        if (auto e = spec.arg_index(x, z)) {
          for (int s = 1; s <= dim; ++s)
            for (int d = 1; d <= dim; ++d) {
              const Rational& c = spec.ad(yr).at(s - 1, d - 1);
              if (c != 0) add(s, e->first, d, Rational(-e->second) * c);
            }
        }
        // -(alpha(X,.)·Y)·Z = -sum_a [Y_1..alpha(X,Y_a)@a..Y_{n-1}, Z]
        for (std::size_t pos = 0; pos < y.size(); ++pos) {
          auto e = spec.arg_index(x, y[pos]);
          if (!e) continue;
          for (int d = 1; d <= dim; ++d) {
            scratch.assign(y.begin(), y.end());
            scratch[pos] = d;
            scratch.push_back(z);
            for (const auto& [s, c] : bracket_basis(a, scratch)) add(s, e->first, d, Rational(-e->second) * c);
          }
        }
        // -alpha(X.Y, Z)
        for (const auto& [tr, ct] : comp_xy) {
          if (auto e = spec.arg_index(fo.subset(tr), z)) {
            for (int s = 1; s <= dim; ++s) add(s, e->first, s, Rational(-e->second) * ct);
          }
        }
        // -alpha(Y, X.Z) and +alpha(X, Y.Z)
        for (int dd = 1; dd <= dim; ++dd) {
          const Rational& cx = spec.ad(xr).at(dd - 1, z - 1);
          if (cx != 0) {
            if (auto e = spec.arg_index(y, dd)) {
              for (int s = 1; s <= dim; ++s) add(s, e->first, s, Rational(-e->second) * cx);
            }
          }
          const Rational& cy = spec.ad(yr).at(dd - 1, z - 1);
          if (cy != 0) {
            if (auto e = spec.arg_index(x, dd)) {
              for (int s = 1; s <= dim; ++s) add(s, e->first, s, Rational(e->second) * cy);
            }
          }
        }
        emit(comps, CocycleRowMeta{xr, yr, z, 1}, fn);
      }
    }
  }
}

Matrix cocycle_matrix(const ComplexSpec& spec) {
  const int dim = spec.algebra().dim();
  const int per_triple = spec.value_dim();
  const int fo_count = spec.fo().count();
  Matrix m(fo_count * fo_count * dim * per_triple, spec.cochain_dim());
  for_each_cocycle_row(spec, [&](const CocycleRowMeta& meta, const SparseRow& row) {
    int r = ((meta.x_rank * fo_count + meta.y_rank) * dim + (meta.z - 1)) * per_triple + (meta.comp - 1);
    for (const auto& [c, v] : row) m.at(r, c) = v;
  });
  return m;
}

std::vector<SparseRow> coboundary_columns(const ComplexSpec& spec) {
  const NAryAlgebra& a = spec.algebra();
  const int dim = a.dim();
  const int vd = spec.value_dim();
  const SubsetIndexer& fo = spec.fo();

  // enumerate cochain arguments as (canonical (n-1)-subset, z)
  std::vector<std::pair<std::vector<int>, int>> args;
  if (spec.symmetry() == Symmetry::FullSkew) {
    for (const auto& s : spec.full_args().subsets())
      args.emplace_back(std::vector<int>(s.begin(), s.end() - 1), s.back());
  } else {
    for (const auto& t : fo.subsets())
      for (int z = 1; z <= dim; ++z) args.emplace_back(t, z);
  }

  std::vector<SparseRow> cols;
  if (spec.action() == Action::Trivial) {
    for (int q = 1; q <= dim; ++q) {
      Entries col;
      for (int i = 0; i < static_cast<int>(args.size()); ++i) {
        auto [t, z] = args[i];
        t.push_back(z);
        for (const auto& [d, c] : bracket_basis(a, t))
          if (d == q) col[i] -= c;  // (delta beta)(X,Z) = -beta([X,Z])
      }
      SparseRow sparse;
      for (auto& [c, v] : col)
        if (v != 0) sparse.emplace_back(c, std::move(v));
      cols.push_back(std::move(sparse));
    }
    return cols;
  }

  std::vector<int> scratch;
  for (int p = 1; p <= dim; ++p) {
    for (int q = 1; q <= dim; ++q) {
      // beta(e_q) = e_p
      Entries col;
      auto add = [&](int argi, int s, const Rational& c) {
        if (c != 0) col[argi * vd + (s - 1)] += c;
      };
      for (int i = 0; i < static_cast<int>(args.size()); ++i) {
        const auto& [t, z] = args[i];
        // -beta(X.z)
        scratch = t;
        scratch.push_back(z);
        for (const auto& [d, c] : bracket_basis(a, scratch))
          if (d == q) add(i, p, -c);
        // +sum_a [X_1..beta(X_a)@a..X_{n-1}, z]
        for (std::size_t pos = 0; pos < t.size(); ++pos) {
          if (t[pos] != q) continue;
          scratch = t;
          scratch[pos] = p;
          scratch.push_back(z);
          for (const auto& [s, c] : bracket_basis(a, scratch)) add(i, s, c);
        }
        // +[X, beta(z)]
        if (z == q) {
          scratch = t;
          scratch.push_back(p);
          for (const auto& [s, c] : bracket_basis(a, scratch)) add(i, s, c);
        }
      }
      SparseRow sparse;
      for (auto& [c, v] : col)
        if (v != 0) sparse.emplace_back(c, std::move(v));
      cols.push_back(std::move(sparse));
    }
  }
  return cols;
}

Matrix coboundary_matrix(const ComplexSpec& spec) {
  std::vector<SparseRow> cols = coboundary_columns(spec);
  Matrix m(spec.cochain_dim(), static_cast<int>(cols.size()));
  for (int j = 0; j < static_cast<int>(cols.size()); ++j)
    for (const auto& [r, v] : cols[j]) m.at(r, j) = v;
  return m;
}

Cochain coboundary_of(const ComplexSpec& spec, const std::vector<Rational>& beta) {
  if (static_cast<int>(beta.size()) != spec.degree0_dim())
    throw std::domain_error("degree-0 cochain coefficient count mismatch");
  std::vector<SparseRow> cols = coboundary_columns(spec);
  Cochain out{spec.action(), spec.symmetry(), std::vector<Rational>(spec.cochain_dim())};
  for (int j = 0; j < static_cast<int>(cols.size()); ++j) {
    if (beta[j] == 0) continue;
    for (const auto& [c, v] : cols[j]) out.coeffs[c] += beta[j] * v;
  }
  return out;
}

namespace {

std::optional<CocycleRowMeta> first_cocycle_violation(const ComplexSpec& spec, const Cochain& alpha) {
  std::optional<CocycleRowMeta> violated;
  for_each_cocycle_row(spec, [&](const CocycleRowMeta& meta, const SparseRow& row) {
    if (violated) return;
    Rational dot = 0;
    for (const auto& [c, v] : row) dot += v * alpha.coeffs[c];
    if (dot != 0) violated = meta;
  });
  return violated;
}

NAryAlgebra algebra_plus_cochain(const NAryAlgebra& a, const ComplexSpec& spec, const Cochain& alpha,
                                 const Rational& t, int extra_dim) {
  // constants of a (re-stored in the cochain symmetry class) + t * alpha,
  // alpha valued either in the algebra (adjoint) or on one central generator
  // at index N+1 (trivial).
  Symmetry out_sym = spec.symmetry() == Symmetry::FullSkew ? Symmetry::FullSkew : Symmetry::SkewFirstNMinus1;
  NAryAlgebra out(a.arity(), a.dim() + extra_dim, out_sym);
  for (const auto& [key, v] : a.constants()) {
    if (out_sym == Symmetry::FullSkew) {
      out.add_constant(key.args, key.target, v);
    } else {
      // expand the fully skew key over all canonical restricted slots
      std::vector<int> idx(key.args.size());
      std::iota(idx.begin(), idx.end(), 0);
      do {
        std::vector<int> args(key.args.size());
        for (std::size_t i = 0; i < idx.size(); ++i) args[i] = key.args[idx[i]];
        std::vector<int> head(args.begin(), args.end() - 1);
        if (!std::is_sorted(head.begin(), head.end())) continue;
        out.set_constant(args, key.target, a.constant(args, key.target));
      } while (std::next_permutation(idx.begin(), idx.end()));
    }
  }
  if (t != 0) {
    const int vd = spec.value_dim();
    for (int coord = 0; coord < spec.cochain_dim(); ++coord) {
      if (alpha.coeffs[coord] == 0) continue;
      int argi = coord / vd;
      int target = spec.action() == Action::Adjoint ? coord % vd + 1 : a.dim() + 1;
      std::vector<int> args;
      if (spec.symmetry() == Symmetry::FullSkew) {
        args = spec.full_args().subset(argi);
      } else {
        args = spec.fo().subset(argi / a.dim());
        args.push_back(argi % a.dim() + 1);
      }
      out.add_constant(args, target, t * alpha.coeffs[coord]);
    }
  }
  return out;
}

}  // namespace

NAryAlgebra central_extend(const NAryAlgebra& a, const Cochain& alpha) {
  if (alpha.action != Action::Trivial) throw std::domain_error("central extension takes a trivial-action cochain");
  ComplexSpec spec(a, Action::Trivial, alpha.symmetry);
  if (static_cast<int>(alpha.coeffs.size()) != spec.cochain_dim())
    throw std::domain_error("cochain coefficient count mismatch");
  if (auto violated = first_cocycle_violation(spec, alpha)) {
    std::ostringstream msg;
    msg << "not a cocycle: violated at (X=" << violated->x_rank << ", Y=" << violated->y_rank
        << ", Z=e_" << violated->z << ")";
    throw CocycleError(msg.str(), *violated);
  }
  NAryAlgebra out = algebra_plus_cochain(a, spec, alpha, Rational(1), 1);
  out.set_name(a.name().empty() ? "extended" : a.name() + "+ext");
  if (!fi_residual(out).ok())
    throw std::logic_error("central extension by a verified cocycle failed the FI");
  return out;
}

DeformResult deform(const NAryAlgebra& a, const Cochain& alpha, const Rational& t) {
  if (alpha.action != Action::Adjoint) throw std::domain_error("deformation takes an adjoint-action cochain");
  ComplexSpec spec(a, Action::Adjoint, alpha.symmetry);
  if (static_cast<int>(alpha.coeffs.size()) != spec.cochain_dim())
    throw std::domain_error("cochain coefficient count mismatch");
  DeformResult result{algebra_plus_cochain(a, spec, alpha, t, 0), false, false};
  result.algebra.set_name(a.name().empty() ? "deformed" : a.name() + "+t*alpha");
  result.first_order_ok = !first_cocycle_violation(spec, alpha).has_value();
  result.exact_fi_ok = fi_residual(result.algebra).ok();
  return result;
}

CohomologyReport h1(const ComplexSpec& spec) {
  CohomologyReport report;
  report.c1 = spec.cochain_dim();

  RrefAccumulator eqs(spec.cochain_dim());
  for_each_cocycle_row(spec, [&](const CocycleRowMeta&, const SparseRow& row) { eqs.insert(row); });
  report.z1 = spec.cochain_dim() - eqs.rank();
  std::vector<std::vector<Rational>> kernel = eqs.kernel_basis();

  RrefAccumulator kernel_span(spec.cochain_dim());
  for (const auto& k : kernel) kernel_span.insert(to_sparse(k));

  std::vector<SparseRow> cols = coboundary_columns(spec);
  RrefAccumulator image(spec.cochain_dim());
  for (const auto& col : cols) {
    if (!kernel_span.contains(col))
      throw std::logic_error("coboundary image escapes the cocycle kernel: assembly bug");
    image.insert(col);
  }
  report.b1 = image.rank();
  report.h1 = report.z1 - report.b1;

  // representatives: kernel vectors reduced modulo the image, then echelonized
  RrefAccumulator reps(spec.cochain_dim());
  for (const auto& k : kernel) {
    SparseRow residue = image.reduce(to_sparse(k));
    if (!residue.empty()) reps.insert(std::move(residue));
  }
  if (reps.rank() != report.h1) throw std::logic_error("representative count mismatch");
  for (const auto& [pivot, row] : reps.rows()) {
    Cochain c{spec.action(), spec.symmetry(), to_dense(row, spec.cochain_dim())};
    if (spec.action() == Action::Trivial) {
      NAryAlgebra ext = central_extend(spec.algebra(), c);
      report.exact_fi_ok.push_back(fi_residual(ext).ok());
    } else {
      DeformResult d = deform(spec.algebra(), c, Rational(1));
      report.exact_fi_ok.push_back(d.exact_fi_ok);
    }
    report.representatives.push_back(std::move(c));
  }
  return report;
}

Rational delta_square_residual(const ComplexSpec& spec) {
  std::vector<SparseRow> cols = coboundary_columns(spec);
  // per cochain coordinate: the degree-0 columns touching it
  std::vector<std::vector<std::pair<int, const Rational*>>> by_coord(spec.cochain_dim());
  for (int j = 0; j < static_cast<int>(cols.size()); ++j)
    for (const auto& [c, v] : cols[j]) by_coord[c].emplace_back(j, &v);

  Rational worst = 0;
  std::map<int, Rational> acc;
  for_each_cocycle_row(spec, [&](const CocycleRowMeta&, const SparseRow& row) {
    acc.clear();
    for (const auto& [c, v] : row)
      for (const auto& [j, pv] : by_coord[c]) acc[j] += v * *pv;
    for (const auto& [j, v] : acc) {
      Rational av = rational_abs(v);
      if (av > worst) worst = av;
    }
  });
  return worst;
}

Cochain restricted_deformation_cocycle(const NAryAlgebra& a) {
  if (a.arity() != 3) throw std::domain_error("deformation cocycle exists for arity 3 only");
  if (a.dim() != 4 || a.symmetry() != Symmetry::FullSkew)
    throw std::domain_error("deformation cocycle needs a 4-dimensional simple Filippov algebra");

  // recover the sign factors and check the algebra is the eq-(3.2) family
  std::vector<int> eps(4);
  for (int missing = 1; missing <= 4; ++missing) {
    std::vector<int> args;
    for (int v = 1; v <= 4; ++v)
      if (v != missing) args.push_back(v);
    Rational f = a.constant(args, missing);
    int sign = missing % 2 == 1 ? 1 : -1;
    Rational e = sign * f;
    if (e != 1 && e != -1) throw std::domain_error("not a simple Filippov algebra of the standard family");
    eps[missing - 1] = e == 1 ? 1 : -1;
  }
  if (a.constants() != simple_fa(3, Signature{eps}).constants())
    throw std::domain_error("not a simple Filippov algebra of the standard family");

  ComplexSpec spec(a, Action::Adjoint, Symmetry::SkewFirstNMinus1);
  Cochain out{Action::Adjoint, Symmetry::SkewFirstNMinus1, std::vector<Rational>(spec.cochain_dim())};
  const int dim = 4;
  for (int tr = 0; tr < spec.fo().count(); ++tr) {
    int a1 = spec.fo().subset(tr)[0];
    int a2 = spec.fo().subset(tr)[1];
    for (int c = 1; c <= dim; ++c)
      for (int d = 1; d <= dim; ++d) {
        int val = 2 * eps[c - 1] * ((a1 == c && a2 == d ? 1 : 0) - (a1 == d && a2 == c ? 1 : 0));
        if (val != 0) out.coeffs[(static_cast<std::size_t>(tr) * dim + (c - 1)) * dim + (d - 1)] = val;
      }
  }

  if (first_cocycle_violation(spec, out)) throw std::logic_error("deformation cocycle failed the cocycle condition");
  RrefAccumulator image(spec.cochain_dim());
  for (const auto& col : coboundary_columns(spec)) image.insert(col);
  if (image.contains(to_sparse(out.coeffs))) throw std::logic_error("deformation cocycle is a coboundary");
  return out;
}

}  // namespace nary
