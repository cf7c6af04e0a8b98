// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. NARY_SEED (decimal) reseeds the randomized parts.
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "nary/catalog.hpp"
#include "nary/cohomology.hpp"
#include "nary/gla.hpp"
#include "nary/polynomial.hpp"
#include "nary/structure.hpp"
#include "oracles.hpp"

using namespace nary;

namespace {

struct Check {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

std::vector<Signature> all_signatures(int dim) {
  std::vector<Signature> out;
  for (int mask = 0; mask < (1 << dim); ++mask) {
    Signature sig;
    for (int i = 0; i < dim; ++i) sig.signs.push_back(mask & (1 << i) ? -1 : 1);
    out.push_back(std::move(sig));
  }
  return out;
}

CohomologyReport run_h1(const NAryAlgebra& a, Action action, Symmetry sym) {
  return h1(ComplexSpec(a, action, sym));
}

// ---- criteria ------------------------------------------------------------

void criterion_fi_families(Check& c) {
  int count = 0;
  for (int n = 2; n <= 5; ++n) {
    for (const Signature& sig : all_signatures(n + 1)) {
      NAryAlgebra a = simple_fa(n, sig);
      c.require(fi_residual(a).ok(), "fi_residual != 0 for " + a.name());
      ++count;
    }
  }
  c.require(count == 120, "expected 120 signature choices");
}

void criterion_whitehead(Check& c) {
  for (const char* name : {"A4", "A5", "A6", "A_1_3", "so3", "sum:A4:A4"}) {
    NAryAlgebra a = *catalog_by_name(name);
    for (Action action : {Action::Trivial, Action::Adjoint}) {
      CohomologyReport r = run_h1(a, action, Symmetry::FullSkew);
      std::ostringstream what;
      what << "H1 " << to_string(action) << "/full of " << name << " is " << r.h1 << ", want 0";
      c.require(r.h1 == 0, what.str());
    }
  }
}

void criterion_restricted_deformations(Check& c) {
  NAryAlgebra a4 = *catalog_by_name("A4");
  CohomologyReport r = run_h1(a4, Action::Adjoint, Symmetry::SkewFirstNMinus1);
  c.require(r.h1 >= 1, "restricted adjoint H1 of A4 must be nontrivial");
  c.require(r.h1 == 1, "restricted adjoint H1 of A4 computed dimension 1");
  if (c.ok) c.detail = "H1(A4, adjoint/restricted) = " + std::to_string(r.h1);

  // the explicit cocycle is certified non-trivial at construction; tie it to
  // the computed representative class
  ComplexSpec spec(a4, Action::Adjoint, Symmetry::SkewFirstNMinus1);
  Cochain alpha = restricted_deformation_cocycle(a4);
  RrefAccumulator image(spec.cochain_dim());
  for (const auto& col : coboundary_columns(spec)) image.insert(col);
  c.require(!image.contains(to_sparse(alpha.coeffs)), "deformation cocycle must not be a coboundary");
  for (const Cochain& rep : r.representatives) image.insert(to_sparse(rep.coeffs));
  c.require(image.contains(to_sparse(alpha.coeffs)),
            "deformation cocycle must match the computed representative modulo coboundaries");

  for (const char* name : {"A5", "A6", "so3", "so12"}) {
    CohomologyReport rr = run_h1(*catalog_by_name(name), Action::Adjoint, Symmetry::SkewFirstNMinus1);
    c.require(rr.h1 == 0, std::string("restricted adjoint H1 of ") + name + " must vanish");
  }
}

void criterion_restricted_extensions(Check& c) {
  for (const char* name : {"A4", "A5", "A6", "so3", "so12"}) {
    CohomologyReport r = run_h1(*catalog_by_name(name), Action::Trivial, Symmetry::SkewFirstNMinus1);
    c.require(r.h1 == 0, std::string("restricted trivial H1 of ") + name + " must vanish");
  }
}

void criterion_abelian_controls(Check& c) {
  NAryAlgebra ab = abelian(3, 4);
  struct Expect {
    Action action;
    Symmetry sym;
    int h1;
  };
  for (const Expect& e : {Expect{Action::Trivial, Symmetry::FullSkew, 4},
                          Expect{Action::Adjoint, Symmetry::FullSkew, 16},
                          Expect{Action::Trivial, Symmetry::SkewFirstNMinus1, 24},
                          Expect{Action::Adjoint, Symmetry::SkewFirstNMinus1, 96}}) {
    CohomologyReport r = run_h1(ab, e.action, e.sym);
    std::ostringstream what;
    what << "abelian H1 " << to_string(e.action) << "/" << to_string(e.sym) << " = " << r.h1 << ", want "
         << e.h1;
    c.require(r.h1 == e.h1, what.str());
    c.require(r.z1 == r.c1, "every abelian cochain is a cocycle");
    c.require(r.b1 == 0, "abelian complexes have no coboundaries");
  }
}

void criterion_nilpotency(Check& c) {
  std::vector<NAryAlgebra> algebras;
  for (const char* name : {"A4", "A5", "A_1_3"}) algebras.push_back(*catalog_by_name(name));

  testing::Rng rng(testing::env_seed(1006));
  std::vector<std::string> arity2{"so3", "so12", "abelian:2:2", "abelian:2:3"};
  std::vector<std::string> arity3{"A4", "A_1_3", "A_2_2", "A_3_1", "abelian:3:1", "abelian:3:2"};
  for (int i = 0; i < 10; ++i) {
    const auto& pool = rng.range(0, 1) == 0 ? arity2 : arity3;
    NAryAlgebra lhs = *catalog_by_name(pool[rng.range(0, pool.size() - 1)]);
    NAryAlgebra rhs = *catalog_by_name(pool[rng.range(0, pool.size() - 1)]);
    algebras.push_back(direct_sum(lhs, rhs));
  }
  for (const NAryAlgebra& a : algebras)
    for (Action action : {Action::Trivial, Action::Adjoint})
      for (Symmetry sym : {Symmetry::FullSkew, Symmetry::SkewFirstNMinus1}) {
        Rational r = delta_square_residual(ComplexSpec(a, action, sym));
        c.require(r == 0, "delta^2 != 0 on " + a.name() + " (" + to_string(action) + "/" + to_string(sym) + ")");
      }
}

void criterion_oracle_equivalence(Check& c) {
  std::vector<NAryAlgebra> algebras;
  for (const char* name : {"so3", "so12", "abelian:2:3", "A4", "A_1_3", "A_2_2", "abelian:3:4", "A5",
                           "A_1_4", "A6", "sum:so3:so12", "sum:A4:abelian:3:2"})
    algebras.push_back(*catalog_by_name(name));

  NAryAlgebra broken = *catalog_by_name("A4");
  broken.set_constant({1, 2, 3}, 1, Rational(1));
  broken.set_name("A4-perturbed");
  algebras.push_back(broken);

  NAryAlgebra a4 = *catalog_by_name("A4");
  algebras.push_back(deform(a4, restricted_deformation_cocycle(a4), Rational(1)).algebra);  // restricted class
  algebras.push_back(as_symmetry(a4, Symmetry::SkewFirstNMinus1));

  for (const NAryAlgebra& a : algebras) {
    FiReport via_constants = fi_residual(a);
    auto via_brackets = testing::fi_direct_oracle(a);
    c.require(via_constants.ok() == via_brackets.empty(),
              "zero/nonzero disagreement between the two FI routes on " + a.name());
    std::set<std::vector<int>> lhs, rhs;
    auto key = [](const std::vector<int>& b, const std::vector<int>& ab, int s) {
      std::vector<int> k = b;
      k.push_back(0);
      k.insert(k.end(), ab.begin(), ab.end());
      k.push_back(s);
      return k;
    };
    for (const auto& w : via_constants.witnesses) lhs.insert(key(w.b_block, w.a_block, w.target));
    for (const auto& w : via_brackets) rhs.insert(key(w.b_block, w.a_block, w.target));
    c.require(lhs == rhs, "witness sets differ between the two FI routes on " + a.name());
  }
}

void criterion_structure(Check& c) {
  for (const char* name : {"A4", "A5", "A6", "A_1_3", "sum:A4:A4"})
    c.require(is_semisimple(*catalog_by_name(name)).semisimple, std::string(name) + " must be semisimple");

  SemisimpleReport ab = is_semisimple(abelian(3, 4));
  c.require(!ab.semisimple && ab.kernel.size() == 4, "abelian(3,4) kernel must be everything");

  SemisimpleReport mixed = is_semisimple(*catalog_by_name("sum:A4:abelian:3:1"));
  Vector e5(5);
  e5[4] = 1;
  c.require(!mixed.semisimple && mixed.kernel.size() == 1 && mixed.kernel[0] == e5,
            "A4 + abelian kernel must be the abelian direction");

  for (int n = 2; n <= 5; ++n) {
    LieAlgebraReport lie = lie_algebra_of(simple_fa(n, Signature::euclidean(n + 1)));
    c.require(lie.dim == static_cast<int>(binomial(n + 1, 2)),
              "Lie algebra of A" + std::to_string(n + 1) + " must have dimension C(n+1,2)");
    c.require(lie.closure_ok, "inner derivations of A" + std::to_string(n + 1) + " must close");
  }
}

void criterion_lie_consistency(Check& c) {
  for (const char* name : {"A4", "A5"}) {
    NAryAlgebra a = *catalog_by_name(name);
    SubsetIndexer ix = fo_indexer(a);
    for (int i = 0; i < ix.count(); ++i)
      for (int j = 0; j < ix.count(); ++j) {
        FundamentalObject x = fo_basis_element(a, ix.subset(i));
        FundamentalObject y = fo_basis_element(a, ix.subset(j));
        Matrix ax = ad_matrix(a, x), ay = ad_matrix(a, y);
        Matrix comm = ax * ay - ay * ax;
        c.require(comm == ad_matrix(a, compose(a, x, y)),
                  std::string("ad_{X.Y} != [ad_X, ad_Y] on ") + name);
      }
  }
}

void criterion_nambu(Check& c) {
  testing::Rng rng(testing::env_seed(1010));
  auto random_poly = [&](int nvars, unsigned max_deg) {
    Polynomial p(nvars);
    int terms = static_cast<int>(rng.range(1, 4));
    for (int t = 0; t < terms; ++t) {
      std::vector<unsigned> e(nvars);
      unsigned budget = max_deg;
      for (int i = 0; i < nvars; ++i) {
        unsigned d = static_cast<unsigned>(rng.range(0, budget));
        e[i] = d;
        budget -= d;
      }
      p.add_term(std::move(e), rng.rational(-3, 3, 2));
    }
    return p;
  };

  auto run_tuple = [&](int n, unsigned deg, int index) {
    std::vector<Polynomial> fs, gs;
    for (int i = 0; i < n - 1; ++i) fs.push_back(random_poly(n, deg));
    for (int i = 0; i < n; ++i) gs.push_back(random_poly(n, deg));
    c.require(np_fi_residual(fs, gs).is_zero(),
              "FI residual nonzero on tuple " + std::to_string(index) + " (n=" + std::to_string(n) + ")");
    c.require(leibniz_rule_residual(fs, random_poly(n, deg), random_poly(n, deg)).is_zero(),
              "Leibniz residual nonzero (n=" + std::to_string(n) + ")");
    c.require(bracket_skew_check(gs), "skewness violated (n=" + std::to_string(n) + ")");
  };
  for (int i = 0; i < 100; ++i) run_tuple(3, 3, i);
  for (int i = 0; i < 25; ++i) run_tuple(4, 2, i);
}

void criterion_gji(Check& c) {
  NAryAlgebra so3 = *catalog_by_name("so3");
  GjiReport base = gji_residual(GLATensor(so3));
  FiReport base_fi = fi_residual(so3);
  c.require(base.ok(), "so(3) must satisfy the GJI");
  c.require(base_fi.ok(), "so(3) must satisfy the FI");
  c.require(base.ok() == base_fi.ok(), "n=2 GJI and FI must agree on so(3)");

  NAryAlgebra perturbed = so3;
  perturbed.set_constant({1, 2}, 1, Rational(1));
  GjiReport bad = gji_residual(GLATensor(perturbed));
  FiReport bad_fi = fi_residual(perturbed);
  c.require(!bad.ok() && bad.max_violation > 0, "perturbed so(3) must violate the GJI");
  c.require(bad.ok() == bad_fi.ok(), "n=2 GJI and FI must agree on the perturbed copy");
}

void criterion_basis_invariance(Check& c) {
  NAryAlgebra a = *catalog_by_name("A4");
  struct Dims {
    int c1, z1, b1, h1;
  };
  auto dims_of = [&](const NAryAlgebra& alg) {
    std::vector<Dims> out;
    for (Action action : {Action::Trivial, Action::Adjoint})
      for (Symmetry sym : {Symmetry::FullSkew, Symmetry::SkewFirstNMinus1}) {
        CohomologyReport r = run_h1(alg, action, sym);
        out.push_back(Dims{r.c1, r.z1, r.b1, r.h1});
      }
    return out;
  };
  std::vector<Dims> reference = dims_of(a);
  testing::Rng rng(testing::env_seed(1012));
  for (int trial = 0; trial < 5; ++trial) {
    NAryAlgebra b = transform_basis(a, testing::random_invertible(rng, 4));
    std::vector<Dims> got = dims_of(b);
    for (std::size_t i = 0; i < reference.size(); ++i) {
      bool same = reference[i].c1 == got[i].c1 && reference[i].z1 == got[i].z1 &&
                  reference[i].b1 == got[i].b1 && reference[i].h1 == got[i].h1;
      c.require(same, "cohomology dimensions changed under a basis change (trial " +
                          std::to_string(trial + 1) + ")");
    }
  }
}

struct Criterion {
  int number;
  std::string description;
  double budget_seconds;
  std::function<void(Check&)> run;
};

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {1, "FI exactness for all signature families n=2..5", 10.0, criterion_fi_families},
      {2, "Whitehead lemma: full-skew H1 vanishes for semisimple algebras", 60.0, criterion_whitehead},
      {3, "Restricted adjoint H1: nontrivial exactly for the 4-dim simple FAs", 60.0, criterion_restricted_deformations},
      {4, "Restricted trivial H1 vanishes: central extensions stay trivial", 30.0, criterion_restricted_extensions},
      {5, "Abelian cohomology controls (4/16/24/96)", 60.0, criterion_abelian_controls},
      {6, "Coboundary nilpotency delta^2 = 0 across specs and random sums", 60.0, criterion_nilpotency},
      {7, "Oracle equivalence of the two FI routes (dim <= 6)", 60.0, criterion_oracle_equivalence},
      {8, "Structure theory: semisimplicity, kernels, Lie(G) dimensions", 60.0, criterion_structure},
      {9, "Lie consistency ad_{X.Y} = [ad_X, ad_Y] on A4 and A5", 60.0, criterion_lie_consistency},
      {10, "Nambu identities on seeded random polynomial tuples", 60.0, criterion_nambu},
      {11, "GJI on so(3) and a perturbed copy, agreeing with the FI", 60.0, criterion_gji},
      {12, "Cohomology dimensions invariant under 5 random basis changes", 60.0, criterion_basis_invariance},
  };

  int failures = 0;
  for (const Criterion& criterion : criteria) {
    Check check;
    auto start = std::chrono::steady_clock::now();
    try {
      criterion.run(check);
    } catch (const std::exception& e) {
      check.ok = false;
      check.detail = std::string("exception: ") + e.what();
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed > criterion.budget_seconds) {
      check.ok = false;
      check.detail = "runtime " + std::to_string(elapsed) + "s exceeds budget";
    }
    std::printf("%s criterion %2d: %s (%.2fs)%s%s\n", check.ok ? "PASS" : "FAIL", criterion.number,
                criterion.description.c_str(), elapsed, check.detail.empty() ? "" : " -- ",
                check.detail.c_str());
    failures += check.ok ? 0 : 1;
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures;
}
