#include "nary/gla.hpp"

#include <stdexcept>

namespace nary {

GLATensor::GLATensor(int arity, int dim, std::string name)
    : alg_(arity, dim, Symmetry::FullSkew, std::move(name)) {
  if (arity % 2 != 0) throw std::domain_error("GLA tensors need even arity (odd case is the mixed GJI)");
}

GLATensor::GLATensor(NAryAlgebra constants) : alg_(std::move(constants)) {
  if (alg_.symmetry() != Symmetry::FullSkew) throw std::domain_error("GLA tensors are fully antisymmetric");
  if (alg_.arity() % 2 != 0) throw std::domain_error("GLA tensors need even arity (odd case is the mixed GJI)");
}

GjiReport gji_residual(const GLATensor& omega) {
  const NAryAlgebra& w = omega.constants();
  const int n = w.arity();
  const int dim = w.dim();
  GjiReport report;
  report.max_violation = 0;

  // For each increasing (2n-1)-block, sum over shuffles into an n-subset
  // (first factor) and the complement (second factor, contracted index last).
  std::vector<int> first(n), rest(n);
  for (const auto& block : increasing_subsets(dim, 2 * n - 1)) {
    for (int s = 1; s <= dim; ++s) {
      Rational total = 0;
      for (const auto& picks : increasing_subsets(2 * n - 1, n)) {
        // picks: 1-based positions within block going to the first factor
        first.clear();
        rest.clear();
        std::size_t pi = 0;
        for (int pos = 1; pos <= 2 * n - 1; ++pos) {
          if (pi < picks.size() && picks[pi] == pos) {
            first.push_back(block[pos - 1]);
            ++pi;
          } else {
            rest.push_back(block[pos - 1]);
          }
        }
        // shuffle sign: parity of the permutation (first, rest) of block
        int inversions = 0;
        for (std::size_t i = 0; i < first.size(); ++i)
          for (std::size_t j = 0; j < rest.size(); ++j)
            if (first[i] > rest[j]) ++inversions;
        int sign = inversions % 2 == 0 ? 1 : -1;

        rest.push_back(0);
        for (const auto& [l, c1] : bracket_basis(w, first)) {
          rest.back() = l;
          Rational c2 = w.constant(rest, s);
          if (c2 != 0) total += sign * c1 * c2;
        }
        rest.pop_back();
      }
      if (total != 0) {
        Rational av = rational_abs(total);
        if (av > report.max_violation) report.max_violation = av;
        report.witnesses.push_back(GjiWitness{block, s, std::move(total)});
      }
    }
  }
  return report;
}

}  // namespace nary
