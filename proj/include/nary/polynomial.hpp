#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "nary/rational.hpp"

namespace nary {

// Multivariate polynomial over exact rationals in a fixed number of
// variables. Terms map exponent tuples to nonzero coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(int nvars) : nvars_(nvars) {}

  static Polynomial constant(int nvars, const Rational& c);
  static Polynomial variable(int nvars, int index);  // 0-based

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<std::vector<unsigned>, Rational>& terms() const { return terms_; }

  void add_term(std::vector<unsigned> exponents, const Rational& c);

  Polynomial operator+(const Polynomial& rhs) const;
  Polynomial operator-(const Polynomial& rhs) const;
  Polynomial operator*(const Polynomial& rhs) const;
  Polynomial operator-() const;
  Polynomial pow(unsigned e) const;

  Polynomial derivative(int var) const;

  // Deterministic rendering, graded-lexicographic term order, "0" when zero.
  std::string str(std::span<const std::string> var_names) const;

  bool operator==(const Polynomial&) const = default;

 private:
  int nvars_ = 0;
  std::map<std::vector<unsigned>, Rational> terms_;
};

// Thrown on malformed polynomial text; position is a 0-based byte offset.
class PolynomialParseError : public std::runtime_error {
 public:
  PolynomialParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message), position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Grammar: sums/differences of products of factors; factors are rational
// literals ("2", "2/3"), variable names, or parenthesized expressions, each
// optionally raised by ^ to a non-negative integer power.
Polynomial parse_polynomial(std::string_view text, std::span<const std::string> variables);

// Jacobian determinant bracket [f_1..f_n] = det(df_i/dx_j), expanded by
// cofactors so all arithmetic stays in the polynomial ring.
Polynomial jacobian_bracket(std::span<const Polynomial> fs);

// Left-hand minus right-hand side of the Filippov identity for the Jacobian
// bracket; identically zero.
Polynomial np_fi_residual(std::span<const Polynomial> fs, std::span<const Polynomial> gs);

// {f_1..f_{n-1}, gh} - g{f..,h} - {f..,g}h; identically zero.
Polynomial leibniz_rule_residual(std::span<const Polynomial> fs, const Polynomial& g, const Polynomial& h);

// True iff every adjacent transposition flips the bracket sign exactly.
bool bracket_skew_check(std::span<const Polynomial> fs);

}  // namespace nary
