#include "nary/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace nary {

Polynomial Polynomial::constant(int nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(std::vector<unsigned>(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(int nvars, int index) {
  if (index < 0 || index >= nvars) throw std::domain_error("variable index out of range");
  Polynomial p(nvars);
  std::vector<unsigned> e(nvars, 0);
  e[index] = 1;
  p.add_term(std::move(e), Rational(1));
  return p;
}

void Polynomial::add_term(std::vector<unsigned> exponents, const Rational& c) {
  if (static_cast<int>(exponents.size()) != nvars_) throw std::domain_error("exponent tuple length mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(std::move(exponents), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
  if (nvars_ != rhs.nvars_) throw std::domain_error("polynomials over different variables");
  Polynomial out = *this;
  for (const auto& [e, c] : rhs.terms_) out.add_term(e, c);
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
  if (nvars_ != rhs.nvars_) throw std::domain_error("polynomials over different variables");
  Polynomial out = *this;
  for (const auto& [e, c] : rhs.terms_) out.add_term(e, Rational(-c));
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(nvars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
  if (nvars_ != rhs.nvars_) throw std::domain_error("polynomials over different variables");
  Polynomial out(nvars_);
  std::vector<unsigned> e(nvars_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : rhs.terms_) {
      for (int i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
      out.add_term(e, c1 * c2);
    }
  return out;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial out = Polynomial::constant(nvars_, Rational(1));
  for (unsigned i = 0; i < e; ++i) out = out * *this;
  return out;
}

Polynomial Polynomial::derivative(int var) const {
  if (var < 0 || var >= nvars_) throw std::domain_error("variable index out of range");
  Polynomial out(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    std::vector<unsigned> de = e;
    --de[var];
    out.add_term(std::move(de), c * e[var]);
  }
  return out;
}

std::string Polynomial::str(std::span<const std::string> var_names) const {
  if (static_cast<int>(var_names.size()) != nvars_) throw std::domain_error("variable name count mismatch");
  if (terms_.empty()) return "0";
  // graded lex, highest degree first
  std::vector<const std::pair<const std::vector<unsigned>, Rational>*> order;
  for (const auto& t : terms_) order.push_back(&t);
  std::sort(order.begin(), order.end(), [](const auto* a, const auto* b) {
    unsigned da = std::accumulate(a->first.begin(), a->first.end(), 0u);
    unsigned db = std::accumulate(b->first.begin(), b->first.end(), 0u);
    if (da != db) return da > db;
    return a->first > b->first;
  });
  std::ostringstream out;
  bool first = true;
  for (const auto* t : order) {
    const auto& [e, c] = *t;
    Rational coeff = c;
    if (first) {
      if (coeff < 0) {
        out << "-";
        coeff = -coeff;
      }
    } else {
      out << (coeff < 0 ? " - " : " + ");
      if (coeff < 0) coeff = -coeff;
    }
    first = false;
    bool monomial = std::any_of(e.begin(), e.end(), [](unsigned x) { return x > 0; });
    if (coeff != 1 || !monomial) out << to_string(coeff);
    bool star = coeff != 1 && monomial;
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (star) out << "*";
      out << var_names[i];
      if (e[i] > 1) out << "^" << e[i];
      star = true;
    }
  }
  return out.str();
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::span<const std::string> variables) : text_(text), vars_(variables) {}

  Polynomial run() {
    Polynomial p = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw PolynomialParseError(message, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expression() {
    skip_space();
    bool negate = false;
    if (eat('-'))
      negate = true;
    else
      eat('+');
    Polynomial p = term();
    if (negate) p = -p;
    while (true) {
      skip_space();
      if (eat('+'))
        p = p + term();
      else if (eat('-'))
        p = p - term();
      else
        break;
    }
    return p;
  }

  Polynomial term() {
    Polynomial p = factor();
    while (eat('*')) p = p * factor();
    return p;
  }

  Polynomial factor() {
    Polynomial base = atom();
    if (eat('^')) {
      skip_space();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ == start) fail("expected a non-negative integer exponent");
      unsigned e = 0;
      for (std::size_t i = start; i < pos_; ++i) {
        e = e * 10 + (text_[i] - '0');
        if (e > 64) fail("exponent too large");
      }
      return base.pow(e);
    }
    return base;
  }

  Polynomial atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expression();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
    fail("expected a number, variable or '('");
  }

  Polynomial number() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string lit(text_.substr(start, pos_ - start));
    // optional /q, only when followed by digits (so "2/x" stays an error)
    if (pos_ < text_.size() && text_[pos_] == '/') {
      std::size_t mark = pos_++;
      std::size_t dstart = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ == dstart) {
        pos_ = mark;
        fail("expected an integer denominator");
      }
      lit += "/";
      lit += text_.substr(dstart, pos_ - dstart);
    }
    auto r = try_rational_from_string(lit);
    if (!r) fail("malformed rational literal");
    return Polynomial::constant(static_cast<int>(vars_.size()), *r);
  }

  Polynomial identifier() {
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    std::string name(text_.substr(start, pos_ - start));
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i] == name) return Polynomial::variable(static_cast<int>(vars_.size()), static_cast<int>(i));
    pos_ = start;
    fail("unknown variable '" + name + "'");
  }

  std::string_view text_;
  std::span<const std::string> vars_;
  std::size_t pos_ = 0;
};

void require_ring(std::span<const Polynomial> ps, int nvars) {
  for (const Polynomial& p : ps)
    if (p.nvars() != nvars) throw std::domain_error("polynomials over different variables");
}

Polynomial det_cofactor(const std::vector<std::vector<Polynomial>>& m, std::vector<int> cols, int row, int nvars) {
  if (cols.size() == 1) return m[row][cols[0]];
  Polynomial out(nvars);
  for (std::size_t k = 0; k < cols.size(); ++k) {
    if (m[row][cols[k]].is_zero()) continue;
    std::vector<int> rest;
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (j != k) rest.push_back(cols[j]);
    Polynomial minor = det_cofactor(m, std::move(rest), row + 1, nvars);
    Polynomial contrib = m[row][cols[k]] * minor;
    out = k % 2 == 0 ? out + contrib : out - contrib;
  }
  return out;
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, std::span<const std::string> variables) {
  return Parser(text, variables).run();
}

Polynomial jacobian_bracket(std::span<const Polynomial> fs) {
  if (fs.empty()) throw std::domain_error("jacobian bracket needs at least one polynomial");
  const int n = static_cast<int>(fs.size());
  const int nvars = fs[0].nvars();
  if (nvars != n) throw std::domain_error("jacobian bracket needs exactly n variables for n arguments");
  require_ring(fs, nvars);
  std::vector<std::vector<Polynomial>> jac(n, std::vector<Polynomial>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) jac[i][j] = fs[i].derivative(j);
  std::vector<int> cols(n);
  std::iota(cols.begin(), cols.end(), 0);
  return det_cofactor(jac, std::move(cols), 0, nvars);
}

Polynomial np_fi_residual(std::span<const Polynomial> fs, std::span<const Polynomial> gs) {
  const int n = static_cast<int>(gs.size());
  if (static_cast<int>(fs.size()) != n - 1) throw std::domain_error("FI takes n-1 outer and n inner arguments");
  const int nvars = gs[0].nvars();
  require_ring(fs, nvars);
  require_ring(gs, nvars);

  std::vector<Polynomial> args(fs.begin(), fs.end());
  args.push_back(jacobian_bracket(gs));
  Polynomial lhs = jacobian_bracket(args);

  Polynomial rhs(nvars);
  for (int a = 0; a < n; ++a) {
    args.assign(fs.begin(), fs.end());
    args.push_back(gs[a]);
    Polynomial inner = jacobian_bracket(args);
    std::vector<Polynomial> outer(gs.begin(), gs.end());
    outer[a] = std::move(inner);
    rhs = rhs + jacobian_bracket(outer);
  }
  return lhs - rhs;
}

Polynomial leibniz_rule_residual(std::span<const Polynomial> fs, const Polynomial& g, const Polynomial& h) {
  const int nvars = g.nvars();
  if (static_cast<int>(fs.size()) != nvars - 1)
    throw std::domain_error("Leibniz rule takes n-1 outer arguments");
  require_ring(fs, nvars);
  if (h.nvars() != nvars) throw std::domain_error("polynomials over different variables");

  std::vector<Polynomial> args(fs.begin(), fs.end());
  args.push_back(g * h);
  Polynomial lhs = jacobian_bracket(args);
  args.back() = h;
  Polynomial with_h = jacobian_bracket(args);
  args.back() = g;
  Polynomial with_g = jacobian_bracket(args);
  return lhs - g * with_h - with_g * h;
}

bool bracket_skew_check(std::span<const Polynomial> fs) {
  Polynomial base = jacobian_bracket(fs);
  std::vector<Polynomial> swapped(fs.begin(), fs.end());
  for (std::size_t i = 0; i + 1 < fs.size(); ++i) {
    std::swap(swapped[i], swapped[i + 1]);
    if (!(jacobian_bracket(swapped) + base).is_zero()) return false;
    std::swap(swapped[i], swapped[i + 1]);
  }
  return true;
}

}  // namespace nary
