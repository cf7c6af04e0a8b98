#include "nary/catalog.hpp"

#include <sstream>
#include <stdexcept>

namespace nary {

Signature Signature::lorentzian(int minus, int plus) {
  Signature s;
  s.signs.assign(minus, -1);
  s.signs.insert(s.signs.end(), plus, 1);
  return s;
}

NAryAlgebra simple_fa(int arity, const Signature& sig) {
  if (arity < 2) throw std::domain_error("simple_fa needs arity >= 2");
  const int dim = arity + 1;
  if (static_cast<int>(sig.signs.size()) != dim) throw std::domain_error("signature length must be n+1");
  for (int s : sig.signs)
    if (s != 1 && s != -1) throw std::domain_error("signature entries must be +1 or -1");

  std::string name = "A" + std::to_string(dim);
  int minus = 0;
  for (int s : sig.signs) minus += s < 0;
  if (minus > 0) name = "A_" + std::to_string(minus) + "_" + std::to_string(dim - minus);

  NAryAlgebra a(arity, dim, Symmetry::FullSkew, name);
  for (int missing = 1; missing <= dim; ++missing) {
    std::vector<int> args;
    for (int v = 1; v <= dim; ++v)
      if (v != missing) args.push_back(v);
    int sign = missing % 2 == 1 ? 1 : -1;  // (-1)^{a+1}
    a.set_constant(args, missing, Rational(sign * sig.signs[missing - 1]));
  }
  Matrix g(dim, dim);
  for (int i = 0; i < dim; ++i) g.at(i, i) = sig.signs[i];
  a.set_metric(std::move(g));

  if (!fi_residual(a).ok()) throw std::logic_error("simple_fa construction violated the Filippov identity");
  return a;
}

NAryAlgebra abelian(int arity, int dim) {
  return NAryAlgebra(arity, dim, Symmetry::FullSkew,
                     "abelian:" + std::to_string(arity) + ":" + std::to_string(dim));
}

NAryAlgebra direct_sum(const NAryAlgebra& a, const NAryAlgebra& b) {
  if (a.arity() != b.arity()) throw std::domain_error("direct sum needs equal arities");
  if (a.symmetry() != b.symmetry()) throw std::domain_error("direct sum needs equal symmetry classes");
  NAryAlgebra out(a.arity(), a.dim() + b.dim(), a.symmetry(), "sum:" + a.name() + ":" + b.name());
  for (const auto& [key, v] : a.constants()) out.set_constant(key.args, key.target, v);
  for (const auto& [key, v] : b.constants()) {
    std::vector<int> args = key.args;
    for (int& x : args) x += a.dim();
    out.set_constant(std::move(args), key.target + a.dim(), v);
  }
  if (a.metric() && b.metric()) {
    Matrix g(out.dim(), out.dim());
    for (int i = 0; i < a.dim(); ++i)
      for (int j = 0; j < a.dim(); ++j) g.at(i, j) = a.metric()->at(i, j);
    for (int i = 0; i < b.dim(); ++i)
      for (int j = 0; j < b.dim(); ++j) g.at(a.dim() + i, a.dim() + j) = b.metric()->at(i, j);
    out.set_metric(std::move(g));
  }
  return out;
}

namespace {

std::optional<NAryAlgebra> parse_tokens(const std::vector<std::string>& tokens, std::size_t& pos);

std::optional<int> parse_int(const std::string& s) {
  if (s.empty()) return std::nullopt;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
  try {
    return std::stoi(s);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

std::optional<NAryAlgebra> parse_tokens(const std::vector<std::string>& tokens, std::size_t& pos) {
  if (pos >= tokens.size()) return std::nullopt;
  const std::string& head = tokens[pos];

  if (head == "abelian") {
    if (pos + 2 >= tokens.size()) return std::nullopt;
    auto n = parse_int(tokens[pos + 1]);
    auto dim = parse_int(tokens[pos + 2]);
    pos += 3;
    if (!n || !dim || *n < 2 || *dim < 1) return std::nullopt;
    return abelian(*n, *dim);
  }
  if (head == "sum") {
    ++pos;
    auto lhs = parse_tokens(tokens, pos);
    if (!lhs) return std::nullopt;
    auto rhs = parse_tokens(tokens, pos);
    if (!rhs) return std::nullopt;
    if (lhs->arity() != rhs->arity() || lhs->symmetry() != rhs->symmetry()) return std::nullopt;
    return direct_sum(*lhs, *rhs);
  }

  ++pos;
  if (head == "so3") {
    NAryAlgebra a = simple_fa(2, Signature::euclidean(3));
    a.set_name("so3");
    return a;
  }
  if (head == "so12") {
    NAryAlgebra a = simple_fa(2, Signature::lorentzian(1, 2));
    a.set_name("so12");
    return a;
  }
  // "A<d>" (Euclidean, dim d) or "A_<s>_<t>" (Lorentzian, s minus signs)
  if (head.size() >= 2 && head[0] == 'A') {
    std::string rest = head.substr(1);
    if (rest[0] == '_') {
      auto us = rest.find('_', 1);
      if (us == std::string::npos) return std::nullopt;
      auto s = parse_int(rest.substr(1, us - 1));
      auto t = parse_int(rest.substr(us + 1));
      if (!s || !t || *s + *t < 3) return std::nullopt;
      return simple_fa(*s + *t - 1, Signature::lorentzian(*s, *t));
    }
    auto d = parse_int(rest);
    if (!d || *d < 3) return std::nullopt;
    return simple_fa(*d - 1, Signature::euclidean(*d));
  }
  return std::nullopt;
}

}  // namespace

std::optional<NAryAlgebra> catalog_by_name(const std::string& name) {
  std::vector<std::string> tokens;
  std::stringstream ss(name);
  std::string item;
  while (std::getline(ss, item, ':')) tokens.push_back(item);
  if (tokens.empty()) return std::nullopt;
  std::size_t pos = 0;
  auto out = parse_tokens(tokens, pos);
  if (!out || pos != tokens.size()) return std::nullopt;
  return out;
}

}  // namespace nary
