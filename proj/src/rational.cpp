#include "nary/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace nary {

std::string to_string(const Rational& r) {
  Integer num = numerator(r);
  Integer den = denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::optional<Rational> try_rational_from_string(std::string_view text) {
  auto is_digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };

  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) return std::nullopt;

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  std::string_view num_part = s;
  std::string_view den_part;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    num_part = s.substr(0, slash);
    den_part = s.substr(slash + 1);
    if (!is_digits(den_part)) return std::nullopt;
  }
  if (!is_digits(num_part)) return std::nullopt;

  Integer num{std::string(num_part)};
  Integer den = den_part.empty() ? Integer(1) : Integer{std::string(den_part)};
  if (den == 0) return std::nullopt;
  if (negative) num = -num;
  return Rational(num, den);
}

Rational rational_from_string(std::string_view text) {
  auto r = try_rational_from_string(text);
  if (!r) throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  return *r;
}

}  // namespace nary
