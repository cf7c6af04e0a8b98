#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace nary {

using Integer = boost::multiprecision::cpp_int;

// Exact rational scalar: arbitrary-precision, always in lowest terms with a
// positive denominator. No floating point anywhere in the engine.
using Rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

inline Rational rational_abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

inline Integer numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

// Renders "p" when the denominator is 1, "p/q" otherwise.
std::string to_string(const Rational& r);

// Parses "p" or "p/q" with optional sign; q must be a positive integer.
// Throws std::invalid_argument on malformed input or zero denominator.
Rational rational_from_string(std::string_view text);

std::optional<Rational> try_rational_from_string(std::string_view text);

}  // namespace nary
