#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace abc {

using Rational = boost::multiprecision::cpp_rational;

inline double to_double(double x) { return x; }
inline double to_double(const Rational& x) { return x.convert_to<double>(); }

/// Parses "p/q", an integer, or a decimal literal ("0.375", "-1.25e-1")
/// into an exact rational. Returns nullopt on malformed input.
std::optional<Rational> parse_rational(std::string_view text);

/// True when the denominator is a power of two, i.e. the value is an exact
/// binary fraction and survives a round trip through double.
bool is_binary_fraction(const Rational& x);

/// "3", "-1/2": numerator/denominator in lowest terms.
std::string to_string(const Rational& x);

}  // namespace abc
