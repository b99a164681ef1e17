#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace svset {

/// Arbitrary-precision exact rational. All grades, scores and break-even
/// points are computed with this type; nothing is ever routed through double.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/// Parses "a/b", "a", "a.ddd" or ".ddd" (optional leading '-') exactly.
/// "0.65" is 13/20. Exponent notation is rejected.
Rational parse_rational(std::string_view text);

/// Lowest-terms "a/b", or "a" when the denominator is 1.
std::string format_fraction(const Rational& q);

/// Finite decimal expansion if one exists ("0.645"), nothing otherwise.
std::optional<std::string> format_decimal(const Rational& q);

/// Canonical text used in serialized documents: decimal when exact, else a/b.
std::string to_string(const Rational& q);

inline bool in_unit_interval(const Rational& q) { return q >= 0 && q <= 1; }

}  // namespace svset
