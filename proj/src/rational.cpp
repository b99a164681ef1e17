#include "svset/rational.hpp"

#include <cctype>

#include "svset/error.hpp"

namespace svset {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view digits) {
  Integer value = 0;
  for (char c : digits) value = value * 10 + (c - '0');
  return value;
}

[[noreturn]] void bad(std::string_view text) {
  throw Error(ErrorCode::Parse, "not an exact rational literal: \"" + std::string(text) + "\"");
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) bad(text);

  Rational value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad(text);
    Integer d = parse_integer(den);
    if (d == 0) throw Error(ErrorCode::Parse, "zero denominator in \"" + std::string(text) + "\"");
    value = Rational(parse_integer(num), d);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto whole = s.substr(0, dot);
    auto frac = s.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || !all_digits(frac)) bad(text);
    Integer scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Integer w = whole.empty() ? Integer(0) : parse_integer(whole);
    value = Rational(w * scale + parse_integer(frac), scale);
  } else {
    if (!all_digits(s)) bad(text);
    value = Rational(parse_integer(s));
  }
  return negative ? Rational(-value) : value;
}

std::string format_fraction(const Rational& q) {
  Integer num = boost::multiprecision::numerator(q);
  Integer den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::optional<std::string> format_decimal(const Rational& q) {
  Integer num = boost::multiprecision::numerator(q);
  Integer den = boost::multiprecision::denominator(q);
  int twos = 0;
  int fives = 0;
  Integer rest = den;
  while (rest % 2 == 0) { rest /= 2; ++twos; }
  while (rest % 5 == 0) { rest /= 5; ++fives; }
  if (rest != 1) return std::nullopt;

  const int digits = std::max(twos, fives);
  Integer scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  bool negative = num < 0;
  Integer scaled = (negative ? Integer(-num) : num) * (scale / den);
  std::string whole = Integer(scaled / scale).str();
  std::string out = negative ? "-" + whole : whole;
  if (digits == 0) return out;
  std::string frac = Integer(scaled % scale).str();
  frac.insert(0, static_cast<std::size_t>(digits) - frac.size(), '0');
  return out + "." + frac;
}

std::string to_string(const Rational& q) {
  if (auto d = format_decimal(q)) return *d;
  return format_fraction(q);
}

}  // namespace svset
