#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <variant>
#include <vector>

#include "svset/rational.hpp"

namespace svset {

struct Element;

/// Ordered composite value: product pairs, IFS pairs, rough-chain pairs,
/// interval endpoints, and function-grid tuples.
struct Tuple {
  std::vector<Element> items;
};

/// Named element of a finite lattice presented by covers (M3, custom).
struct Atom {
  std::string name;
};

/// A value of some scale. The owning Scale decides which shapes it accepts.
struct Element {
  using Value = std::variant<bool, std::int64_t, Rational, Tuple, Atom>;
  Value value;

  static Element boolean(bool b) { return Element{Value{b}}; }
  static Element integer(std::int64_t n) { return Element{Value{n}}; }
  static Element rational(Rational q) { return Element{Value{std::move(q)}}; }
  static Element rational(std::string_view text) { return rational(parse_rational(text)); }
  static Element atom(std::string name) { return Element{Value{Atom{std::move(name)}}}; }
  static Element tuple(std::vector<Element> items) { return Element{Value{Tuple{std::move(items)}}}; }
  static Element pair(Element a, Element b) { return tuple({std::move(a), std::move(b)}); }

  bool is_bool() const { return std::holds_alternative<bool>(value); }
  bool is_integer() const { return std::holds_alternative<std::int64_t>(value); }
  bool is_rational() const { return std::holds_alternative<Rational>(value); }
  bool is_tuple() const { return std::holds_alternative<Tuple>(value); }
  bool is_atom() const { return std::holds_alternative<Atom>(value); }

  // Unchecked accessors; callers test the shape first (Scale::contains does).
  bool as_bool() const { return std::get<bool>(value); }
  std::int64_t as_integer() const { return std::get<std::int64_t>(value); }
  const Rational& as_rational() const { return std::get<Rational>(value); }
  const std::vector<Element>& items() const { return std::get<Tuple>(value).items; }
  const std::string& atom_name() const { return std::get<Atom>(value).name; }
};

bool operator==(const Tuple& a, const Tuple& b);
bool operator<(const Tuple& a, const Tuple& b);
bool operator==(const Atom& a, const Atom& b);
bool operator<(const Atom& a, const Atom& b);
bool operator==(const Element& a, const Element& b);
inline bool operator!=(const Element& a, const Element& b) { return !(a == b); }
/// Arbitrary but total structural order, for use as map keys.
bool operator<(const Element& a, const Element& b);

/// Human-readable rendering: "7", "0.65", "(0.6,0.3)", "p", "true".
std::string to_string(const Element& e);

}  // namespace svset
