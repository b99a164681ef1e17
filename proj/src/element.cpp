#include "svset/element.hpp"

#include <algorithm>

namespace svset {

bool operator==(const Tuple& a, const Tuple& b) { return a.items == b.items; }

bool operator<(const Tuple& a, const Tuple& b) {
  return std::lexicographical_compare(a.items.begin(), a.items.end(), b.items.begin(), b.items.end());
}

bool operator==(const Atom& a, const Atom& b) { return a.name == b.name; }
bool operator<(const Atom& a, const Atom& b) { return a.name < b.name; }

bool operator==(const Element& a, const Element& b) { return a.value == b.value; }
bool operator<(const Element& a, const Element& b) { return a.value < b.value; }

std::string to_string(const Element& e) {
  struct Visitor {
    std::string operator()(bool b) const { return b ? "true" : "false"; }
    std::string operator()(std::int64_t n) const { return std::to_string(n); }
    std::string operator()(const Rational& q) const { return to_string(q); }
    std::string operator()(const Atom& a) const { return a.name; }
    std::string operator()(const Tuple& t) const {
      std::string out = "(";
      for (std::size_t i = 0; i < t.items.size(); ++i) {
        if (i) out += ",";
        out += to_string(t.items[i]);
      }
      return out + ")";
    }
  };
  return std::visit(Visitor{}, e.value);
}

}  // namespace svset
