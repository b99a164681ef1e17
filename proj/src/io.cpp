#include "svset/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "svset/encodings.hpp"
#include "svset/error.hpp"

namespace svset::io {

namespace {

[[noreturn]] void parse_error(const std::string& message) { throw Error(ErrorCode::Parse, message); }

const Json& member(const Json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) parse_error(where + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) parse_error(where + ": missing key \"" + key + "\"");
  return *it;
}

std::string string_from_json(const Json& j, const std::string& where) {
  if (!j.is_string()) parse_error(where + ": expected a string");
  return j.get<std::string>();
}

std::vector<std::string> strings_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) parse_error(where + ": expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(string_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<Rational> rationals_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) parse_error(where + ": expected an array of rationals");
  std::vector<Rational> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(rational_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

Json rationals_to_json(const std::vector<Rational>& qs) {
  Json out = Json::array();
  for (const auto& q : qs) out.push_back(to_string(q));
  return out;
}

const Json& pair_json(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) parse_error(where + ": expected a two-element array");
  return j;
}

template <typename T, typename F>
Membership<T> membership_from_json(const Json& j, const std::string& where, F&& convert) {
  if (!j.is_object()) parse_error(where + ": expected an object keyed by element");
  Membership<T> out;
  for (const auto& [key, value] : j.items()) out.emplace(key, convert(value, where + "." + key));
  return out;
}

template <typename T, typename F>
Json membership_to_json(const Membership<T>& m, F&& convert) {
  Json out = Json::object();
  for (const auto& [key, value] : m) out[key] = convert(value);
  return out;
}

Membership<Rational> grades_from_json(const Json& j, const std::string& where) {
  return membership_from_json<Rational>(j, where, rational_from_json);
}

Json grades_to_json(const Membership<Rational>& m) {
  return membership_to_json(m, [](const Rational& q) { return Json(to_string(q)); });
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) parse_error("cannot read \"" + path + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Json load_json(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  const bool inline_doc = first != std::string::npos && (text[first] == '{' || text[first] == '[');
  const std::string source = inline_doc ? "inline JSON" : "\"" + text + "\"";
  const std::string body = inline_doc ? text : read_file(text);
  try {
    return Json::parse(body);
  } catch (const Json::parse_error& err) {
    parse_error(source + ": " + err.what());
  }
}

Rational rational_from_json(const Json& j, const std::string& where) {
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const Error& err) {
      parse_error(where + ": " + err.what());
    }
  }
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_number_float()) parse_error(where + ": rationals must be strings such as \"0.9\" or \"9/10\", not floats");
  parse_error(where + ": expected a rational");
}

std::int64_t integer_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return j.get<std::int64_t>();
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    try {
      std::size_t used = 0;
      const long long v = std::stoll(s, &used);
      if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
  }
  parse_error(where + ": expected an integer");
}

Json rational_report(const Rational& q) {
  Json out;
  out["fraction"] = format_fraction(q);
  auto decimal = format_decimal(q);
  out["decimal"] = decimal ? Json(*decimal) : Json(nullptr);
  return out;
}

// ---------------------------------------------------------------------------
// Scales and elements

Scale scale_from_json(const Json& j) {
  if (j.is_string()) return scale_from_json(Json{{"kind", j}});
  const std::string kind = string_from_json(member(j, "kind", "scale"), "scale.kind");
  if (kind == "bool") return bool_scale();
  if (kind == "chain") return chain_scale(integer_from_json(member(j, "k", "chain scale"), "scale.k"));
  if (kind == "unit-rational" || kind == "unit") return unit_scale();
  if (kind == "ifs-delta" || kind == "ifs") return ifs_scale();
  if (kind == "rough-chain" || kind == "rough") return rough_scale();
  if (kind == "m3-diamond" || kind == "m3") {
    const std::string neg = j.contains("neg") ? string_from_json(j["neg"], "scale.neg") : "swap";
    if (neg == "swap") return m3_scale(M3Negation::Swap);
    if (neg == "fix") return m3_scale(M3Negation::Fix);
    parse_error("scale.neg: expected \"swap\" or \"fix\", got \"" + neg + "\"");
  }
  if (kind == "product") {
    return product_scale(scale_from_json(member(j, "left", "product scale")),
                         scale_from_json(member(j, "right", "product scale")));
  }
  if (kind == "interval") return interval_scale(scale_from_json(member(j, "base", "interval scale")));
  if (kind == "function-grid") return function_scale(rationals_from_json(member(j, "grid", "function-grid scale"), "scale.grid"));
  if (kind == "custom") {
    FiniteLatticeSpec spec;
    spec.elements = strings_from_json(member(j, "elements", "custom scale"), "scale.elements");
    const Json& covers = member(j, "covers", "custom scale");
    if (!covers.is_array()) parse_error("scale.covers: expected an array of pairs");
    for (std::size_t i = 0; i < covers.size(); ++i) {
      const std::string where = "scale.covers[" + std::to_string(i) + "]";
      const Json& c = pair_json(covers[i], where);
      spec.covers.emplace_back(string_from_json(c[0], where), string_from_json(c[1], where));
    }
    const Json& neg = member(j, "neg", "custom scale");
    if (!neg.is_object()) parse_error("scale.neg: expected an object");
    for (const auto& [from, to] : neg.items()) spec.neg[from] = string_from_json(to, "scale.neg." + from);
    spec.bottom = string_from_json(member(j, "bottom", "custom scale"), "scale.bottom");
    spec.top = string_from_json(member(j, "top", "custom scale"), "scale.top");
    return build_finite_scale(spec);
  }
  parse_error("scale.kind: unknown kind \"" + kind + "\"");
}

Json scale_to_json(const Scale& scale) {
  Json out;
  out["kind"] = std::string(to_string(scale.kind()));
  switch (scale.kind()) {
    case ScaleKind::Chain:
      out["k"] = scale.chain_bound();
      break;
    case ScaleKind::M3Diamond:
      out["neg"] = scale.m3_negation() == M3Negation::Swap ? "swap" : "fix";
      break;
    case ScaleKind::Product:
      out["left"] = scale_to_json(scale.components()[0]);
      out["right"] = scale_to_json(scale.components()[1]);
      break;
    case ScaleKind::Interval:
      out["base"] = scale_to_json(scale.components()[0]);
      break;
    case ScaleKind::FunctionGrid:
      out["grid"] = rationals_to_json(scale.grid());
      break;
    case ScaleKind::CustomFinite: {
      const auto& spec = scale.finite_spec();
      out["elements"] = spec.elements;
      Json covers = Json::array();
      for (const auto& [lo, hi] : spec.covers) covers.push_back({lo, hi});
      out["covers"] = covers;
      out["neg"] = spec.neg;
      out["bottom"] = spec.bottom;
      out["top"] = spec.top;
      break;
    }
    default:
      break;
  }
  return out;
}

Element element_from_json(const Json& j, const Scale& scale, const std::string& where) {
  Element e = [&]() -> Element {
    switch (scale.kind()) {
      case ScaleKind::Bool:
        if (j.is_boolean()) return Element::boolean(j.get<bool>());
        if (j.is_number_integer() || j.is_string()) {
          const auto v = integer_from_json(j, where);
          if (v == 0 || v == 1) return Element::boolean(v == 1);
        }
        parse_error(where + ": expected true/false or 0/1");
      case ScaleKind::Chain:
        return Element::integer(integer_from_json(j, where));
      case ScaleKind::UnitRational:
        return Element::rational(rational_from_json(j, where));
      case ScaleKind::IfsDelta: {
        const Json& p = pair_json(j, where);
        return Element::pair(Element::rational(rational_from_json(p[0], where + "[0]")),
                             Element::rational(rational_from_json(p[1], where + "[1]")));
      }
      case ScaleKind::RoughChain: {
        const Json& p = pair_json(j, where);
        return Element::pair(Element::integer(integer_from_json(p[0], where + "[0]")),
                             Element::integer(integer_from_json(p[1], where + "[1]")));
      }
      case ScaleKind::M3Diamond:
      case ScaleKind::CustomFinite:
        if (j.is_number_integer()) return Element::atom(std::to_string(j.get<std::int64_t>()));
        return Element::atom(string_from_json(j, where));
      case ScaleKind::Product: {
        const Json& p = pair_json(j, where);
        auto parts = scale.components();
        return Element::pair(element_from_json(p[0], parts[0], where + "[0]"),
                             element_from_json(p[1], parts[1], where + "[1]"));
      }
      case ScaleKind::Interval: {
        const Json& p = pair_json(j, where);
        const Scale base = scale.components()[0];
        return Element::pair(element_from_json(p[0], base, where + "[0]"), element_from_json(p[1], base, where + "[1]"));
      }
      case ScaleKind::FunctionGrid: {
        std::vector<Element> items;
        for (const auto& q : rationals_from_json(j, where)) items.push_back(Element::rational(q));
        return Element::tuple(std::move(items));
      }
    }
    parse_error(where + ": unsupported scale");
  }();
  if (!scale.contains(e)) {
    throw Error(ErrorCode::ElementNotInCarrier, where + ": " + to_string(e) + " is not in " + scale.signature());
  }
  return e;
}

Json element_to_json(const Element& e, const Scale& scale) {
  switch (scale.kind()) {
    case ScaleKind::Bool:
      return e.as_bool();
    case ScaleKind::Chain:
      return e.as_integer();
    case ScaleKind::UnitRational:
      return to_string(e.as_rational());
    case ScaleKind::IfsDelta:
      return Json::array({to_string(e.items()[0].as_rational()), to_string(e.items()[1].as_rational())});
    case ScaleKind::RoughChain:
      return Json::array({e.items()[0].as_integer(), e.items()[1].as_integer()});
    case ScaleKind::M3Diamond:
    case ScaleKind::CustomFinite:
      return e.atom_name();
    case ScaleKind::Product: {
      auto parts = scale.components();
      return Json::array({element_to_json(e.items()[0], parts[0]), element_to_json(e.items()[1], parts[1])});
    }
    case ScaleKind::Interval: {
      const Scale base = scale.components()[0];
      return Json::array({element_to_json(e.items()[0], base), element_to_json(e.items()[1], base)});
    }
    case ScaleKind::FunctionGrid: {
      Json out = Json::array();
      for (const auto& item : e.items()) out.push_back(to_string(item.as_rational()));
      return out;
    }
  }
  return to_string(e);
}

// ---------------------------------------------------------------------------
// Label sets and SV-sets

Universe universe_from_json(const Json& j, const std::string& name) {
  return Universe(name, strings_from_json(j, "universe"));
}

ParamSet params_from_json(const Json& j) { return ParamSet("E", strings_from_json(j, "params")); }

Subset subset_from_json(const Json& j, const std::string& where) {
  auto labels = strings_from_json(j, where);
  return Subset(labels.begin(), labels.end());
}

Json subset_to_json(const Subset& s) { return Json(std::vector<std::string>(s.begin(), s.end())); }

LabelMap labelmap_from_json(const Json& j, const std::string& where) {
  if (!j.is_object()) parse_error(where + ": expected an object mapping labels to labels");
  LabelMap out;
  for (const auto& [from, to] : j.items()) out[from] = string_from_json(to, where + "." + from);
  return out;
}

namespace {

SVSet values_from_json(const Json& values, const Universe& universe, const ParamSet& params, const Scale& scale,
                       bool allow_bare_keys) {
  if (!values.is_object()) parse_error("values: expected an object keyed by \"element|param\"");
  std::vector<std::optional<Element>> table(universe.size() * params.size());
  for (const auto& [key, value] : values.items()) {
    const auto bar = key.find('|');
    std::string x = key;
    std::string e = params[0];
    if (bar != std::string::npos) {
      x = key.substr(0, bar);
      e = key.substr(bar + 1);
    } else if (!allow_bare_keys) {
      parse_error("values." + key + ": key must have the form \"element|param\"");
    }
    auto xi = universe.find(x);
    if (!xi) throw Error(ErrorCode::UnknownElement, "values." + key + ": \"" + x + "\" is not in the universe");
    auto ei = params.find(e);
    if (!ei) throw Error(ErrorCode::UnknownParam, "values." + key + ": \"" + e + "\" is not a parameter");
    auto& slot = table[*xi * params.size() + *ei];
    if (slot) parse_error("values." + key + ": duplicate entry");
    slot = element_from_json(value, scale, "values." + key);
  }
  std::vector<Element> dense;
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (!table[i]) {
      throw Error(ErrorCode::NonTotalMap, "values: missing \"" + universe[i / params.size()] + "|" +
                                              params[i % params.size()] + "\"");
    }
    dense.push_back(std::move(*table[i]));
  }
  return SVSet(universe, params, scale, std::move(dense));
}

}  // namespace

SVSet svset_from_json(const Json& j) {
  const Universe universe = universe_from_json(member(j, "universe", "sv-set"));
  const bool bare = !j.contains("params");
  const ParamSet params = bare ? ParamSet::unparameterized() : params_from_json(j["params"]);
  const Scale scale = scale_from_json(member(j, "scale", "sv-set"));
  return values_from_json(member(j, "values", "sv-set"), universe, params, scale, bare || params.size() == 1);
}

Json svset_to_json(const SVSet& a) {
  Json values = Json::object();
  for (std::size_t x = 0; x < a.universe().size(); ++x) {
    for (std::size_t e = 0; e < a.params().size(); ++e) {
      values[a.universe()[x] + "|" + a.params()[e]] = element_to_json(a.at(x, e), a.scale());
    }
  }
  Json out;
  out["universe"] = a.universe().labels();
  out["params"] = a.params().labels();
  out["scale"] = scale_to_json(a.scale());
  out["values"] = values;
  return out;
}

SVSet value_table_from_json(const Json& j, const Universe& universe, const Scale& scale) {
  return values_from_json(j, universe, ParamSet::unparameterized(), scale, true);
}

Json value_table_to_json(const SVSet& a) {
  Json out = Json::object();
  for (std::size_t x = 0; x < a.universe().size(); ++x) out[a.universe()[x]] = element_to_json(a.at(x), a.scale());
  return out;
}

// ---------------------------------------------------------------------------
// Topologies, groups, homomorphisms

SVTopology topology_from_json(const Json& j) {
  const Scale scale = scale_from_json(member(j, "scale", "topology"));
  const Universe universe = universe_from_json(member(j, "universe", "topology"));
  const Json& opens = member(j, "opens", "topology");
  if (!opens.is_array()) parse_error("topology.opens: expected an array of value tables");
  SVTopology t{scale, universe, {}};
  for (std::size_t i = 0; i < opens.size(); ++i) {
    try {
      t.opens.push_back(value_table_from_json(opens[i], universe, scale));
    } catch (const Error& err) {
      throw Error(err.code(), "topology.opens[" + std::to_string(i) + "]: " + err.what());
    }
  }
  return t;
}

Json topology_to_json(const SVTopology& t) {
  Json opens = Json::array();
  for (const auto& a : t.opens) opens.push_back(value_table_to_json(a));
  Json out;
  out["scale"] = scale_to_json(t.scale);
  out["universe"] = t.universe.labels();
  out["opens"] = opens;
  return out;
}

Json crisp_topology_to_json(const CrispTopology& t) {
  Json opens = Json::array();
  for (const auto& s : t.opens) opens.push_back(subset_to_json(s));
  Json out;
  out["universe"] = t.universe.labels();
  out["opens"] = opens;
  return out;
}

FiniteGroup group_from_json(const Json& j) {
  if (j.is_string()) return builtin_group(j.get<std::string>());
  if (j.contains("builtin")) return builtin_group(string_from_json(j["builtin"], "group.builtin"));
  auto elements = strings_from_json(member(j, "elements", "group"), "group.elements");
  const Json& table_json = member(j, "table", "group");
  if (!table_json.is_array()) parse_error("group.table: expected an array of rows");
  std::vector<std::vector<std::string>> table;
  for (std::size_t i = 0; i < table_json.size(); ++i) {
    table.push_back(strings_from_json(table_json[i], "group.table[" + std::to_string(i) + "]"));
  }
  return FiniteGroup(std::move(elements), table, string_from_json(member(j, "identity", "group"), "group.identity"));
}

Json group_to_json(const FiniteGroup& g) {
  Json table = Json::array();
  for (std::size_t a = 0; a < g.order(); ++a) {
    Json row = Json::array();
    for (std::size_t b = 0; b < g.order(); ++b) row.push_back(g.label(g.multiply(a, b)));
    table.push_back(row);
  }
  Json out;
  out["elements"] = g.labels();
  out["table"] = table;
  out["identity"] = g.label(g.identity());
  return out;
}

GroupHom group_hom_from_json(const Json& j) {
  return GroupHom(group_from_json(member(j, "source", "homomorphism")),
                  group_from_json(member(j, "target", "homomorphism")),
                  labelmap_from_json(member(j, "map", "homomorphism"), "homomorphism.map"));
}

ScaleHom scale_hom_from_json(const Json& j) {
  const Scale source = scale_from_json(member(j, "source", "scale homomorphism"));
  const Scale target = scale_from_json(member(j, "target", "scale homomorphism"));
  const Json& map = member(j, "map", "scale homomorphism");
  if (!map.is_array()) parse_error("scale homomorphism.map: expected an array of [from, to] pairs");
  std::vector<std::pair<Element, Element>> table;
  for (std::size_t i = 0; i < map.size(); ++i) {
    const std::string where = "map[" + std::to_string(i) + "]";
    const Json& p = pair_json(map[i], where);
    table.emplace_back(element_from_json(p[0], source, where + "[0]"), element_from_json(p[1], target, where + "[1]"));
  }
  const std::string name = j.contains("name") ? string_from_json(j["name"], "name") : "table";
  return ScaleHom::from_table(source, target, std::move(table), name);
}

// ---------------------------------------------------------------------------
// Encoding models

namespace {

std::vector<std::vector<Element>> lviss_side(const Json& j, const std::string& side, const Universe& universe,
                                             const ParamSet& params, const Scale& base) {
  if (!j.contains(side)) {
    throw Error(ErrorCode::PresentationMissing,
                "lviss." + side + ": the membership view needs lower and upper functions for every parameter");
  }
  const Json& doc = j[side];
  std::vector<std::vector<Element>> out;
  for (const auto& e : params.labels()) {
    if (!doc.contains(e)) {
      throw Error(ErrorCode::PresentationMissing, "lviss." + side + ": no function given for parameter \"" + e + "\"");
    }
    out.push_back(value_table_from_json(doc[e], universe, base).values());
  }
  return out;
}

Json lviss_side_to_json(const std::vector<std::vector<Element>>& side, const LVISS& f) {
  Json out = Json::object();
  for (std::size_t e = 0; e < f.params.size(); ++e) {
    Json fn = Json::object();
    for (std::size_t x = 0; x < f.universe.size(); ++x) fn[f.universe[x]] = element_to_json(side[e][x], f.base);
    out[f.params[e]] = fn;
  }
  return out;
}

}  // namespace

SVSet encode_model(const std::string& kind, const Json& model) {
  auto universe = [&] { return universe_from_json(member(model, "universe", kind + " model")); };
  if (kind == "crisp") return crisp_to_sv(universe(), subset_from_json(member(model, "subset", "crisp model"), "subset"));
  if (kind == "soft") {
    SoftSet soft{universe(), params_from_json(member(model, "params", "soft model")), {}};
    const Json& assignment = member(model, "assignment", "soft model");
    if (!assignment.is_object()) parse_error("assignment: expected an object keyed by parameter");
    for (const auto& [e, subset] : assignment.items()) soft.assignment[e] = subset_from_json(subset, "assignment." + e);
    return soft_to_sv(soft);
  }
  if (kind == "multiset") {
    return multiset_to_sv(universe(),
                          membership_from_json<std::int64_t>(member(model, "multiplicity", "multiset model"),
                                                             "multiplicity", integer_from_json),
                          integer_from_json(member(model, "k", "multiset model"), "k"));
  }
  if (kind == "fuzzy") return fuzzy_to_sv(universe(), grades_from_json(member(model, "grade", "fuzzy model"), "grade"));
  if (kind == "lfuzzy") {
    const Scale lattice = scale_from_json(member(model, "scale", "lfuzzy model"));
    return lfuzzy_to_sv(universe(),
                        membership_from_json<Element>(member(model, "grade", "lfuzzy model"), "grade",
                                                      [&](const Json& v, const std::string& where) {
                                                        return element_from_json(v, lattice, where);
                                                      }),
                        lattice);
  }
  if (kind == "ifs") {
    return ifs_to_sv(universe(), IFSPair{grades_from_json(member(model, "mu", "ifs model"), "mu"),
                                         grades_from_json(member(model, "nu", "ifs model"), "nu")});
  }
  if (kind == "rough") {
    return rough_to_sv(universe(), RoughPair{subset_from_json(member(model, "lower", "rough model"), "lower"),
                                             subset_from_json(member(model, "upper", "rough model"), "upper")});
  }
  if (kind == "type2") {
    return type2_to_sv(universe(), rationals_from_json(member(model, "grid", "type2 model"), "grid"),
                       membership_from_json<std::vector<Rational>>(member(model, "membership", "type2 model"),
                                                                   "membership", rationals_from_json));
  }
  if (kind == "it2") {
    return it2_to_sv(universe(), IT2Footprint{grades_from_json(member(model, "lower", "it2 model"), "lower"),
                                              grades_from_json(member(model, "upper", "it2 model"), "upper")});
  }
  if (kind == "lviss") {
    LVISS f{universe(), params_from_json(member(model, "params", "lviss model")), {},
            scale_from_json(member(model, "base", "lviss model")), {}, {}};
    f.domain = model.contains("domain") ? strings_from_json(model["domain"], "domain") : f.params.labels();
    f.lower = lviss_side(model, "lower", f.universe, f.params, f.base);
    f.upper = lviss_side(model, "upper", f.universe, f.params, f.base);
    return lviss_membership_to_sv(f);
  }
  if (kind == "lviss-formal") {
    const Scale lattice = scale_from_json(member(model, "scale", "lviss-formal model"));
    const auto domain = strings_from_json(member(model, "domain", "lviss-formal model"), "domain");
    auto intervals = membership_from_json<std::pair<Element, Element>>(
        member(model, "intervals", "lviss-formal model"), "intervals", [&](const Json& v, const std::string& where) {
          const Json& p = pair_json(v, where);
          return std::make_pair(element_from_json(p[0], lattice, where + "[0]"),
                                element_from_json(p[1], lattice, where + "[1]"));
        });
    return lviss_formal_to_sv(domain, lattice, intervals);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown encoding kind \"" + kind + "\"");
}

Json decode_model(const std::string& kind, const SVSet& a) {
  Json out;
  out["universe"] = a.universe().labels();
  if (kind == "crisp") {
    out["subset"] = subset_to_json(sv_to_crisp(a));
  } else if (kind == "soft") {
    const SoftSet soft = sv_to_soft(a);
    out["params"] = soft.params.labels();
    Json assignment = Json::object();
    for (const auto& [e, s] : soft.assignment) assignment[e] = subset_to_json(s);
    out["assignment"] = assignment;
  } else if (kind == "multiset") {
    out["k"] = a.scale().chain_bound();
    out["multiplicity"] = membership_to_json(sv_to_multiset(a), [](std::int64_t n) { return Json(n); });
  } else if (kind == "fuzzy") {
    out["grade"] = grades_to_json(sv_to_fuzzy(a));
  } else if (kind == "lfuzzy") {
    out["scale"] = scale_to_json(a.scale());
    out["grade"] = membership_to_json(sv_to_lfuzzy(a), [&](const Element& e) { return element_to_json(e, a.scale()); });
  } else if (kind == "ifs") {
    const IFSPair p = sv_to_ifs(a);
    out["mu"] = grades_to_json(p.mu);
    out["nu"] = grades_to_json(p.nu);
  } else if (kind == "rough") {
    const RoughPair p = sv_to_rough(a);
    out["lower"] = subset_to_json(p.lower);
    out["upper"] = subset_to_json(p.upper);
  } else if (kind == "type2") {
    out["grid"] = rationals_to_json(a.scale().grid());
    out["membership"] = membership_to_json(sv_to_type2(a), rationals_to_json);
  } else if (kind == "it2") {
    const IT2Footprint f = sv_to_it2(a);
    out["lower"] = grades_to_json(f.lower);
    out["upper"] = grades_to_json(f.upper);
  } else if (kind == "lviss") {
    const LVISS f = sv_to_simple_lviss(a);
    out["params"] = f.params.labels();
    out["domain"] = f.domain;
    out["base"] = scale_to_json(f.base);
    out["lower"] = lviss_side_to_json(f.lower, f);
    out["upper"] = lviss_side_to_json(f.upper, f);
  } else {
    throw Error(ErrorCode::InvalidArgument, "cannot decode to encoding kind \"" + kind + "\"");
  }
  return out;
}

// ---------------------------------------------------------------------------
// Decision tables

EvidenceGrade evidence_grade_from_text(const std::string& cell, std::int64_t k, const std::string& where) {
  const auto semi = cell.find(';');
  if (semi == std::string::npos) parse_error(where + ": expected \"mu;m\", got \"" + cell + "\"");
  EvidenceGrade g;
  try {
    g.mu = parse_rational(cell.substr(0, semi));
  } catch (const Error& err) {
    parse_error(where + ": " + err.what());
  }
  std::string count = cell.substr(semi + 1);
  count.erase(0, count.find_first_not_of(" \t"));
  count.erase(count.find_last_not_of(" \t") + 1);
  g.m = integer_from_json(Json(count), where);
  g.k = k;
  g.validate();
  return g;
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) {
    const auto b = cell.find_first_not_of(" \t\"");
    const auto e = cell.find_last_not_of(" \t\r\"");
    cells.push_back(b == std::string::npos ? "" : cell.substr(b, e - b + 1));
  }
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

}  // namespace

DecisionTable decision_table_from_csv(const std::string& text, std::int64_t k) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::vector<std::string>> rows;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[line.find_first_not_of(" \t")] == '#') continue;
    rows.push_back(split_csv_line(line));
  }
  if (rows.empty()) parse_error("decision table: empty CSV");
  const std::vector<std::string> header = rows.front();
  if (header.size() < 2) throw Error(ErrorCode::EmptyCriteria, "decision table: header row names no criteria");
  std::vector<std::string> criteria(header.begin() + 1, header.end());
  std::vector<std::string> alternatives;
  std::vector<EvidenceGrade> grades;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.size() != header.size()) {
      parse_error("decision table row " + std::to_string(r + 1) + ": expected " + std::to_string(header.size()) +
                  " cells, got " + std::to_string(row.size()));
    }
    alternatives.push_back(row[0]);
    for (std::size_t c = 1; c < row.size(); ++c) {
      grades.push_back(evidence_grade_from_text(row[c], k, row[0] + "/" + header[c]));
    }
  }
  if (alternatives.empty()) parse_error("decision table: no alternatives");
  return DecisionTable(Universe(std::move(alternatives)), ParamSet(std::move(criteria)), k, grades);
}

DecisionTable decision_table_from_json(const Json& j) {
  const std::int64_t k = integer_from_json(member(j, "k", "decision table"), "k");
  const auto alternatives = strings_from_json(member(j, "alternatives", "decision table"), "alternatives");
  const auto criteria = strings_from_json(member(j, "criteria", "decision table"), "criteria");
  if (criteria.empty()) throw Error(ErrorCode::EmptyCriteria, "decision table: no criteria");
  const Json& grades_json = member(j, "grades", "decision table");
  std::vector<EvidenceGrade> grades;
  for (const auto& a : alternatives) {
    const Json& row = member(grades_json, a, "grades");
    for (const auto& c : criteria) {
      const std::string where = "grades." + a + "." + c;
      const Json& cell = member(row, c, "grades." + a);
      if (cell.is_string()) {
        grades.push_back(evidence_grade_from_text(cell.get<std::string>(), k, where));
      } else {
        const Json& p = pair_json(cell, where);
        EvidenceGrade g{rational_from_json(p[0], where + "[0]"), integer_from_json(p[1], where + "[1]"), k};
        g.validate();
        grades.push_back(g);
      }
    }
  }
  return DecisionTable(Universe(alternatives), ParamSet(criteria), k, grades);
}

DecisionTable load_decision_table(const std::string& path, std::optional<std::int64_t> k) {
  const bool is_json = path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
  if (is_json) {
    const DecisionTable t = decision_table_from_json(load_json(path));
    if (k && *k != t.k()) {
      throw Error(ErrorCode::BoundMismatch,
                  "--k " + std::to_string(*k) + " disagrees with the table's k = " + std::to_string(t.k()));
    }
    return t;
  }
  if (!k) parse_error("\"" + path + "\": CSV decision tables need --k");
  return decision_table_from_csv(read_file(path), *k);
}

}  // namespace svset::io
