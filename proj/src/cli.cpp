#include "svset/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "svset/decision.hpp"
#include "svset/encodings.hpp"
#include "svset/error.hpp"
#include "svset/groups.hpp"
#include "svset/io.hpp"
#include "svset/topology.hpp"

namespace svset::cli {

namespace {

using io::Json;

constexpr const char* kSchema = "svset.report/1";
constexpr std::size_t kDefaultSamples = 1000;

struct Options {
  bool json = false;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> samples;
  bool exhaustive = false;

  std::string scale;
  std::string hom;
  std::string op;
  std::string a_value;
  std::string b_value;

  std::vector<std::string> sets;
  std::string param;
  std::string map;
  std::string kind;
  std::string model;
  std::string alpha;
  bool weak = false;

  std::string file;
  std::string target;
  std::size_t cap = kDefaultClosureCap;

  std::string group;

  std::string table;
  std::optional<std::int64_t> k;
  std::string lambda;
  std::string pair;
};

struct Result {
  int status = 0;
  Json report;
  std::string text;
};

Json new_report(const std::string& command) {
  Json r;
  r["schema"] = kSchema;
  r["command"] = command;
  return r;
}

[[noreturn]] void usage(const std::string& message) { throw Error(ErrorCode::InvalidArgument, message); }

std::string show(const Rational& q) {
  const std::string fraction = format_fraction(q);
  auto decimal = format_decimal(q);
  if (!decimal || *decimal == fraction) return fraction;
  return fraction + " (" + *decimal + ")";
}

std::string show(const Element& e) { return to_string(e); }

std::string show(const Subset& s) {
  std::string out = "{";
  for (const auto& x : s) out += (out.size() > 1 ? ", " : "") + x;
  return out + "}";
}

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
  return out;
}

std::string show_table(const SVSet& a) {
  std::ostringstream out;
  for (std::size_t x = 0; x < a.universe().size(); ++x) {
    for (std::size_t e = 0; e < a.params().size(); ++e) {
      out << "  " << a.universe()[x];
      if (!a.is_unparameterized()) out << "|" << a.params()[e];
      out << ": " << show(a.at(x, e)) << "\n";
    }
  }
  return out.str();
}

/// Command-line values are JSON when they parse as such; bare words and
/// decimals are taken as strings so rationals never pass through a double.
Element value_arg(const std::string& text, const Scale& scale, const std::string& flag) {
  if (text.empty()) usage(flag + " is required");
  Json j;
  try {
    j = Json::parse(text);
    if (j.is_number_float()) j = text;
  } catch (const Json::parse_error&) {
    j = text;
  }
  return io::element_from_json(j, scale, flag);
}

Json elements_json(const std::vector<Element>& items, const Scale& scale) {
  Json out = Json::array();
  for (const auto& e : items) {
    try {
      out.push_back(io::element_to_json(e, scale));
    } catch (const std::exception&) {
      out.push_back(to_string(e));
    }
  }
  return out;
}

std::string show_elements(const std::vector<Element>& items) {
  std::vector<std::string> parts;
  for (const auto& e : items) parts.push_back(show(e));
  return join(parts, ", ");
}

Sampling sampling_for(const Options& o, const Scale& scale) {
  if (o.exhaustive) {
    if (!scale.is_finite()) {
      throw Error(ErrorCode::InfiniteCarrierExhaustive,
                  scale.signature() + " has an infinite carrier; use --samples with --seed");
    }
    return Sampling::exhaustive();
  }
  if (scale.is_finite() && !o.samples) return Sampling::exhaustive();
  if (!o.seed) usage("randomized checks on " + scale.signature() + " require --seed");
  return Sampling::random(o.samples.value_or(kDefaultSamples), *o.seed);
}

Result law_result(const std::string& command, const LawReport& laws, const Scale& witness_scale,
                  const Sampling& sampling) {
  Result r{laws.all_passed() ? 0 : 1, new_report(command), ""};
  Json list = Json::array();
  std::ostringstream text;
  text << laws.subject << " ("
       << (sampling.mode == Sampling::Mode::Exhaustive ? std::string("exhaustive")
                                                       : "random, " + std::to_string(sampling.samples) +
                                                             " samples, seed " + std::to_string(sampling.seed))
       << ")\n";
  for (const auto& law : laws.laws) {
    Json l;
    l["law"] = law.law;
    l["passed"] = law.passed;
    l["checked"] = law.checked;
    l["witness"] = elements_json(law.witness, witness_scale);
    list.push_back(l);
    text << "  " << (law.passed ? "pass" : "FAIL") << "  " << std::left << std::setw(20) << law.law << law.checked
         << " cases";
    if (!law.passed) text << "; witness: " << show_elements(law.witness);
    text << "\n";
  }
  text << (laws.all_passed() ? "all laws hold\n" : "law violated\n");
  r.report["subject"] = laws.subject;
  r.report["mode"] = sampling.mode == Sampling::Mode::Exhaustive ? "exhaustive" : "random";
  if (sampling.mode == Sampling::Mode::Random) {
    r.report["samples"] = sampling.samples;
    r.report["seed"] = sampling.seed;
  }
  r.report["laws"] = list;
  r.report["all_passed"] = laws.all_passed();
  r.text = text.str();
  return r;
}

// ---------------------------------------------------------------------------
// scale

Result scale_check(const Options& o) {
  const Scale scale = io::scale_from_json(io::load_json(o.scale));
  const Sampling sampling = sampling_for(o, scale);
  Result r = law_result("scale check", verify_scale_laws(scale, sampling), scale, sampling);
  r.report["scale"] = io::scale_to_json(scale);
  return r;
}

Result scale_hom(const Options& o) {
  const ScaleHom hom = io::scale_hom_from_json(io::load_json(o.hom));
  const Sampling sampling = sampling_for(o, hom.source);
  return law_result("scale hom", verify_scale_hom(hom, sampling), hom.source, sampling);
}

Result scale_op(const Options& o) {
  const Scale scale = io::scale_from_json(io::load_json(o.scale));
  const Element a = value_arg(o.a_value, scale, "--a");
  Result r{0, new_report("scale op"), ""};
  r.report["op"] = o.op;
  if (o.op == "neg") {
    const Element v = scale.neg(a);
    r.report["result"] = io::element_to_json(v, scale);
    r.text = "neg " + show(a) + " = " + show(v) + "\n";
    return r;
  }
  const Element b = value_arg(o.b_value, scale, "--b");
  if (o.op == "join" || o.op == "meet") {
    const Element v = o.op == "join" ? scale.join(a, b) : scale.meet(a, b);
    r.report["result"] = io::element_to_json(v, scale);
    r.text = show(a) + (o.op == "join" ? " v " : " ^ ") + show(b) + " = " + show(v) + "\n";
    return r;
  }
  if (o.op == "leq") {
    const bool v = scale.leq(a, b);
    r.report["result"] = v;
    r.text = show(a) + " <= " + show(b) + ": " + (v ? "true" : "false") + "\n";
    return r;
  }
  usage("--op must be join, meet, neg or leq, got \"" + o.op + "\"");
}

// ---------------------------------------------------------------------------
// set

SVSet load_set(const std::string& text) { return io::svset_from_json(io::load_json(text)); }

Result set_result(const std::string& command, const SVSet& a) {
  Result r{0, new_report(command), ""};
  r.report["set"] = io::svset_to_json(a);
  r.text = "scale " + a.scale().signature() + "\n" + show_table(a);
  return r;
}

const std::string& set_arg(const Options& o, std::size_t i, const std::string& op) {
  if (o.sets.size() <= i) usage(op + " needs " + std::to_string(i + 1) + " --set argument(s)");
  return o.sets[i];
}

Result set_op(const Options& o) {
  const std::string command = "set op";
  const SVSet a = load_set(set_arg(o, 0, o.op));
  if (o.op == "union" || o.op == "intersection") {
    const SVSet b = load_set(set_arg(o, 1, o.op));
    Result r = set_result(command, o.op == "union" ? sv_union(a, b) : sv_intersection(a, b));
    r.report["op"] = o.op;
    return r;
  }
  if (o.op == "complement") {
    Result r = set_result(command, sv_complement(a));
    r.report["op"] = o.op;
    return r;
  }
  if (o.op == "subset") {
    const SVSet b = load_set(set_arg(o, 1, o.op));
    const bool v = sv_subset(a, b);
    Result r{0, new_report(command), std::string("subset: ") + (v ? "true" : "false") + "\n"};
    r.report["op"] = o.op;
    r.report["result"] = v;
    return r;
  }
  if (o.op == "slice") {
    if (o.param.empty()) usage("slice needs --param");
    Result r = set_result(command, slice(a, o.param));
    r.report["op"] = o.op;
    r.report["param"] = o.param;
    return r;
  }
  if (o.op == "transport") {
    if (o.hom.empty()) usage("transport needs --hom");
    Result r = set_result(command, transport(io::scale_hom_from_json(io::load_json(o.hom)), a));
    r.report["op"] = o.op;
    return r;
  }
  if (o.op == "pullback" || o.op == "pushforward") {
    if (o.map.empty()) usage(o.op + " needs --map");
    const Json m = io::load_json(o.map);
    SVSet out = a;
    if (o.op == "pullback") {
      const Json universe = m.contains("universe") ? m["universe"] : Json(nullptr);
      if (universe.is_null()) throw Error(ErrorCode::Parse, "pullback map: missing key \"universe\"");
      const ParamSet params = m.contains("params") ? io::params_from_json(m["params"]) : a.params();
      LabelMap g;
      if (m.contains("g")) {
        g = io::labelmap_from_json(m["g"], "map.g");
      } else {
        for (const auto& e : params.labels()) g[e] = e;
      }
      if (!m.contains("f")) throw Error(ErrorCode::Parse, "pullback map: missing key \"f\"");
      out = pullback(io::labelmap_from_json(m["f"], "map.f"), io::universe_from_json(universe), g, params, a);
    } else {
      if (!m.contains("f") || !m.contains("target")) {
        throw Error(ErrorCode::Parse, "pushforward map: needs keys \"f\" and \"target\"");
      }
      out = pushforward(io::labelmap_from_json(m["f"], "map.f"), io::universe_from_json(m["target"]), a);
    }
    Result r = set_result(command, out);
    r.report["op"] = o.op;
    return r;
  }
  usage("unknown set operation \"" + o.op +
        "\" (union, intersection, complement, subset, slice, transport, pullback, pushforward)");
}

Result set_encode(const Options& o) {
  Result r = set_result("set encode", io::encode_model(o.kind, io::load_json(o.model)));
  r.report["kind"] = o.kind;
  return r;
}

Result set_decode(const Options& o) {
  const Json model = io::decode_model(o.kind, load_set(set_arg(o, 0, "decode")));
  Result r{0, new_report("set decode"), model.dump(2) + "\n"};
  r.report["kind"] = o.kind;
  r.report["model"] = model;
  return r;
}

Result set_cut(const Options& o) {
  const SVSet a = load_set(set_arg(o, 0, "cut"));
  const Element alpha = value_arg(o.alpha, a.scale(), "--alpha");
  const Subset cut = o.weak ? weak_cut(a, alpha) : strong_cut(a, alpha);
  Result r{0, new_report("set cut"), ""};
  r.report["alpha"] = io::element_to_json(alpha, a.scale());
  r.report["mode"] = o.weak ? "weak" : "strong";
  r.report["cut"] = io::subset_to_json(cut);
  r.text = (o.weak ? "weak cut at " : "strong cut above ") + show(alpha) + ": " + show(cut) + "\n";
  return r;
}

// ---------------------------------------------------------------------------
// topo

template <typename Member, typename Render, typename Text>
Json witnesses_json(const ValidationReport<Member>& report, Render&& render, Text&& text, std::string& out) {
  Json list = Json::array();
  for (const auto& w : report.witnesses) {
    Json j;
    j["rule"] = w.rule;
    j["operands"] = w.operands;
    j["missing"] = render(w.missing);
    list.push_back(j);
    std::vector<std::string> ops;
    for (auto i : w.operands) ops.push_back(std::to_string(i));
    out += "  missing " + w.rule + (ops.empty() ? "" : " of opens " + join(ops, ",")) + ": " + text(w.missing) + "\n";
  }
  return list;
}

std::string show_values(const SVSet& a) {
  std::vector<std::string> parts;
  for (std::size_t x = 0; x < a.universe().size(); ++x) parts.push_back(a.universe()[x] + "=" + show(a.at(x)));
  return "{" + join(parts, ", ") + "}";
}

Result topo_validate(const Options& o) {
  const SVTopology t = io::topology_from_json(io::load_json(o.file));
  const SVTopologyReport report = validate_sv_topology(t);
  Result r{report.valid() ? 0 : 1, new_report("topo validate"), ""};
  r.text = std::to_string(t.opens.size()) + " opens over " + t.scale.signature() + ": " +
           (report.valid() ? "valid SV-topology\n" : "not an SV-topology\n");
  r.report["valid"] = report.valid();
  r.report["opens"] = t.opens.size();
  r.report["witnesses"] = witnesses_json(
      report, [](const SVSet& a) { return io::value_table_to_json(a); }, show_values, r.text);
  return r;
}

Result topo_generate(const Options& o) {
  const Json doc = io::load_json(o.file);
  const Scale scale = io::scale_from_json(doc.at("scale"));
  const Universe universe = io::universe_from_json(doc.at("universe"));
  const Json& gens = doc.contains("generators") ? doc["generators"] : doc.at("opens");
  std::vector<SVSet> generators;
  for (const auto& g : gens) generators.push_back(io::value_table_from_json(g, universe, scale));
  const SVTopology t = generate_sv_topology(universe, scale, generators, o.cap);
  Result r{0, new_report("topo generate"), ""};
  r.report["topology"] = io::topology_to_json(t);
  r.report["size"] = t.opens.size();
  r.text = "generated " + std::to_string(t.opens.size()) + " opens from " + std::to_string(generators.size()) +
           " generators\n";
  for (const auto& a : t.opens) r.text += "  " + show_values(a) + "\n";
  return r;
}

Result topo_cut(const Options& o) {
  const SVTopology t = io::topology_from_json(io::load_json(o.file));
  const Element alpha = value_arg(o.alpha, t.scale, "--alpha");
  const CrispTopology c = cut_topology(t, alpha);
  Result r{0, new_report("topo cut"), ""};
  r.report["alpha"] = io::element_to_json(alpha, t.scale);
  r.report["topology"] = io::crisp_topology_to_json(c);
  r.text = "cut topology above " + show(alpha) + " (" + std::to_string(c.opens.size()) + " opens)\n";
  for (const auto& s : c.opens) r.text += "  " + show(s) + "\n";
  return r;
}

Result topo_continuity(const Options& o) {
  if (o.map.empty() || o.file.empty() || o.target.empty()) usage("continuity needs --file, --target and --map");
  const SVTopology source = io::topology_from_json(io::load_json(o.file));
  const SVTopology target = io::topology_from_json(io::load_json(o.target));
  const LabelMap f = io::labelmap_from_json(io::load_json(o.map), "map");
  const ContinuityReport report = check_sv_continuity(f, source, target);
  Result r{report.continuous ? 0 : 1, new_report("topo continuity"), ""};
  r.report["continuous"] = report.continuous;
  r.report["failing_open"] = report.failing_open ? Json(*report.failing_open) : Json(nullptr);
  r.report["failing_pullback"] =
      report.failing_pullback ? io::value_table_to_json(*report.failing_pullback) : Json(nullptr);
  if (report.continuous) {
    r.text = "map is SV-continuous\n";
  } else {
    r.text = "not SV-continuous: pullback of target open " + std::to_string(*report.failing_open) + " is " +
             show_values(*report.failing_pullback) + ", not open\n";
  }
  return r;
}

Result topo_counterexample(const Options& o) {
  CounterexampleReport c;
  if (o.scale.empty()) {
    c = m3_cut_counterexample();
  } else {
    const Scale scale = io::scale_from_json(io::load_json(o.scale));
    c = cut_meet_counterexample(scale, value_arg(o.a_value, scale, "--a"), value_arg(o.b_value, scale, "--b"),
                                value_arg(o.alpha, scale, "--alpha"));
  }
  Result r{0, new_report("topo counterexample"), ""};
  r.report["scale"] = c.scale;
  r.report["a"] = to_string(c.a_value);
  r.report["b"] = to_string(c.b_value);
  r.report["alpha"] = to_string(c.alpha);
  r.report["meet"] = to_string(c.meet_value);
  r.report["cut_intersection"] = io::subset_to_json(c.cut_intersection);
  r.report["meet_cut"] = io::subset_to_json(c.meet_cut);
  r.report["counterexample"] = c.is_counterexample();
  std::ostringstream text;
  text << "scale " << c.scale << ", A(x) = " << show(c.a_value) << ", B(x) = " << show(c.b_value) << ", alpha = "
       << show(c.alpha) << "\n"
       << "  A>alpha n B>alpha = " << show(c.cut_intersection) << "\n"
       << "  (A ^ B)>alpha     = " << show(c.meet_cut) << "  (A ^ B)(x) = " << show(c.meet_value) << "\n"
       << (c.is_counterexample() ? "strong cuts do not preserve this meet\n" : "strong cuts preserve this meet\n");
  r.text = text.str();
  return r;
}

Result topo_slice(const Options& o) {
  std::vector<SVSet> family;
  for (const auto& s : o.sets) family.push_back(load_set(s));
  if (family.empty()) usage("slice needs at least one --set");
  if (o.param.empty()) usage("slice needs --param");
  const SVTopology t = slice_topology(family, o.param);
  Result r{0, new_report("topo slice"), ""};
  r.report["param"] = o.param;
  r.report["topology"] = io::topology_to_json(t);
  r.text = "slice at " + o.param + " is an SV-topology with " + std::to_string(t.opens.size()) + " opens\n";
  for (const auto& a : t.opens) r.text += "  " + show_values(a) + "\n";
  return r;
}

// ---------------------------------------------------------------------------
// group

FiniteGroup load_group(const Options& o) {
  if (o.group.empty()) usage("--group is required");
  const std::string& g = o.group;
  const bool builtin = g == "S3" || g == "D4" || (g.size() > 1 && g[0] == 'Z' && g.find('.') == std::string::npos);
  return builtin ? builtin_group(g) : io::group_from_json(io::load_json(g));
}

Json subgroup_json(const SubgroupReport& s) {
  Json j;
  j["passed"] = s.passed;
  j["failure"] = s.passed ? Json(nullptr) : Json(s.failure);
  j["param"] = s.param ? Json(*s.param) : Json(nullptr);
  j["x"] = s.x ? Json(*s.x) : Json(nullptr);
  j["y"] = s.y ? Json(*s.y) : Json(nullptr);
  return j;
}

std::string show_subgroup(const SubgroupReport& s) {
  if (s.passed) return "SV-subgroup\n";
  std::string where = s.param ? " (parameter " + *s.param + ")" : "";
  if (s.failure == "identity-not-top") return "not an SV-subgroup" + where + ": A(e) is not top\n";
  return "not an SV-subgroup" + where + ": A(x y^-1) >= A(x) ^ A(y) fails at x = " + s.x.value_or("?") +
         ", y = " + s.y.value_or("?") + "\n";
}

Result group_check(const Options& o) {
  const FiniteGroup g = load_group(o);
  Result r{0, new_report("group check"), ""};
  r.report["group"] = io::group_to_json(g);
  r.text = "group of order " + std::to_string(g.order()) + ", identity " + g.label(g.identity()) + "\n";
  if (o.sets.empty()) return r;
  const SVSet a = load_set(o.sets.front());
  const SubgroupReport s = is_sv_subgroup(g, a);
  r.status = s.passed ? 0 : 1;
  r.report["subgroup"] = subgroup_json(s);
  r.text += show_subgroup(s);
  if (s.passed && a.is_unparameterized()) {
    const DerivedPropertiesReport d = derived_properties_check(g, a);
    Json dj;
    dj["below_identity"] = d.below_identity;
    dj["inverse_symmetric"] = d.inverse_symmetric;
    dj["product_closed"] = d.product_closed;
    dj["symmetric_form"] = satisfies_symmetric_form(g, a);
    r.report["derived"] = dj;
    r.text += std::string("  A(x) <= A(e): ") + (d.below_identity ? "yes" : "no") +
              "\n  A(x^-1) = A(x): " + (d.inverse_symmetric ? "yes" : "no") +
              "\n  A(xy) >= A(x) ^ A(y): " + (d.product_closed ? "yes" : "no") + "\n";
    if (!d.all_hold()) r.status = 1;
  }
  return r;
}

Result group_levels(const Options& o) {
  const FiniteGroup g = load_group(o);
  const SVSet a = load_set(set_arg(o, 0, "levels"));
  const EquivalenceReport e = level_equivalence_check(g, a);
  Result r{e.agree() ? 0 : 1, new_report("group levels"), ""};
  r.report["sv_subgroup"] = e.sv_subgroup;
  r.report["all_levels_subgroups"] = e.all_levels_subgroups;
  r.report["levels_checked"] = e.levels_checked;
  r.report["failing_level"] = e.failing_level ? io::element_to_json(*e.failing_level, a.scale()) : Json(nullptr);
  r.report["agree"] = e.agree();
  r.text = std::string("SV-subgroup: ") + (e.sv_subgroup ? "yes" : "no") + "\nall " +
           std::to_string(e.levels_checked) + " checked levels are subgroups: " +
           (e.all_levels_subgroups ? "yes" : "no") + "\n";
  if (e.failing_level) {
    r.text += "  level " + show(*e.failing_level) + " gives " + show(level_subgroup(g, a, *e.failing_level)) + "\n";
  }
  r.text += e.agree() ? "characterizations agree\n" : "characterizations DISAGREE\n";
  return r;
}

Result group_meet(const Options& o) {
  const FiniteGroup g = load_group(o);
  std::vector<SVSet> sets;
  for (const auto& s : o.sets) sets.push_back(load_set(s));
  Result r = set_result("group meet", meet_subgroups(g, sets));
  r.text = "meet of " + std::to_string(sets.size()) + " SV-subgroups (re-verified)\n" + r.text;
  return r;
}

Result group_pullback(const Options& o) {
  if (o.hom.empty()) usage("pullback needs --hom");
  const GroupHom phi = io::group_hom_from_json(io::load_json(o.hom));
  Result r = set_result("group pullback", pullback_subgroup(phi, load_set(set_arg(o, 0, "pullback"))));
  r.text = "pullback SV-subgroup (re-verified)\n" + r.text;
  return r;
}

// ---------------------------------------------------------------------------
// decide

DecisionTable load_table(const Options& o) {
  if (o.table.empty()) usage("--table is required");
  return io::load_decision_table(o.table, o.k);
}

Rational lambda_arg(const Options& o) {
  if (o.lambda.empty()) usage("--lambda is required");
  return parse_rational(o.lambda);
}

std::string show_order(const std::vector<TieGroup>& order) {
  std::vector<std::string> groups;
  for (const auto& g : order) groups.push_back(join(g.members, " = "));
  return join(groups, " > ");
}

Json order_json(const std::vector<TieGroup>& order, const std::string& value_key) {
  Json out = Json::array();
  for (const auto& g : order) {
    Json j;
    j[value_key] = io::rational_report(g.value);
    j["members"] = g.members;
    out.push_back(j);
  }
  return out;
}

Json ranking_json(const RankingResult& r) {
  Json scores = Json::object();
  for (const auto& [label, s] : r.scores) scores[label] = io::rational_report(s);
  Json j;
  j["lambda"] = io::rational_report(r.lambda);
  j["scores"] = scores;
  j["order"] = order_json(r.order, "score");
  j["ranking"] = show_order(r.order);
  return j;
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s + " " : s + std::string(width - s.size(), ' ');
}

Result decide_rank(const Options& o) {
  const DecisionTable t = load_table(o);
  const Rational lambda = lambda_arg(o);
  const Profile profile = aggregate_min(t);
  const RankingResult ranking = rank(profile, lambda, t.k());

  Result r{0, new_report("decide rank"), ""};
  Json aggregate = Json::object();
  for (const auto& [label, g] : profile) aggregate[label] = Json{{"mu", io::rational_report(g.mu)}, {"m", g.m}};
  r.report["k"] = t.k();
  r.report["aggregate"] = aggregate;
  r.report["result"] = ranking_json(ranking);

  std::ostringstream text;
  text << "lambda = " << show(lambda) << ", k = " << t.k() << "\n";
  text << pad("rank", 6) << pad("alternative", 13) << pad("B = (mu, m)", 14) << "score\n";
  std::size_t place = 1;
  for (const auto& group : ranking.order) {
    for (const auto& label : group.members) {
      const auto& g = std::find_if(profile.begin(), profile.end(), [&](const auto& p) { return p.first == label; })->second;
      text << pad(std::to_string(place), 6) << pad(label, 13) << pad(to_string(g), 14) << show(group.value) << "\n";
    }
    place += group.members.size();
  }
  text << "ranking: " << show_order(ranking.order) << "\n";
  r.text = text.str();
  return r;
}

Result decide_sweep(const Options& o) {
  const DecisionTable t = load_table(o);
  const SweepReport sweep = lambda_sweep(t);
  Result r{0, new_report("decide sweep"), ""};
  Json breakpoints = Json::array();
  for (const auto& p : sweep.breakpoints) breakpoints.push_back(io::rational_report(p));
  Json intervals = Json::array();
  std::ostringstream text;
  text << "k = " << t.k() << ", " << sweep.intervals.size() << " interval(s)\n";
  for (std::size_t i = 0; i < sweep.intervals.size(); ++i) {
    const auto& iv = sweep.intervals[i];
    intervals.push_back(Json{{"lower", io::rational_report(iv.lower)},
                             {"upper", io::rational_report(iv.upper)},
                             {"ranking", ranking_json(iv.ranking)}});
    text << "  (" << show(iv.lower) << ", " << show(iv.upper) << "): " << show_order(iv.ranking.order) << "\n";
    if (i < sweep.at_breakpoints.size()) {
      text << "  at " << show(sweep.breakpoints[i]) << ": " << show_order(sweep.at_breakpoints[i].order) << "\n";
    }
  }
  Json at = Json::array();
  for (const auto& rk : sweep.at_breakpoints) at.push_back(ranking_json(rk));
  r.report["k"] = t.k();
  r.report["breakpoints"] = breakpoints;
  r.report["intervals"] = intervals;
  r.report["at_breakpoints"] = at;
  r.text = text.str();
  return r;
}

Result decide_breakeven(const Options& o) {
  const DecisionTable t = load_table(o);
  const auto comma = o.pair.find(',');
  if (comma == std::string::npos) usage("--pair expects two alternatives, e.g. S3,S4");
  const BreakEvenReport b = break_even(t, o.pair.substr(0, comma), o.pair.substr(comma + 1));
  Result r{0, new_report("decide breakeven"), ""};
  r.report["pair"] = {b.first, b.second};
  r.report["relation"] = to_string(b.relation);
  r.report["lambda_star"] = b.lambda_star ? io::rational_report(*b.lambda_star) : Json(nullptr);
  r.report["winner_below"] = b.winner_below ? Json(*b.winner_below) : Json(nullptr);
  r.report["winner_above"] = b.winner_above ? Json(*b.winner_above) : Json(nullptr);
  std::ostringstream text;
  text << b.first << " vs " << b.second << ": " << to_string(b.relation) << "\n";
  if (b.relation == PairRelation::Crossing) {
    text << "  lambda* = " << show(*b.lambda_star) << "\n  " << *b.winner_below << " wins for lambda < lambda*, "
         << *b.winner_above << " wins for lambda > lambda*\n";
  } else if (b.relation == PairRelation::Dominance) {
    text << "  " << *b.winner_below << " wins for every lambda in (0,1)\n";
  }
  r.text = text.str();
  return r;
}

Result decide_projections(const Options& o) {
  const DecisionTable t = load_table(o);
  const ProjectionReport p = projection_rankings(t);
  Result r{0, new_report("decide projections"), ""};
  r.report["grade_only"] = order_json(p.grade_only, "mu");
  r.report["evidence_only"] = order_json(p.evidence_only, "m");
  r.text = "grade only:    " + show_order(p.grade_only) + "\nevidence only: " + show_order(p.evidence_only) + "\n";
  return r;
}

// ---------------------------------------------------------------------------

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse:
    case ErrorCode::InvalidArgument:
    case ErrorCode::InfiniteCarrierExhaustive:
      return 2;
    default:
      return 1;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Scale-valued sets: scales, set algebra, encodings, topologies, subgroups and decisions", "svset"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_flag("--json", o.json, "Emit a JSON report");
  app.add_option("--seed", o.seed, "Seed for randomized checks");

  using Handler = Result (*)(const Options&);
  std::vector<std::pair<CLI::App*, Handler>> leaves;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, Handler h) {
    CLI::App* sub = parent->add_subcommand(name, help);
    leaves.emplace_back(sub, h);
    return sub;
  };

  CLI::App* scale = app.add_subcommand("scale", "Scale laws, homomorphisms and operations")->require_subcommand(1);
  CLI::App* c = leaf(scale, "check", "Verify the bounded De Morgan lattice laws", scale_check);
  c->add_option("--scale", o.scale, "Scale descriptor (JSON or path)")->required();
  c->add_flag("--exhaustive", o.exhaustive, "Enumerate the whole carrier");
  c->add_option("--samples", o.samples, "Random samples per law");
  c = leaf(scale, "hom", "Verify a scale homomorphism", scale_hom);
  c->add_option("--hom", o.hom, "Homomorphism document")->required();
  c->add_flag("--exhaustive", o.exhaustive, "Enumerate the whole source carrier");
  c->add_option("--samples", o.samples, "Random samples per law");
  c = leaf(scale, "op", "Apply join, meet, neg or leq", scale_op);
  c->add_option("--scale", o.scale, "Scale descriptor")->required();
  c->add_option("--op", o.op, "join | meet | neg | leq")->required();
  c->add_option("--a", o.a_value, "First value")->required();
  c->add_option("--b", o.b_value, "Second value");

  CLI::App* set = app.add_subcommand("set", "SV-set operations and encodings")->require_subcommand(1);
  c = leaf(set, "op", "Pointwise operations and transports", set_op);
  c->add_option("--op", o.op, "union | intersection | complement | subset | slice | transport | pullback | pushforward")
      ->required();
  c->add_option("--set", o.sets, "SV-set document (repeat for binary operations)")->required();
  c->add_option("--param", o.param, "Parameter for slice");
  c->add_option("--hom", o.hom, "Scale homomorphism for transport");
  c->add_option("--map", o.map, "Label maps for pullback / pushforward");
  c = leaf(set, "encode", "Encode a classical model as an SV-set", set_encode);
  c->add_option("--kind", o.kind, "crisp | soft | multiset | fuzzy | lfuzzy | ifs | rough | type2 | it2 | lviss | lviss-formal")
      ->required();
  c->add_option("--model", o.model, "Model document")->required();
  c = leaf(set, "decode", "Decode an SV-set back to a classical model", set_decode);
  c->add_option("--kind", o.kind, "Model kind")->required();
  c->add_option("--set", o.sets, "SV-set document")->required();
  c = leaf(set, "cut", "Strong (default) or weak cut", set_cut);
  c->add_option("--set", o.sets, "Unparameterized SV-set")->required();
  c->add_option("--alpha", o.alpha, "Cut level")->required();
  c->add_flag("--weak", o.weak, "Weak cut alpha <= A(x)");

  CLI::App* topo = app.add_subcommand("topo", "SV-topologies")->require_subcommand(1);
  c = leaf(topo, "validate", "Check the SV-topology axioms", topo_validate);
  c->add_option("--file", o.file, "Topology document")->required();
  c = leaf(topo, "generate", "Smallest SV-topology containing the generators", topo_generate);
  c->add_option("--file", o.file, "Document with scale, universe and generators")->required();
  c->add_option("--cap", o.cap, "Maximum number of opens");
  c = leaf(topo, "cut", "Crisp cut topology of a chain-scale SV-topology", topo_cut);
  c->add_option("--file", o.file, "Topology document")->required();
  c->add_option("--alpha", o.alpha, "Cut level")->required();
  c = leaf(topo, "continuity", "SV-continuity of a map between universes", topo_continuity);
  c->add_option("--file", o.file, "Source topology")->required();
  c->add_option("--target", o.target, "Target topology")->required();
  c->add_option("--map", o.map, "Label map source -> target")->required();
  c = leaf(topo, "counterexample", "Strong cuts versus meets (M3 by default)", topo_counterexample);
  c->add_option("--scale", o.scale, "Scale descriptor");
  c->add_option("--a", o.a_value, "A(x)");
  c->add_option("--b", o.b_value, "B(x)");
  c->add_option("--alpha", o.alpha, "Cut level");
  c = leaf(topo, "slice", "Slice a family of SV-sets at a parameter", topo_slice);
  c->add_option("--set", o.sets, "SV-set documents")->required();
  c->add_option("--param", o.param, "Parameter")->required();

  CLI::App* group = app.add_subcommand("group", "SV-subgroups of finite groups")->require_subcommand(1);
  c = leaf(group, "check", "Validate a group and optionally an SV-subgroup", group_check);
  c->add_option("--group", o.group, "Z<n>, S3, D4 or a group document")->required();
  c->add_option("--set", o.sets, "SV-set over the group");
  c = leaf(group, "levels", "Compare the SV-subgroup test with its level sets", group_levels);
  c->add_option("--group", o.group, "Group")->required();
  c->add_option("--set", o.sets, "SV-set over the group")->required();
  c = leaf(group, "meet", "Meet of SV-subgroups", group_meet);
  c->add_option("--group", o.group, "Group")->required();
  c->add_option("--set", o.sets, "SV-subgroups")->required();
  c = leaf(group, "pullback", "Pull an SV-subgroup back along a homomorphism", group_pullback);
  c->add_option("--hom", o.hom, "Homomorphism document")->required();
  c->add_option("--set", o.sets, "SV-subgroup of the target")->required();

  CLI::App* decide = app.add_subcommand("decide", "Evidence-graded decisions")->require_subcommand(1);
  auto table_options = [&](CLI::App* sub) {
    sub->add_option("--table", o.table, "CSV or JSON decision table")->required();
    sub->add_option("--k", o.k, "Evidence bound (required for CSV)");
  };
  c = leaf(decide, "rank", "Rank alternatives at a given lambda", decide_rank);
  table_options(c);
  c->add_option("--lambda", o.lambda, "Weight of the grade, strictly between 0 and 1")->required();
  table_options(leaf(decide, "sweep", "Rankings on every lambda interval", decide_sweep));
  c = leaf(decide, "breakeven", "Break-even lambda for two alternatives", decide_breakeven);
  table_options(c);
  c->add_option("--pair", o.pair, "Two alternatives, e.g. S3,S4")->required();
  table_options(leaf(decide, "projections", "Grade-only and evidence-only rankings", decide_projections));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  Handler handler = nullptr;
  for (const auto& [sub, h] : leaves) {
    if (sub->parsed()) handler = h;
  }
  if (!handler) {
    err << "error: no command given\n";
    return 2;
  }

  try {
    Result r = handler(o);
    if (o.json) {
      out << r.report.dump(2) << "\n";
    } else {
      out << r.text;
    }
    return r.status;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const Json::exception& e) {
    err << "error: parse-error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace svset::cli
