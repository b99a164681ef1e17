#include "svset/topology.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "svset/error.hpp"

namespace svset {

namespace {

void require_unparameterized(const SVSet& a) {
  if (!a.is_unparameterized()) throw Error(ErrorCode::ShapeMismatch, "cuts need an unparameterized set");
}

void require_below_top(const Scale& s, const Element& alpha) {
  s.require(alpha);
  if (alpha == s.top()) throw Error(ErrorCode::AlphaIsTop, "strong cuts need alpha < top");
}

// Value-table index over a family; all members share shape.
class FamilyIndex {
 public:
  explicit FamilyIndex(const std::vector<SVSet>& family) {
    for (std::size_t i = 0; i < family.size(); ++i) index_.emplace(family[i].values(), i);
  }
  bool contains(const SVSet& a) const { return index_.count(a.values()) > 0; }

 private:
  std::map<std::vector<Element>, std::size_t> index_;
};

// Shared closure check over any lattice of "members".
template <typename Member, typename Join, typename Meet, typename Contains, typename Key>
ValidationReport<Member> check_closure(const std::vector<Member>& opens, const Member& bottom, const Member& top,
                                       Join join, Meet meet, Contains contains, Key key) {
  ValidationReport<Member> report;
  std::set<std::pair<std::string, std::decay_t<decltype(key(bottom))>>> seen;
  auto missing = [&](std::string rule, std::vector<std::size_t> operands, Member m) {
    if (seen.emplace(rule, key(m)).second) {
      report.witnesses.push_back({std::move(rule), std::move(operands), std::move(m)});
    }
  };
  if (!contains(bottom)) missing("bottom", {}, bottom);
  if (!contains(top)) missing("top", {}, top);
  for (std::size_t i = 0; i < opens.size(); ++i) {
    for (std::size_t j = i + 1; j < opens.size(); ++j) {
      Member u = join(opens[i], opens[j]);
      if (!contains(u)) missing("join", {i, j}, std::move(u));
      Member m = meet(opens[i], opens[j]);
      if (!contains(m)) missing("meet", {i, j}, std::move(m));
    }
  }
  return report;
}

void require_family_shape(const std::vector<SVSet>& family, const Universe& universe, const Scale& scale) {
  for (const auto& a : family) {
    require_unparameterized(a);
    if (!(a.universe() == universe)) throw Error(ErrorCode::ShapeMismatch, "open set over a different universe");
    if (!(a.scale() == scale)) {
      throw Error(ErrorCode::ShapeMismatch, "open set over " + a.scale().signature() + ", expected " +
                                                scale.signature());
    }
  }
}

const std::vector<Element>& values_key(const SVSet& a) { return a.values(); }
const Subset& subset_key(const Subset& s) { return s; }

Subset set_union(const Subset& a, const Subset& b) {
  Subset r = a;
  r.insert(b.begin(), b.end());
  return r;
}

Subset set_intersection(const Subset& a, const Subset& b) {
  Subset r;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(r, r.end()));
  return r;
}

}  // namespace

Subset strong_cut(const SVSet& a, const Element& alpha) {
  require_unparameterized(a);
  require_below_top(a.scale(), alpha);
  Subset out;
  for (std::size_t x = 0; x < a.universe().size(); ++x) {
    if (a.scale().lt(alpha, a.at(x))) out.insert(a.universe()[x]);
  }
  return out;
}

Subset weak_cut(const SVSet& a, const Element& alpha) {
  require_unparameterized(a);
  Subset out;
  for (std::size_t x = 0; x < a.universe().size(); ++x) {
    if (a.scale().leq(alpha, a.at(x))) out.insert(a.universe()[x]);
  }
  return out;
}

SVTopologyReport validate_sv_topology(const SVTopology& topology) {
  require_family_shape(topology.opens, topology.universe, topology.scale);
  const auto& u = topology.universe;
  const auto& s = topology.scale;
  const ParamSet star = ParamSet::unparameterized();
  FamilyIndex index(topology.opens);
  return check_closure(
      topology.opens, SVSet::constant(u, star, s, s.bottom()), SVSet::constant(u, star, s, s.top()), sv_union,
      sv_intersection, [&](const SVSet& a) { return index.contains(a); }, values_key);
}

CrispTopologyReport validate_crisp_topology(const CrispTopology& topology) {
  const auto& u = topology.universe;
  for (const auto& open : topology.opens) {
    for (const auto& x : open) {
      if (!u.contains(x)) throw Error(ErrorCode::UnknownElement, "open set mentions \"" + x + "\"");
    }
  }
  std::set<Subset> members(topology.opens.begin(), topology.opens.end());
  Subset full(u.labels().begin(), u.labels().end());
  return check_closure(topology.opens, Subset{}, full, set_union, set_intersection,
                       [&](const Subset& m) { return members.count(m) > 0; }, subset_key);
}

SVTopology generate_sv_topology(const Universe& universe, const Scale& scale, const std::vector<SVSet>& generators,
                                std::size_t cap) {
  require_family_shape(generators, universe, scale);
  const ParamSet star = ParamSet::unparameterized();
  std::vector<SVSet> family;
  std::set<std::vector<Element>> seen;
  auto add = [&](SVSet a) {
    if (!seen.insert(a.values()).second) return;
    if (family.size() >= cap) {
      throw Error(ErrorCode::ClosureCapExceeded,
                  "closure exceeds the cap of " + std::to_string(cap) + " open sets");
    }
    family.push_back(std::move(a));
  };
  add(SVSet::constant(universe, star, scale, scale.bottom()));
  add(SVSet::constant(universe, star, scale, scale.top()));
  for (const auto& g : generators) add(g);

  // Each new member is combined with everything before it exactly once.
  for (std::size_t next = 0; next < family.size(); ++next) {
    for (std::size_t i = 0; i < next; ++i) {
      SVSet j = sv_union(family[i], family[next]);
      SVSet m = sv_intersection(family[i], family[next]);
      add(std::move(j));
      add(std::move(m));
    }
  }
  return SVTopology{scale, universe, std::move(family)};
}

CrispTopology cut_topology(const SVTopology& topology, const Element& alpha) {
  if (!topology.scale.is_chain()) {
    throw Error(ErrorCode::NotAChain, "cut topologies need a chain scale; " + topology.scale.signature() +
                                          " is not totally ordered (strong cuts need not be closed under "
                                          "intersection, see the M3 counterexample)");
  }
  require_below_top(topology.scale, alpha);
  CrispTopology out{topology.universe, {}};
  std::set<Subset> seen;
  for (const auto& open : topology.opens) {
    Subset cut = strong_cut(open, alpha);
    if (seen.insert(cut).second) out.opens.push_back(std::move(cut));
  }
  if (!validate_crisp_topology(out).valid()) {
    throw Error(ErrorCode::Internal, "strong cuts of a chain-valued topology failed the topology axioms");
  }
  return out;
}

CounterexampleReport cut_meet_counterexample(const Scale& scale, const Element& a, const Element& b,
                                             const Element& alpha) {
  Universe u(std::vector<std::string>{"x"});
  SVSet A = SVSet::unparameterized(u, scale, {a});
  SVSet B = SVSet::unparameterized(u, scale, {b});
  SVSet AB = sv_intersection(A, B);
  return CounterexampleReport{scale.signature(),
                              a,
                              b,
                              alpha,
                              AB.at(0),
                              set_intersection(strong_cut(A, alpha), strong_cut(B, alpha)),
                              strong_cut(AB, alpha)};
}

CounterexampleReport m3_cut_counterexample() {
  return cut_meet_counterexample(m3_scale(), Element::atom("p"), Element::atom("q"), Element::atom("0"));
}

ContinuityReport check_sv_continuity(const LabelMap& f, const SVTopology& source, const SVTopology& target) {
  if (!(source.scale == target.scale)) {
    throw Error(ErrorCode::ScaleMismatch,
                "topologies use different scales: " + source.scale.signature() + " vs " + target.scale.signature());
  }
  const ParamSet star = ParamSet::unparameterized();
  LabelMap g{{"*", "*"}};
  FamilyIndex index(source.opens);
  ContinuityReport report;
  for (std::size_t i = 0; i < target.opens.size(); ++i) {
    SVSet pulled = pullback(f, source.universe, g, star, target.opens[i]);
    if (!index.contains(pulled)) {
      report.continuous = false;
      report.failing_open = i;
      report.failing_pullback = std::move(pulled);
      break;
    }
  }
  return report;
}

bool check_crisp_continuity(const LabelMap& f, const CrispTopology& source, const CrispTopology& target) {
  for (const auto& x : source.universe.labels()) {
    if (!f.count(x)) throw Error(ErrorCode::NonTotalMap, "f is not defined on \"" + x + "\"");
  }
  std::set<Subset> opens(source.opens.begin(), source.opens.end());
  for (const auto& open : target.opens) {
    Subset preimage;
    for (const auto& x : source.universe.labels()) {
      if (open.count(f.at(x))) preimage.insert(x);
    }
    if (!opens.count(preimage)) return false;
  }
  return true;
}

SVTopology slice_topology(const std::vector<SVSet>& family, const std::string& param) {
  if (family.empty()) throw Error(ErrorCode::InvalidFamily, "empty family");
  const SVSet& first = family.front();
  if (!first.params().contains(param)) throw Error(ErrorCode::UnknownParam, "\"" + param + "\" is not a parameter");
  for (const auto& a : family) {
    if (!a.same_shape(first)) throw Error(ErrorCode::ShapeMismatch, "family members differ in shape");
  }
  const Scale& s = first.scale();
  FamilyIndex index(family);
  auto report = check_closure(
      family, SVSet::constant(first.universe(), first.params(), s, s.bottom()),
      SVSet::constant(first.universe(), first.params(), s, s.top()), sv_union, sv_intersection,
      [&](const SVSet& a) { return index.contains(a); }, values_key);
  if (!report.valid()) {
    throw Error(ErrorCode::InvalidFamily, "parameterized family is not closed (" + report.witnesses.front().rule + ")");
  }
  SVTopology out{s, first.universe(), {}};
  std::set<std::vector<Element>> seen;
  for (const auto& a : family) {
    SVSet sl = slice(a, param);
    if (seen.insert(sl.values()).second) out.opens.push_back(std::move(sl));
  }
  return out;
}

SVTopology topology_intersection(const SVTopology& a, const SVTopology& b) {
  if (!(a.scale == b.scale) || !(a.universe == b.universe)) {
    throw Error(ErrorCode::ShapeMismatch, "topologies differ in universe or scale");
  }
  FamilyIndex index(b.opens);
  SVTopology out{a.scale, a.universe, {}};
  for (const auto& open : a.opens) {
    if (index.contains(open)) out.opens.push_back(open);
  }
  return out;
}

}  // namespace svset
