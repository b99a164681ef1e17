#include "svset/encodings.hpp"

#include <algorithm>

#include "svset/error.hpp"

namespace svset {

namespace {

void require_kind(const SVSet& a, ScaleKind kind, bool unparameterized = true) {
  if (a.scale().kind() != kind) {
    throw Error(ErrorCode::WrongScale, "expected a " + std::string(to_string(kind)) + " set, got " +
                                           a.scale().signature());
  }
  if (unparameterized && !a.is_unparameterized()) {
    throw Error(ErrorCode::WrongScale, "expected an unparameterized set (E = {*})");
  }
}

void require_members(const Universe& u, const Subset& s, std::string_view what) {
  for (const auto& x : s) {
    if (!u.contains(x)) {
      throw Error(ErrorCode::UnknownElement, std::string(what) + " contains \"" + x + "\", not in the universe");
    }
  }
}

template <typename T>
const T& value_for(const Membership<T>& m, const std::string& x, std::string_view what) {
  auto it = m.find(x);
  if (it == m.end()) throw Error(ErrorCode::NonTotalMap, std::string(what) + " is not defined on \"" + x + "\"");
  return it->second;
}

const Rational& unit_value(const Membership<Rational>& m, const std::string& x, std::string_view what) {
  const Rational& q = value_for(m, x, what);
  if (!in_unit_interval(q)) {
    throw Error(ErrorCode::OutOfRange, std::string(what) + "(" + x + ") = " + to_string(q) + " is outside [0,1]");
  }
  return q;
}

SVSet characteristic(const Universe& universe, const ParamSet& params,
                     const std::function<bool(const std::string&, const std::string&)>& in) {
  return SVSet::from_function(universe, params, bool_scale(), [&](std::size_t x, std::size_t e) {
    return Element::boolean(in(universe[x], params[e]));
  });
}

Subset complement_of(const Universe& u, const Subset& s) {
  Subset out;
  for (const auto& x : u.labels()) {
    if (!s.count(x)) out.insert(x);
  }
  return out;
}

}  // namespace

// --- crisp --------------------------------------------------------------------

SVSet crisp_to_sv(const Universe& universe, const Subset& subset) {
  require_members(universe, subset, "subset");
  return characteristic(universe, ParamSet::unparameterized(),
                        [&](const std::string& x, const std::string&) { return subset.count(x) > 0; });
}

Subset sv_to_crisp(const SVSet& a) {
  require_kind(a, ScaleKind::Bool);
  Subset out;
  for (std::size_t x = 0; x < a.universe().size(); ++x) {
    if (a.at(x).as_bool()) out.insert(a.universe()[x]);
  }
  return out;
}

// --- soft ---------------------------------------------------------------------

SVSet soft_to_sv(const SoftSet& soft) {
  for (const auto& e : soft.params.labels()) {
    require_members(soft.universe, value_for(soft.assignment, e, "soft assignment"), "F(" + e + ")");
  }
  for (const auto& [e, s] : soft.assignment) {
    if (!soft.params.contains(e)) throw Error(ErrorCode::UnknownParam, "\"" + e + "\" is not a parameter");
  }
  return characteristic(soft.universe, soft.params, [&](const std::string& x, const std::string& e) {
    return soft.assignment.at(e).count(x) > 0;
  });
}

SoftSet sv_to_soft(const SVSet& a) {
  require_kind(a, ScaleKind::Bool, false);
  SoftSet out{a.universe(), a.params(), {}};
  for (std::size_t e = 0; e < a.params().size(); ++e) {
    Subset s;
    for (std::size_t x = 0; x < a.universe().size(); ++x) {
      if (a.at(x, e).as_bool()) s.insert(a.universe()[x]);
    }
    out.assignment[a.params()[e]] = std::move(s);
  }
  return out;
}

namespace {

SoftSet soft_combine(const SoftSet& f, const SoftSet& g, bool is_union) {
  if (!(f.universe == g.universe) || !(f.params == g.params)) {
    throw Error(ErrorCode::ShapeMismatch, "soft sets differ in universe or parameters");
  }
  SoftSet out{f.universe, f.params, {}};
  for (const auto& e : f.params.labels()) {
    const Subset& a = value_for(f.assignment, e, "soft assignment");
    const Subset& b = value_for(g.assignment, e, "soft assignment");
    Subset r;
    if (is_union) {
      std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::inserter(r, r.end()));
    } else {
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(r, r.end()));
    }
    out.assignment[e] = std::move(r);
  }
  return out;
}

}  // namespace

SoftSet soft_union(const SoftSet& f, const SoftSet& g) { return soft_combine(f, g, true); }
SoftSet soft_intersection(const SoftSet& f, const SoftSet& g) { return soft_combine(f, g, false); }

SoftSet soft_complement(const SoftSet& f) {
  SoftSet out{f.universe, f.params, {}};
  for (const auto& e : f.params.labels()) {
    out.assignment[e] = complement_of(f.universe, value_for(f.assignment, e, "soft assignment"));
  }
  return out;
}

// --- identity encodings ---------------------------------------------------------

SVSet multiset_to_sv(const Universe& universe, const Membership<std::int64_t>& multiplicity, std::int64_t k) {
  Scale scale = chain_scale(k);
  std::vector<Element> values;
  for (const auto& x : universe.labels()) {
    const auto m = value_for(multiplicity, x, "multiplicity");
    if (m < 0 || m > k) {
      throw Error(ErrorCode::OutOfRange,
                  "multiplicity of \"" + x + "\" is " + std::to_string(m) + ", outside 0.." + std::to_string(k));
    }
    values.push_back(Element::integer(m));
  }
  return SVSet::unparameterized(universe, scale, std::move(values));
}

Membership<std::int64_t> sv_to_multiset(const SVSet& a) {
  require_kind(a, ScaleKind::Chain);
  Membership<std::int64_t> out;
  for (std::size_t x = 0; x < a.universe().size(); ++x) out[a.universe()[x]] = a.at(x).as_integer();
  return out;
}

SVSet fuzzy_to_sv(const Universe& universe, const Membership<Rational>& grade) {
  std::vector<Element> values;
  for (const auto& x : universe.labels()) values.push_back(Element::rational(unit_value(grade, x, "mu")));
  return SVSet::unparameterized(universe, unit_scale(), std::move(values));
}

Membership<Rational> sv_to_fuzzy(const SVSet& a) {
  require_kind(a, ScaleKind::UnitRational);
  Membership<Rational> out;
  for (std::size_t x = 0; x < a.universe().size(); ++x) out[a.universe()[x]] = a.at(x).as_rational();
  return out;
}

SVSet lfuzzy_to_sv(const Universe& universe, const Membership<Element>& grade, const Scale& lattice) {
  std::vector<Element> values;
  for (const auto& x : universe.labels()) {
    const Element& v = value_for(grade, x, "mu");
    if (!lattice.contains(v)) {
      throw Error(ErrorCode::OutOfRange, "mu(" + x + ") = " + to_string(v) + " is not in " + lattice.signature());
    }
    values.push_back(v);
  }
  return SVSet::unparameterized(universe, lattice, std::move(values));
}

Membership<Element> sv_to_lfuzzy(const SVSet& a) {
  if (!a.is_unparameterized()) throw Error(ErrorCode::WrongScale, "expected an unparameterized set (E = {*})");
  Membership<Element> out;
  for (std::size_t x = 0; x < a.universe().size(); ++x) out.emplace(a.universe()[x], a.at(x));
  return out;
}

// --- IFS ------------------------------------------------------------------------

SVSet ifs_to_sv(const Universe& universe, const IFSPair& pair) {
  std::vector<Element> values;
  for (const auto& x : universe.labels()) {
    const Rational& mu = unit_value(pair.mu, x, "mu");
    const Rational& nu = unit_value(pair.nu, x, "nu");
    if (mu + nu > 1) {
      throw Error(ErrorCode::ConstraintViolation, "mu(" + x + ") + nu(" + x + ") = " + to_string(Rational(mu + nu)) +
                                                      " exceeds 1");
    }
    values.push_back(Element::pair(Element::rational(mu), Element::rational(nu)));
  }
  return SVSet::unparameterized(universe, ifs_scale(), std::move(values));
}

IFSPair sv_to_ifs(const SVSet& a) {
  require_kind(a, ScaleKind::IfsDelta);
  IFSPair out;
  for (std::size_t x = 0; x < a.universe().size(); ++x) {
    out.mu[a.universe()[x]] = a.at(x).items()[0].as_rational();
    out.nu[a.universe()[x]] = a.at(x).items()[1].as_rational();
  }
  return out;
}

// --- rough ----------------------------------------------------------------------

SVSet rough_to_sv(const Universe& universe, const RoughPair& pair) {
  require_members(universe, pair.lower, "lower approximation");
  require_members(universe, pair.upper, "upper approximation");
  for (const auto& x : pair.lower) {
    if (!pair.upper.count(x)) {
      throw Error(ErrorCode::ConstraintViolation, "lower approximation is not contained in upper (\"" + x + "\")");
    }
  }
  std::vector<Element> values;
  for (const auto& x : universe.labels()) {
    values.push_back(Element::pair(Element::integer(pair.lower.count(x) ? 1 : 0),
                                   Element::integer(pair.upper.count(x) ? 1 : 0)));
  }
  return SVSet::unparameterized(universe, rough_scale(), std::move(values));
}

RoughPair sv_to_rough(const SVSet& a) {
  require_kind(a, ScaleKind::RoughChain);
  const Scale& s = a.scale();
  RoughPair out;
  for (std::size_t x = 0; x < a.universe().size(); ++x) {
    if (a.at(x) == s.top()) out.lower.insert(a.universe()[x]);
    if (a.at(x) != s.bottom()) out.upper.insert(a.universe()[x]);
  }
  return out;
}

RoughPair rough_ops(const Universe& universe, const RoughPair& r1, const RoughPair& r2, RoughOp op) {
  auto both = [](const Subset& a, const Subset& b, bool is_union) {
    Subset r;
    if (is_union) {
      std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::inserter(r, r.end()));
    } else {
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(r, r.end()));
    }
    return r;
  };
  switch (op) {
    case RoughOp::Union: return {both(r1.lower, r2.lower, true), both(r1.upper, r2.upper, true)};
    case RoughOp::Intersection: return {both(r1.lower, r2.lower, false), both(r1.upper, r2.upper, false)};
    case RoughOp::Complement: return {complement_of(universe, r1.upper), complement_of(universe, r1.lower)};
  }
  throw Error(ErrorCode::InvalidArgument, "unknown rough operation");
}

// --- Type-2 ---------------------------------------------------------------------

SVSet type2_to_sv(const Universe& universe, const std::vector<Rational>& grid, const Type2Membership& mu) {
  Scale scale = function_scale(grid);
  std::vector<Element> values;
  for (const auto& x : universe.labels()) {
    const auto& secondary = value_for(mu, x, "secondary membership");
    if (secondary.size() != grid.size()) {
      throw Error(ErrorCode::BadGrid, "secondary membership of \"" + x + "\" has " +
                                          std::to_string(secondary.size()) + " values for a grid of " +
                                          std::to_string(grid.size()));
    }
    std::vector<Element> f;
    for (const auto& v : secondary) {
      if (!in_unit_interval(v)) throw Error(ErrorCode::OutOfRange, "secondary grade " + to_string(v) + " outside [0,1]");
      f.push_back(Element::rational(v));
    }
    values.push_back(Element::tuple(std::move(f)));
  }
  return SVSet::unparameterized(universe, scale, std::move(values));
}

Type2Membership sv_to_type2(const SVSet& a) {
  require_kind(a, ScaleKind::FunctionGrid);
  Type2Membership out;
  for (std::size_t x = 0; x < a.universe().size(); ++x) {
    std::vector<Rational> f;
    for (const auto& v : a.at(x).items()) f.push_back(v.as_rational());
    out[a.universe()[x]] = std::move(f);
  }
  return out;
}

SVSet it2_to_sv(const Universe& universe, const IT2Footprint& footprint) {
  std::vector<Element> values;
  for (const auto& x : universe.labels()) {
    const Rational& lo = unit_value(footprint.lower, x, "lower membership");
    const Rational& hi = unit_value(footprint.upper, x, "upper membership");
    if (lo > hi) {
      throw Error(ErrorCode::IntervalViolation,
                  "lower(" + x + ") = " + to_string(lo) + " exceeds upper(" + x + ") = " + to_string(hi));
    }
    values.push_back(Element::pair(Element::rational(lo), Element::rational(hi)));
  }
  return SVSet::unparameterized(universe, interval_scale(unit_scale()), std::move(values));
}

IT2Footprint sv_to_it2(const SVSet& a) {
  require_kind(a, ScaleKind::Interval);
  if (!(a.scale().components().front() == unit_scale())) {
    throw Error(ErrorCode::WrongScale, "expected interval(unit-rational), got " + a.scale().signature());
  }
  IT2Footprint out;
  for (std::size_t x = 0; x < a.universe().size(); ++x) {
    out.lower[a.universe()[x]] = a.at(x).items()[0].as_rational();
    out.upper[a.universe()[x]] = a.at(x).items()[1].as_rational();
  }
  return out;
}

// --- LVISS ------------------------------------------------------------------------

namespace {

void check_lviss(const LVISS& f) {
  const std::size_t np = f.params.size();
  const std::size_t nu = f.universe.size();
  if (f.lower.size() != np || f.upper.size() != np) {
    throw Error(ErrorCode::ShapeMismatch, "LVISS needs one lower and one upper function per parameter");
  }
  for (std::size_t e = 0; e < np; ++e) {
    if (f.lower[e].size() != nu || f.upper[e].size() != nu) {
      throw Error(ErrorCode::ShapeMismatch, "LVISS functions must have one value per universe element");
    }
    for (std::size_t x = 0; x < nu; ++x) {
      f.base.require(f.lower[e][x]);
      f.base.require(f.upper[e][x]);
      if (!f.base.leq(f.lower[e][x], f.upper[e][x])) {
        throw Error(ErrorCode::IntervalViolation, "f_" + f.params[e] + "^- exceeds f_" + f.params[e] + "^+ at \"" +
                                                      f.universe[x] + "\"");
      }
    }
  }
}

void require_full_domain(const LVISS& f) {
  if (f.domain != f.params.labels()) {
    throw Error(ErrorCode::VariableDomainUnsupported,
                "LVISS domain has " + std::to_string(f.domain.size()) + " of " + std::to_string(f.params.size()) +
                    " parameters; only the full parameter domain is supported");
  }
}

template <typename Op>
LVISS lviss_endpointwise(const LVISS& f, const LVISS& g, Op op) {
  require_full_domain(f);
  require_full_domain(g);
  if (!(f.universe == g.universe) || !(f.params == g.params) || !(f.base == g.base)) {
    throw Error(ErrorCode::ShapeMismatch, "LVISS operands differ in universe, parameters or base lattice");
  }
  LVISS out = f;
  for (std::size_t e = 0; e < f.params.size(); ++e) {
    for (std::size_t x = 0; x < f.universe.size(); ++x) {
      out.lower[e][x] = op(f.lower[e][x], g.lower[e][x]);
      out.upper[e][x] = op(f.upper[e][x], g.upper[e][x]);
    }
  }
  return out;
}

}  // namespace

LVISS sv_to_simple_lviss(const SVSet& a) {
  LVISS out{a.universe(), a.params(), a.params().labels(), a.scale(), {}, {}};
  for (std::size_t e = 0; e < a.params().size(); ++e) {
    std::vector<Element> slice_values;
    for (std::size_t x = 0; x < a.universe().size(); ++x) slice_values.push_back(a.at(x, e));
    out.lower.push_back(slice_values);
    out.upper.push_back(std::move(slice_values));
  }
  return out;
}

SVSet lviss_membership_to_sv(const LVISS& f) {
  require_full_domain(f);
  check_lviss(f);
  return SVSet::from_function(f.universe, f.params, interval_scale(f.base), [&](std::size_t x, std::size_t e) {
    return Element::pair(f.lower[e][x], f.upper[e][x]);
  });
}

LVISS lviss_union(const LVISS& f, const LVISS& g) {
  return lviss_endpointwise(f, g, [&](const Element& a, const Element& b) { return f.base.join(a, b); });
}

LVISS lviss_intersection(const LVISS& f, const LVISS& g) {
  return lviss_endpointwise(f, g, [&](const Element& a, const Element& b) { return f.base.meet(a, b); });
}

LVISS lviss_complement(const LVISS& f) {
  require_full_domain(f);
  LVISS out = f;
  for (std::size_t e = 0; e < f.params.size(); ++e) {
    for (std::size_t x = 0; x < f.universe.size(); ++x) {
      out.lower[e][x] = f.base.neg(f.upper[e][x]);
      out.upper[e][x] = f.base.neg(f.lower[e][x]);
    }
  }
  return out;
}

SVSet lviss_formal_to_sv(const std::vector<std::string>& domain, const Scale& lattice,
                         const Membership<std::pair<Element, Element>>& intervals) {
  Universe universe("domain", domain);
  Scale scale = interval_scale(lattice);
  std::vector<Element> values;
  for (const auto& e : domain) {
    const auto& [lo, hi] = value_for(intervals, e, "F");
    Element v = Element::pair(lo, hi);
    if (!scale.contains(v)) {
      throw Error(ErrorCode::IntervalViolation, "F(" + e + ") = " + to_string(v) + " is not an interval of " +
                                                    lattice.signature());
    }
    values.push_back(std::move(v));
  }
  return SVSet::unparameterized(universe, scale, std::move(values));
}

}  // namespace svset
