#include "svset/groups.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>

#include "svset/error.hpp"

namespace svset {

FiniteGroup::FiniteGroup(std::vector<std::string> elements, const std::vector<std::vector<std::string>>& table,
                         const std::string& identity)
    : labels_(std::move(elements)) {
  const std::size_t n = labels_.size();
  if (n == 0) throw Error(ErrorCode::NotAGroup, "a group needs at least one element");
  const Universe index("G", labels_);  // rejects duplicates
  auto lookup = [&](const std::string& label, std::string_view role) {
    auto i = index.find(label);
    if (!i) throw Error(ErrorCode::NotAGroup, std::string(role) + " \"" + label + "\" is not a group element");
    return *i;
  };
  if (table.size() != n) throw Error(ErrorCode::NotAGroup, "Cayley table needs " + std::to_string(n) + " rows");
  table_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n) {
      throw Error(ErrorCode::NotAGroup, "Cayley table row " + labels_[a] + " needs " + std::to_string(n) + " entries");
    }
    for (std::size_t b = 0; b < n; ++b) table_[a * n + b] = lookup(table[a][b], "product");
  }
  identity_ = lookup(identity, "identity");

  for (std::size_t a = 0; a < n; ++a) {
    if (multiply(identity_, a) != a || multiply(a, identity_) != a) {
      throw Error(ErrorCode::NotAGroup, "\"" + identity + "\" is not an identity for \"" + labels_[a] + "\"");
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (multiply(multiply(a, b), c) != multiply(a, multiply(b, c))) {
          throw Error(ErrorCode::NotAGroup, "associativity fails on (" + labels_[a] + "," + labels_[b] + "," +
                                                labels_[c] + ")");
        }
      }
    }
  }
  inverse_.assign(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (multiply(a, b) == identity_ && multiply(b, a) == identity_) {
        inverse_[a] = b;
        break;
      }
    }
    if (inverse_[a] == n) throw Error(ErrorCode::NotAGroup, "\"" + labels_[a] + "\" has no inverse");
  }
}

std::size_t FiniteGroup::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw Error(ErrorCode::UnknownElement, "\"" + label + "\" is not a group element");
  return static_cast<std::size_t>(it - labels_.begin());
}

namespace {

template <std::size_t N>
FiniteGroup permutation_group(const std::vector<std::string>& labels, const std::vector<std::array<int, N>>& perms) {
  auto compose = [](const std::array<int, N>& a, const std::array<int, N>& b) {
    std::array<int, N> out{};
    for (std::size_t i = 0; i < N; ++i) out[i] = a[static_cast<std::size_t>(b[i])];
    return out;
  };
  std::vector<std::vector<std::string>> table(perms.size());
  for (std::size_t i = 0; i < perms.size(); ++i) {
    for (std::size_t j = 0; j < perms.size(); ++j) {
      auto c = compose(perms[i], perms[j]);
      auto it = std::find(perms.begin(), perms.end(), c);
      table[i].push_back(labels[static_cast<std::size_t>(it - perms.begin())]);
    }
  }
  return FiniteGroup(labels, table, labels.front());
}

}  // namespace

FiniteGroup cyclic_group(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "Z_0 is not a finite group");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  std::vector<std::vector<std::string>> table(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) table[a].push_back(labels[(a + b) % n]);
  }
  return FiniteGroup(labels, table, "0");
}

FiniteGroup symmetric_group_3() {
  // Images of (0,1,2); composition is right-to-left.
  return permutation_group<3>({"e", "(12)", "(13)", "(23)", "(123)", "(132)"},
                              {{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}});
}

FiniteGroup dihedral_group_4() {
  std::vector<std::string> labels;
  std::vector<std::array<int, 4>> perms;
  for (int k = 0; k < 4; ++k) {
    labels.push_back("r" + std::to_string(k));
    perms.push_back({k % 4, (1 + k) % 4, (2 + k) % 4, (3 + k) % 4});
  }
  for (int k = 0; k < 4; ++k) {
    labels.push_back("s" + std::to_string(k));
    perms.push_back({k % 4, (k + 3) % 4, (k + 2) % 4, (k + 1) % 4});
  }
  return permutation_group<4>(labels, perms);
}

FiniteGroup builtin_group(const std::string& name) {
  if (name == "S3") return symmetric_group_3();
  if (name == "D4") return dihedral_group_4();
  if (name.size() > 1 && name[0] == 'Z' &&
      std::all_of(name.begin() + 1, name.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    return cyclic_group(std::stoul(name.substr(1)));
  }
  throw Error(ErrorCode::InvalidArgument, "unknown built-in group \"" + name + "\" (expected Z<n>, S3 or D4)");
}

GroupHom::GroupHom(FiniteGroup source, FiniteGroup target, const LabelMap& mapping)
    : source_(std::move(source)), target_(std::move(target)) {
  for (const auto& label : source_.labels()) {
    auto it = mapping.find(label);
    if (it == mapping.end()) throw Error(ErrorCode::NonTotalMap, "homomorphism is not defined on \"" + label + "\"");
    image_.push_back(target_.index_of(it->second));
  }
  const std::size_t n = source_.order();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (image_[source_.multiply(a, b)] != target_.multiply(image_[a], image_[b])) {
        throw Error(ErrorCode::NotAHomomorphism,
                    "phi(" + source_.label(a) + "*" + source_.label(b) + ") != phi(" + source_.label(a) + ")*phi(" +
                        source_.label(b) + ")");
      }
    }
  }
}

LabelMap GroupHom::mapping() const {
  LabelMap out;
  for (std::size_t a = 0; a < source_.order(); ++a) out[source_.label(a)] = target_.label(image_[a]);
  return out;
}

GroupHom reduction_hom(std::size_t n, std::size_t m) {
  if (m == 0 || n % m != 0) {
    throw Error(ErrorCode::InvalidArgument, "Z" + std::to_string(n) + " -> Z" + std::to_string(m) + " needs m | n");
  }
  LabelMap f;
  for (std::size_t i = 0; i < n; ++i) f[std::to_string(i)] = std::to_string(i % m);
  return GroupHom(cyclic_group(n), cyclic_group(m), f);
}

namespace {

// position[g] = universe index of group element g.
std::vector<std::size_t> align(const FiniteGroup& group, const SVSet& a) {
  if (a.universe().size() != group.order()) {
    throw Error(ErrorCode::UniverseMismatch, "set has " + std::to_string(a.universe().size()) +
                                                 " elements, group has " + std::to_string(group.order()));
  }
  std::vector<std::size_t> position;
  for (const auto& label : group.labels()) {
    auto x = a.universe().find(label);
    if (!x) throw Error(ErrorCode::UniverseMismatch, "group element \"" + label + "\" is missing from the universe");
    position.push_back(*x);
  }
  return position;
}

void require_unparameterized(const SVSet& a) {
  if (!a.is_unparameterized()) {
    throw Error(ErrorCode::ShapeMismatch, "expected an unparameterized set; slice parameterized sets first");
  }
}

SubgroupReport check_slice(const FiniteGroup& g, const SVSet& a, const std::vector<std::size_t>& pos,
                           std::size_t e) {
  const Scale& s = a.scale();
  auto value = [&](std::size_t gi) -> const Element& { return a.at(pos[gi], e); };
  SubgroupReport report;
  if (value(g.identity()) != s.top()) {
    report.passed = false;
    report.failure = "identity-not-top";
    return report;
  }
  for (std::size_t x = 0; x < g.order(); ++x) {
    for (std::size_t y = 0; y < g.order(); ++y) {
      if (!s.leq(s.meet(value(x), value(y)), value(g.multiply(x, g.inverse(y))))) {
        report.passed = false;
        report.failure = "inequality";
        report.x = g.label(x);
        report.y = g.label(y);
        return report;
      }
    }
  }
  return report;
}

}  // namespace

SubgroupReport is_sv_subgroup(const FiniteGroup& group, const SVSet& a) {
  const auto pos = align(group, a);
  for (std::size_t e = 0; e < a.params().size(); ++e) {
    SubgroupReport report = check_slice(group, a, pos, e);
    if (!report.passed) {
      if (!a.is_unparameterized()) report.param = a.params()[e];
      return report;
    }
  }
  return {};
}

DerivedPropertiesReport derived_properties_check(const FiniteGroup& group, const SVSet& a) {
  require_unparameterized(a);
  if (!is_sv_subgroup(group, a).passed) {
    throw Error(ErrorCode::NotASubgroup, "derived properties need an SV-subgroup");
  }
  const auto pos = align(group, a);
  const Scale& s = a.scale();
  auto value = [&](std::size_t gi) -> const Element& { return a.at(pos[gi]); };
  DerivedPropertiesReport report;
  for (std::size_t x = 0; x < group.order(); ++x) {
    if (report.below_identity && !s.leq(value(x), value(group.identity()))) {
      report.below_identity = false;
      report.witness = group.label(x);
    }
    if (report.inverse_symmetric && value(group.inverse(x)) != value(x)) {
      report.inverse_symmetric = false;
      report.witness = group.label(x);
    }
    for (std::size_t y = 0; y < group.order() && report.product_closed; ++y) {
      if (!s.leq(s.meet(value(x), value(y)), value(group.multiply(x, y)))) {
        report.product_closed = false;
        report.witness = group.label(x) + "," + group.label(y);
      }
    }
  }
  return report;
}

bool satisfies_symmetric_form(const FiniteGroup& group, const SVSet& a) {
  require_unparameterized(a);
  const auto pos = align(group, a);
  const Scale& s = a.scale();
  auto value = [&](std::size_t gi) -> const Element& { return a.at(pos[gi]); };
  if (value(group.identity()) != s.top()) return false;
  for (std::size_t x = 0; x < group.order(); ++x) {
    if (value(group.inverse(x)) != value(x)) return false;
    for (std::size_t y = 0; y < group.order(); ++y) {
      if (!s.leq(s.meet(value(x), value(y)), value(group.multiply(x, y)))) return false;
    }
  }
  return true;
}

Subset level_subgroup(const FiniteGroup& group, const SVSet& a, const Element& alpha) {
  require_unparameterized(a);
  const auto pos = align(group, a);
  Subset out;
  for (std::size_t x = 0; x < group.order(); ++x) {
    if (a.scale().leq(alpha, a.at(pos[x]))) out.insert(group.label(x));
  }
  return out;
}

bool is_crisp_subgroup(const FiniteGroup& group, const Subset& subset) {
  if (!subset.count(group.label(group.identity()))) return false;
  for (const auto& xl : subset) {
    const std::size_t x = group.index_of(xl);
    for (const auto& yl : subset) {
      const std::size_t y = group.index_of(yl);
      if (!subset.count(group.label(group.multiply(x, group.inverse(y))))) return false;
    }
  }
  return true;
}

EquivalenceReport level_equivalence_check(const FiniteGroup& group, const SVSet& a) {
  require_unparameterized(a);
  const Scale& s = a.scale();
  std::vector<Element> levels;
  if (s.is_finite()) {
    levels = s.carrier();
  } else {
    std::set<Element> seen;
    auto add = [&](const Element& v) {
      if (seen.insert(v).second) levels.push_back(v);
    };
    add(s.top());
    for (const auto& v : a.values()) add(v);
    for (std::size_t next = 0; next < levels.size(); ++next) {
      for (std::size_t i = 0; i < next; ++i) add(s.meet(levels[i], levels[next]));
    }
  }

  EquivalenceReport report;
  report.sv_subgroup = is_sv_subgroup(group, a).passed;
  for (const auto& alpha : levels) {
    ++report.levels_checked;
    if (!is_crisp_subgroup(group, level_subgroup(group, a, alpha))) {
      report.all_levels_subgroups = false;
      report.failing_level = alpha;
      break;
    }
  }
  return report;
}

SVSet meet_subgroups(const FiniteGroup& group, const std::vector<SVSet>& subgroups) {
  if (subgroups.empty()) throw Error(ErrorCode::InvalidArgument, "meet_subgroups needs at least one set");
  for (std::size_t i = 0; i < subgroups.size(); ++i) {
    require_same_shape(subgroups.front(), subgroups[i]);
    if (!is_sv_subgroup(group, subgroups[i]).passed) {
      throw Error(ErrorCode::NotASubgroup, "input " + std::to_string(i) + " is not an SV-subgroup");
    }
  }
  SVSet result = subgroups.front();
  for (std::size_t i = 1; i < subgroups.size(); ++i) result = sv_intersection(result, subgroups[i]);
  if (!is_sv_subgroup(group, result).passed) {
    throw Error(ErrorCode::Internal, "meet of SV-subgroups failed the subgroup condition");
  }
  return result;
}

SVSet pullback_subgroup(const GroupHom& phi, const SVSet& a) {
  require_unparameterized(a);
  std::vector<std::size_t> pos;
  try {
    pos = align(phi.target(), a);
  } catch (const Error& err) {
    throw Error(ErrorCode::HomMismatch, std::string("set is not over the homomorphism's target: ") + err.what());
  }
  if (!is_sv_subgroup(phi.target(), a).passed) {
    throw Error(ErrorCode::NotASubgroup, "pullback needs an SV-subgroup of the target");
  }
  const FiniteGroup& h = phi.source();
  std::vector<Element> values;
  for (std::size_t x = 0; x < h.order(); ++x) values.push_back(a.at(pos[phi(x)]));
  SVSet result = SVSet::unparameterized(h.universe(), a.scale(), std::move(values));
  if (!is_sv_subgroup(h, result).passed) {
    throw Error(ErrorCode::Internal, "pullback of an SV-subgroup failed the subgroup condition");
  }
  return result;
}

}  // namespace svset
