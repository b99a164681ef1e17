#include <algorithm>
#include <unordered_map>

#include "svset/detail/scale_impl.hpp"
#include "svset/error.hpp"

namespace svset::detail {

namespace {

class FiniteLattice final : public ScaleImpl {
 public:
  FiniteLattice(FiniteLatticeSpec spec, ScaleKind kind, bool verify, M3Negation m3)
      : spec_(std::move(spec)), kind_(kind), m3_(m3) {
    index_names();
    close_order();
    build_tables();
    check_bounds();
    if (verify) check_negation();
  }

  const FiniteLatticeSpec& spec() const { return spec_; }
  M3Negation m3() const { return m3_; }

  ScaleKind kind() const override { return kind_; }

  std::string signature() const override {
    if (kind_ == ScaleKind::M3Diamond) return m3_ == M3Negation::Swap ? "m3-diamond(swap)" : "m3-diamond(fix)";
    std::string out = "custom{";
    for (std::size_t i = 0; i < n_; ++i) out += (i ? "," : "") + spec_.elements[i];
    out += ";";
    for (std::size_t i = 0; i < spec_.covers.size(); ++i) {
      out += (i ? "," : "") + spec_.covers[i].first + "<" + spec_.covers[i].second;
    }
    out += ";";
    bool first = true;
    for (const auto& [k, v] : spec_.neg) {
      out += (first ? "" : ",") + k + "->" + v;
      first = false;
    }
    return out + ";" + spec_.bottom + ";" + spec_.top + "}";
  }

  bool contains(const Element& a) const override { return a.is_atom() && index_.count(a.atom_name()) > 0; }
  Element join(const Element& a, const Element& b) const override { return at(join_[idx(a) * n_ + idx(b)]); }
  Element meet(const Element& a, const Element& b) const override { return at(meet_[idx(a) * n_ + idx(b)]); }
  Element neg(const Element& a) const override { return at(neg_[idx(a)]); }
  Element bottom() const override { return Element::atom(spec_.bottom); }
  Element top() const override { return Element::atom(spec_.top); }

  std::optional<std::vector<Element>> carrier() const override {
    std::vector<Element> out;
    for (const auto& name : spec_.elements) out.push_back(Element::atom(name));
    return out;
  }

  bool is_chain() const override {
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        if (!leq_[i * n_ + j] && !leq_[j * n_ + i]) return false;
      }
    }
    return true;
  }

  Element sample(std::mt19937_64& rng) const override { return at(uniform_index(rng, n_)); }

 private:
  [[noreturn]] static void malformed(const std::string& msg) { throw Error(ErrorCode::InvalidArgument, msg); }

  std::size_t lookup(const std::string& name, std::string_view role) const {
    auto it = index_.find(name);
    if (it == index_.end()) malformed(std::string(role) + " references unknown element \"" + name + "\"");
    return it->second;
  }

  void index_names() {
    n_ = spec_.elements.size();
    if (n_ == 0) malformed("finite lattice needs at least one element");
    for (std::size_t i = 0; i < n_; ++i) {
      if (!index_.emplace(spec_.elements[i], i).second) {
        malformed("duplicate element name \"" + spec_.elements[i] + "\"");
      }
    }
    bottom_ = lookup(spec_.bottom, "bottom");
    top_ = lookup(spec_.top, "top");
    neg_.assign(n_, 0);
    for (std::size_t i = 0; i < n_; ++i) {
      auto it = spec_.neg.find(spec_.elements[i]);
      if (it == spec_.neg.end()) malformed("neg is not defined on \"" + spec_.elements[i] + "\"");
      neg_[i] = lookup(it->second, "neg");
    }
    for (const auto& [k, v] : spec_.neg) lookup(k, "neg");
  }

  void close_order() {
    leq_.assign(n_ * n_, false);
    for (std::size_t i = 0; i < n_; ++i) leq_[i * n_ + i] = true;
    for (const auto& [lo, hi] : spec_.covers) leq_[lookup(lo, "cover") * n_ + lookup(hi, "cover")] = true;
    for (std::size_t k = 0; k < n_; ++k) {
      for (std::size_t i = 0; i < n_; ++i) {
        if (!leq_[i * n_ + k]) continue;
        for (std::size_t j = 0; j < n_; ++j) {
          if (leq_[k * n_ + j]) leq_[i * n_ + j] = true;
        }
      }
    }
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i + 1; j < n_; ++j) {
        if (leq_[i * n_ + j] && leq_[j * n_ + i]) {
          throw Error(ErrorCode::NotALattice, "covers form a cycle through \"" + spec_.elements[i] + "\" and \"" +
                                                  spec_.elements[j] + "\"");
        }
      }
    }
  }

  // Least element of the set of common upper (or lower) bounds.
  void build_tables() {
    join_.assign(n_ * n_, 0);
    meet_.assign(n_ * n_, 0);
    for (std::size_t a = 0; a < n_; ++a) {
      for (std::size_t b = 0; b < n_; ++b) {
        join_[a * n_ + b] = extremum(a, b, true);
        meet_[a * n_ + b] = extremum(a, b, false);
      }
    }
  }

  std::size_t extremum(std::size_t a, std::size_t b, bool upper) const {
    auto below = [&](std::size_t x, std::size_t y) { return leq_[x * n_ + y]; };
    std::vector<std::size_t> bounds;
    for (std::size_t c = 0; c < n_; ++c) {
      if (upper ? (below(a, c) && below(b, c)) : (below(c, a) && below(c, b))) bounds.push_back(c);
    }
    for (std::size_t c : bounds) {
      bool best = std::all_of(bounds.begin(), bounds.end(),
                              [&](std::size_t d) { return upper ? below(c, d) : below(d, c); });
      if (best) return c;
    }
    throw Error(ErrorCode::NotALattice, std::string("no unique ") + (upper ? "join" : "meet") + " for \"" +
                                            spec_.elements[a] + "\" and \"" + spec_.elements[b] + "\"");
  }

  void check_bounds() const {
    for (std::size_t i = 0; i < n_; ++i) {
      if (!leq_[bottom_ * n_ + i]) {
        throw Error(ErrorCode::BoundsMismatch,
                    "declared bottom \"" + spec_.bottom + "\" is not below \"" + spec_.elements[i] + "\"");
      }
      if (!leq_[i * n_ + top_]) {
        throw Error(ErrorCode::BoundsMismatch,
                    "declared top \"" + spec_.top + "\" is not above \"" + spec_.elements[i] + "\"");
      }
    }
  }

  void check_negation() const {
    const auto& name = spec_.elements;
    for (std::size_t a = 0; a < n_; ++a) {
      if (neg_[neg_[a]] != a) {
        throw Error(ErrorCode::BadInvolution, "neg(neg(" + name[a] + ")) = " + name[neg_[neg_[a]]]);
      }
    }
    for (std::size_t a = 0; a < n_; ++a) {
      for (std::size_t b = 0; b < n_; ++b) {
        if (neg_[join_[a * n_ + b]] != meet_[neg_[a] * n_ + neg_[b]]) {
          throw Error(ErrorCode::DeMorganViolation, "neg(" + name[a] + " v " + name[b] + ") != neg(" + name[a] +
                                                        ") ^ neg(" + name[b] + ")");
        }
        if (neg_[meet_[a * n_ + b]] != join_[neg_[a] * n_ + neg_[b]]) {
          throw Error(ErrorCode::DeMorganViolation, "neg(" + name[a] + " ^ " + name[b] + ") != neg(" + name[a] +
                                                        ") v neg(" + name[b] + ")");
        }
      }
    }
    for (std::size_t a = 0; a < n_; ++a) {
      for (std::size_t b = 0; b < n_; ++b) {
        if (leq_[a * n_ + b] && !leq_[neg_[b] * n_ + neg_[a]]) {
          throw Error(ErrorCode::BadInvolution, "neg is not antitone on " + name[a] + " <= " + name[b]);
        }
      }
    }
  }

  std::size_t idx(const Element& a) const { return index_.at(a.atom_name()); }
  Element at(std::size_t i) const { return Element::atom(spec_.elements[i]); }

  FiniteLatticeSpec spec_;
  ScaleKind kind_;
  M3Negation m3_;
  std::size_t n_ = 0;
  std::size_t bottom_ = 0;
  std::size_t top_ = 0;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<bool> leq_;
  std::vector<std::size_t> join_;
  std::vector<std::size_t> meet_;
  std::vector<std::size_t> neg_;
};

}  // namespace

std::shared_ptr<const ScaleImpl> make_finite_lattice(const FiniteLatticeSpec& spec, ScaleKind kind, bool verify,
                                                     M3Negation m3) {
  return std::make_shared<FiniteLattice>(spec, kind, verify, m3);
}

const FiniteLatticeSpec& finite_lattice_spec(const ScaleImpl& impl) {
  return dynamic_cast<const FiniteLattice&>(impl).spec();
}

M3Negation finite_lattice_m3_negation(const ScaleImpl& impl) { return dynamic_cast<const FiniteLattice&>(impl).m3(); }

}  // namespace svset::detail
