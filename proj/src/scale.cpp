#include "svset/scale.hpp"

#include <algorithm>

#include "svset/detail/scale_impl.hpp"
#include "svset/error.hpp"

namespace svset {

using detail::ScaleImpl;
using detail::uniform_index;

std::string_view to_string(ScaleKind kind) {
  switch (kind) {
    case ScaleKind::Bool: return "bool";
    case ScaleKind::Chain: return "chain";
    case ScaleKind::UnitRational: return "unit-rational";
    case ScaleKind::IfsDelta: return "ifs-delta";
    case ScaleKind::RoughChain: return "rough-chain";
    case ScaleKind::M3Diamond: return "m3-diamond";
    case ScaleKind::Product: return "product";
    case ScaleKind::Interval: return "interval";
    case ScaleKind::FunctionGrid: return "function-grid";
    case ScaleKind::CustomFinite: return "custom";
  }
  return "unknown";
}

namespace {

Rational sample_unit(std::mt19937_64& rng) {
  static constexpr std::int64_t kDenominators[] = {1, 2, 3, 4, 5, 6, 8, 10, 12, 20, 100};
  const std::int64_t den = kDenominators[uniform_index(rng, std::size(kDenominators))];
  const auto num = static_cast<std::int64_t>(uniform_index(rng, static_cast<std::size_t>(den) + 1));
  return Rational(num, den);
}

bool is_unit_rational(const Element& a) { return a.is_rational() && in_unit_interval(a.as_rational()); }

class BoolScale final : public ScaleImpl {
 public:
  ScaleKind kind() const override { return ScaleKind::Bool; }
  std::string signature() const override { return "bool"; }
  bool contains(const Element& a) const override { return a.is_bool(); }
  Element join(const Element& a, const Element& b) const override {
    return Element::boolean(a.as_bool() || b.as_bool());
  }
  Element meet(const Element& a, const Element& b) const override {
    return Element::boolean(a.as_bool() && b.as_bool());
  }
  Element neg(const Element& a) const override { return Element::boolean(!a.as_bool()); }
  bool leq(const Element& a, const Element& b) const override { return !a.as_bool() || b.as_bool(); }
  Element bottom() const override { return Element::boolean(false); }
  Element top() const override { return Element::boolean(true); }
  std::optional<std::vector<Element>> carrier() const override {
    return std::vector<Element>{Element::boolean(false), Element::boolean(true)};
  }
  bool is_chain() const override { return true; }
  Element sample(std::mt19937_64& rng) const override { return Element::boolean(rng() & 1U); }
};

class ChainScale final : public ScaleImpl {
 public:
  explicit ChainScale(std::int64_t k) : k_(k) {}

  std::int64_t bound() const { return k_; }

  ScaleKind kind() const override { return ScaleKind::Chain; }
  std::string signature() const override { return "chain(" + std::to_string(k_) + ")"; }
  bool contains(const Element& a) const override {
    return a.is_integer() && a.as_integer() >= 0 && a.as_integer() <= k_;
  }
  Element join(const Element& a, const Element& b) const override {
    return Element::integer(std::max(a.as_integer(), b.as_integer()));
  }
  Element meet(const Element& a, const Element& b) const override {
    return Element::integer(std::min(a.as_integer(), b.as_integer()));
  }
  Element neg(const Element& a) const override { return Element::integer(k_ - a.as_integer()); }
  bool leq(const Element& a, const Element& b) const override { return a.as_integer() <= b.as_integer(); }
  Element bottom() const override { return Element::integer(0); }
  Element top() const override { return Element::integer(k_); }
  std::optional<std::vector<Element>> carrier() const override {
    std::vector<Element> out;
    for (std::int64_t n = 0; n <= k_; ++n) out.push_back(Element::integer(n));
    return out;
  }
  bool is_chain() const override { return true; }
  Element sample(std::mt19937_64& rng) const override {
    return Element::integer(static_cast<std::int64_t>(uniform_index(rng, static_cast<std::size_t>(k_) + 1)));
  }

 private:
  std::int64_t k_;
};

class UnitScale final : public ScaleImpl {
 public:
  ScaleKind kind() const override { return ScaleKind::UnitRational; }
  std::string signature() const override { return "unit-rational"; }
  bool contains(const Element& a) const override { return is_unit_rational(a); }
  Element join(const Element& a, const Element& b) const override {
    return a.as_rational() < b.as_rational() ? b : a;
  }
  Element meet(const Element& a, const Element& b) const override {
    return b.as_rational() < a.as_rational() ? b : a;
  }
  Element neg(const Element& a) const override { return Element::rational(Rational(1) - a.as_rational()); }
  bool leq(const Element& a, const Element& b) const override { return a.as_rational() <= b.as_rational(); }
  Element bottom() const override { return Element::rational(Rational(0)); }
  Element top() const override { return Element::rational(Rational(1)); }
  bool is_chain() const override { return true; }
  Element sample(std::mt19937_64& rng) const override { return Element::rational(sample_unit(rng)); }
};

class IfsScale final : public ScaleImpl {
 public:
  ScaleKind kind() const override { return ScaleKind::IfsDelta; }
  std::string signature() const override { return "ifs-delta"; }
  bool contains(const Element& a) const override {
    if (!a.is_tuple() || a.items().size() != 2) return false;
    const auto& it = a.items();
    if (!is_unit_rational(it[0]) || !is_unit_rational(it[1])) return false;
    return it[0].as_rational() + it[1].as_rational() <= 1;
  }
  Element join(const Element& a, const Element& b) const override {
    return make(std::max(mu(a), mu(b)), std::min(nu(a), nu(b)));
  }
  Element meet(const Element& a, const Element& b) const override {
    return make(std::min(mu(a), mu(b)), std::max(nu(a), nu(b)));
  }
  Element neg(const Element& a) const override { return make(nu(a), mu(a)); }
  bool leq(const Element& a, const Element& b) const override { return mu(a) <= mu(b) && nu(a) >= nu(b); }
  Element bottom() const override { return make(Rational(0), Rational(1)); }
  Element top() const override { return make(Rational(1), Rational(0)); }
  bool is_chain() const override { return false; }
  Element sample(std::mt19937_64& rng) const override {
    Rational a = sample_unit(rng);
    static constexpr std::int64_t kDenominators[] = {1, 2, 4, 5, 10, 20};
    const std::int64_t den = kDenominators[uniform_index(rng, std::size(kDenominators))];
    Rational room = (Rational(1) - a) * den;
    Integer limit = boost::multiprecision::numerator(room) / boost::multiprecision::denominator(room);
    const auto num = static_cast<std::int64_t>(uniform_index(rng, limit.convert_to<std::size_t>() + 1));
    return make(a, Rational(num, den));
  }

 private:
  static const Rational& mu(const Element& a) { return a.items()[0].as_rational(); }
  static const Rational& nu(const Element& a) { return a.items()[1].as_rational(); }
  static Element make(Rational a, Rational b) {
    return Element::pair(Element::rational(std::move(a)), Element::rational(std::move(b)));
  }
};

class RoughScale final : public ScaleImpl {
 public:
  ScaleKind kind() const override { return ScaleKind::RoughChain; }
  std::string signature() const override { return "rough-chain"; }
  bool contains(const Element& a) const override { return rank(a) >= 0; }
  Element join(const Element& a, const Element& b) const override { return rank(a) >= rank(b) ? a : b; }
  Element meet(const Element& a, const Element& b) const override { return rank(a) <= rank(b) ? a : b; }
  Element neg(const Element& a) const override { return of_rank(2 - rank(a)); }
  bool leq(const Element& a, const Element& b) const override { return rank(a) <= rank(b); }
  Element bottom() const override { return of_rank(0); }
  Element top() const override { return of_rank(2); }
  std::optional<std::vector<Element>> carrier() const override {
    return std::vector<Element>{of_rank(0), of_rank(1), of_rank(2)};
  }
  bool is_chain() const override { return true; }
  Element sample(std::mt19937_64& rng) const override { return of_rank(static_cast<int>(uniform_index(rng, 3))); }

  static Element of_rank(int r) {
    const std::int64_t lower = r == 2 ? 1 : 0;
    const std::int64_t upper = r >= 1 ? 1 : 0;
    return Element::pair(Element::integer(lower), Element::integer(upper));
  }

  // -1 when not a carrier element.
  static int rank(const Element& a) {
    if (!a.is_tuple() || a.items().size() != 2) return -1;
    const auto& it = a.items();
    if (!it[0].is_integer() || !it[1].is_integer()) return -1;
    const auto l = it[0].as_integer();
    const auto u = it[1].as_integer();
    if (l == 0 && u == 0) return 0;
    if (l == 0 && u == 1) return 1;
    if (l == 1 && u == 1) return 2;
    return -1;
  }
};

class ProductScale final : public ScaleImpl {
 public:
  ProductScale(Scale left, Scale right) : left_(std::move(left)), right_(std::move(right)) {}

  const Scale& left() const { return left_; }
  const Scale& right() const { return right_; }

  ScaleKind kind() const override { return ScaleKind::Product; }
  std::string signature() const override {
    return "product(" + left_.signature() + "," + right_.signature() + ")";
  }
  bool contains(const Element& a) const override {
    return a.is_tuple() && a.items().size() == 2 && L().contains(a.items()[0]) && R().contains(a.items()[1]);
  }
  Element join(const Element& a, const Element& b) const override {
    return Element::pair(L().join(a.items()[0], b.items()[0]), R().join(a.items()[1], b.items()[1]));
  }
  Element meet(const Element& a, const Element& b) const override {
    return Element::pair(L().meet(a.items()[0], b.items()[0]), R().meet(a.items()[1], b.items()[1]));
  }
  Element neg(const Element& a) const override {
    return Element::pair(L().neg(a.items()[0]), R().neg(a.items()[1]));
  }
  bool leq(const Element& a, const Element& b) const override {
    return L().leq(a.items()[0], b.items()[0]) && R().leq(a.items()[1], b.items()[1]);
  }
  Element bottom() const override { return Element::pair(L().bottom(), R().bottom()); }
  Element top() const override { return Element::pair(L().top(), R().top()); }
  std::optional<std::vector<Element>> carrier() const override {
    auto lc = L().carrier();
    auto rc = R().carrier();
    if (!lc || !rc) return std::nullopt;
    std::vector<Element> out;
    for (const auto& a : *lc) {
      for (const auto& b : *rc) out.push_back(Element::pair(a, b));
    }
    return out;
  }
  bool is_chain() const override {
    const bool left_trivial = L().bottom() == L().top();
    const bool right_trivial = R().bottom() == R().top();
    return (L().is_chain() && right_trivial) || (R().is_chain() && left_trivial);
  }
  Element sample(std::mt19937_64& rng) const override {
    Element a = L().sample(rng);
    Element b = R().sample(rng);
    return Element::pair(std::move(a), std::move(b));
  }

 private:
  const ScaleImpl& L() const { return left_.impl(); }
  const ScaleImpl& R() const { return right_.impl(); }
  Scale left_;
  Scale right_;
};

class IntervalScale final : public ScaleImpl {
 public:
  explicit IntervalScale(Scale base) : base_(std::move(base)) {}

  const Scale& base() const { return base_; }

  ScaleKind kind() const override { return ScaleKind::Interval; }
  std::string signature() const override { return "interval(" + base_.signature() + ")"; }
  bool contains(const Element& a) const override {
    return a.is_tuple() && a.items().size() == 2 && B().contains(a.items()[0]) && B().contains(a.items()[1]) &&
           B().leq(a.items()[0], a.items()[1]);
  }
  Element join(const Element& a, const Element& b) const override {
    return Element::pair(B().join(lo(a), lo(b)), B().join(hi(a), hi(b)));
  }
  Element meet(const Element& a, const Element& b) const override {
    return Element::pair(B().meet(lo(a), lo(b)), B().meet(hi(a), hi(b)));
  }
  Element neg(const Element& a) const override { return Element::pair(B().neg(hi(a)), B().neg(lo(a))); }
  bool leq(const Element& a, const Element& b) const override {
    return B().leq(lo(a), lo(b)) && B().leq(hi(a), hi(b));
  }
  Element bottom() const override { return Element::pair(B().bottom(), B().bottom()); }
  Element top() const override { return Element::pair(B().top(), B().top()); }
  std::optional<std::vector<Element>> carrier() const override {
    auto bc = B().carrier();
    if (!bc) return std::nullopt;
    std::vector<Element> out;
    for (const auto& l : *bc) {
      for (const auto& u : *bc) {
        if (B().leq(l, u)) out.push_back(Element::pair(l, u));
      }
    }
    return out;
  }
  bool is_chain() const override {
    // I(V) is a chain iff V is a chain with at most two elements.
    if (!B().is_chain()) return false;
    auto bc = B().carrier();
    return bc && bc->size() <= 2;
  }
  Element sample(std::mt19937_64& rng) const override {
    Element x = B().sample(rng);
    Element y = B().sample(rng);
    return Element::pair(B().meet(x, y), B().join(x, y));
  }

 private:
  static const Element& lo(const Element& a) { return a.items()[0]; }
  static const Element& hi(const Element& a) { return a.items()[1]; }
  const ScaleImpl& B() const { return base_.impl(); }
  Scale base_;
};

class FunctionScale final : public ScaleImpl {
 public:
  explicit FunctionScale(std::vector<Rational> grid) : grid_(std::move(grid)) {}

  const std::vector<Rational>& grid() const { return grid_; }

  ScaleKind kind() const override { return ScaleKind::FunctionGrid; }
  std::string signature() const override {
    std::string out = "function-grid(";
    for (std::size_t i = 0; i < grid_.size(); ++i) {
      if (i) out += ",";
      out += format_fraction(grid_[i]);
    }
    return out + ")";
  }
  bool contains(const Element& a) const override {
    if (!a.is_tuple() || a.items().size() != grid_.size()) return false;
    return std::all_of(a.items().begin(), a.items().end(), is_unit_rational);
  }
  Element join(const Element& a, const Element& b) const override {
    return pointwise(a, b, [](const Rational& x, const Rational& y) { return std::max(x, y); });
  }
  Element meet(const Element& a, const Element& b) const override {
    return pointwise(a, b, [](const Rational& x, const Rational& y) { return std::min(x, y); });
  }
  Element neg(const Element& a) const override {
    std::vector<Element> out;
    out.reserve(grid_.size());
    for (const auto& v : a.items()) out.push_back(Element::rational(Rational(1) - v.as_rational()));
    return Element::tuple(std::move(out));
  }
  bool leq(const Element& a, const Element& b) const override {
    for (std::size_t i = 0; i < grid_.size(); ++i) {
      if (a.items()[i].as_rational() > b.items()[i].as_rational()) return false;
    }
    return true;
  }
  Element bottom() const override { return constant(Rational(0)); }
  Element top() const override { return constant(Rational(1)); }
  bool is_chain() const override { return grid_.size() == 1; }
  Element sample(std::mt19937_64& rng) const override {
    std::vector<Element> out;
    for (std::size_t i = 0; i < grid_.size(); ++i) out.push_back(Element::rational(sample_unit(rng)));
    return Element::tuple(std::move(out));
  }

 private:
  template <typename Op>
  static Element pointwise(const Element& a, const Element& b, Op op) {
    std::vector<Element> out;
    out.reserve(a.items().size());
    for (std::size_t i = 0; i < a.items().size(); ++i) {
      out.push_back(Element::rational(op(a.items()[i].as_rational(), b.items()[i].as_rational())));
    }
    return Element::tuple(std::move(out));
  }
  Element constant(const Rational& q) const {
    return Element::tuple(std::vector<Element>(grid_.size(), Element::rational(q)));
  }
  std::vector<Rational> grid_;
};

[[noreturn]] void wrong_kind(const Scale& s, std::string_view what) {
  throw Error(ErrorCode::InvalidArgument, std::string(what) + " is not defined for scale " + s.signature());
}

}  // namespace

Scale::Scale(std::shared_ptr<const detail::ScaleImpl> impl) : impl_(std::move(impl)) {}

ScaleKind Scale::kind() const { return impl_->kind(); }
std::string Scale::signature() const { return impl_->signature(); }
bool Scale::contains(const Element& a) const { return impl_->contains(a); }

void Scale::require(const Element& a) const {
  if (!impl_->contains(a)) {
    throw Error(ErrorCode::ElementNotInCarrier, to_string(a) + " is not an element of " + signature());
  }
}

Element Scale::join(const Element& a, const Element& b) const {
  require(a);
  require(b);
  return impl_->join(a, b);
}

Element Scale::meet(const Element& a, const Element& b) const {
  require(a);
  require(b);
  return impl_->meet(a, b);
}

Element Scale::neg(const Element& a) const {
  require(a);
  return impl_->neg(a);
}

bool Scale::leq(const Element& a, const Element& b) const {
  require(a);
  require(b);
  return impl_->leq(a, b);
}

Element Scale::bottom() const { return impl_->bottom(); }
Element Scale::top() const { return impl_->top(); }
bool Scale::is_finite() const { return impl_->carrier().has_value(); }

std::vector<Element> Scale::carrier() const {
  auto c = impl_->carrier();
  if (!c) throw Error(ErrorCode::InfiniteCarrierExhaustive, signature() + " has an infinite carrier");
  return std::move(*c);
}

bool Scale::is_chain() const { return impl_->is_chain(); }
Element Scale::sample(std::mt19937_64& rng) const { return impl_->sample(rng); }

std::int64_t Scale::chain_bound() const {
  if (auto* c = dynamic_cast<const ChainScale*>(impl_.get())) return c->bound();
  wrong_kind(*this, "chain_bound");
}

const std::vector<Rational>& Scale::grid() const {
  if (auto* f = dynamic_cast<const FunctionScale*>(impl_.get())) return f->grid();
  wrong_kind(*this, "grid");
}

std::vector<Scale> Scale::components() const {
  if (auto* p = dynamic_cast<const ProductScale*>(impl_.get())) return {p->left(), p->right()};
  if (auto* i = dynamic_cast<const IntervalScale*>(impl_.get())) return {i->base()};
  wrong_kind(*this, "components");
}

const FiniteLatticeSpec& Scale::finite_spec() const {
  if (kind() != ScaleKind::CustomFinite && kind() != ScaleKind::M3Diamond) wrong_kind(*this, "finite_spec");
  return detail::finite_lattice_spec(*impl_);
}

M3Negation Scale::m3_negation() const {
  if (kind() != ScaleKind::M3Diamond) wrong_kind(*this, "m3_negation");
  return detail::finite_lattice_m3_negation(*impl_);
}

Scale bool_scale() {
  static const Scale s(std::make_shared<BoolScale>());
  return s;
}

Scale chain_scale(std::int64_t k) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "chain bound must be >= 1, got " + std::to_string(k));
  return Scale(std::make_shared<ChainScale>(k));
}

Scale unit_scale() {
  static const Scale s(std::make_shared<UnitScale>());
  return s;
}

Scale ifs_scale() {
  static const Scale s(std::make_shared<IfsScale>());
  return s;
}

Scale rough_scale() {
  static const Scale s(std::make_shared<RoughScale>());
  return s;
}

Scale m3_scale(M3Negation negation) {
  FiniteLatticeSpec spec;
  spec.elements = {"0", "p", "q", "1"};
  spec.covers = {{"0", "p"}, {"0", "q"}, {"p", "1"}, {"q", "1"}};
  spec.bottom = "0";
  spec.top = "1";
  spec.neg = {{"0", "1"}, {"1", "0"}};
  if (negation == M3Negation::Swap) {
    spec.neg["p"] = "q";
    spec.neg["q"] = "p";
  } else {
    spec.neg["p"] = "p";
    spec.neg["q"] = "q";
  }
  return Scale(detail::make_finite_lattice(spec, ScaleKind::M3Diamond, true, negation));
}

Scale product_scale(const Scale& left, const Scale& right) {
  return Scale(std::make_shared<ProductScale>(left, right));
}

Scale interval_scale(const Scale& base) { return Scale(std::make_shared<IntervalScale>(base)); }

Scale function_scale(std::vector<Rational> grid) {
  if (grid.empty()) throw Error(ErrorCode::BadGrid, "grid must be nonempty");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!in_unit_interval(grid[i])) {
      throw Error(ErrorCode::BadGrid, "grid point " + to_string(grid[i]) + " lies outside [0,1]");
    }
    if (i > 0 && !(grid[i - 1] < grid[i])) {
      throw Error(ErrorCode::BadGrid, "grid must be strictly increasing at index " + std::to_string(i));
    }
  }
  return Scale(std::make_shared<FunctionScale>(std::move(grid)));
}

Scale build_finite_scale(const FiniteLatticeSpec& spec) {
  return Scale(detail::make_finite_lattice(spec, ScaleKind::CustomFinite, true));
}

Scale build_finite_scale_unverified(const FiniteLatticeSpec& spec) {
  return Scale(detail::make_finite_lattice(spec, ScaleKind::CustomFinite, false));
}

Element join_all(const Scale& scale, std::span<const Element> values) {
  Element acc = scale.bottom();
  for (const auto& v : values) acc = scale.join(acc, v);
  return acc;
}

Element meet_all(const Scale& scale, std::span<const Element> values) {
  Element acc = scale.top();
  for (const auto& v : values) acc = scale.meet(acc, v);
  return acc;
}

}  // namespace svset
