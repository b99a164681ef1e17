#include "svset/svset.hpp"

#include "svset/error.hpp"

namespace svset {

LabelSet::LabelSet(std::string name, std::vector<std::string> labels)
    : name_(std::move(name)), labels_(std::move(labels)) {
  if (labels_.empty()) throw Error(ErrorCode::InvalidArgument, "label set \"" + name_ + "\" must be nonempty");
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (!index_.emplace(labels_[i], i).second) {
      throw Error(ErrorCode::InvalidArgument, "duplicate label \"" + labels_[i] + "\" in \"" + name_ + "\"");
    }
  }
}

std::optional<std::size_t> LabelSet::find(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

SVSet::SVSet(Universe universe, ParamSet params, Scale scale, std::vector<Element> values)
    : universe_(std::move(universe)), params_(std::move(params)), scale_(std::move(scale)), values_(std::move(values)) {
  if (values_.size() != universe_.size() * params_.size()) {
    throw Error(ErrorCode::NonTotalMap, "expected " + std::to_string(universe_.size() * params_.size()) +
                                              " values, got " + std::to_string(values_.size()));
  }
  for (std::size_t x = 0; x < universe_.size(); ++x) {
    for (std::size_t e = 0; e < params_.size(); ++e) {
      const auto& v = values_[x * params_.size() + e];
      if (!scale_.contains(v)) {
        throw Error(ErrorCode::ElementNotInCarrier, "value " + to_string(v) + " at (" + universe_[x] + "," +
                                                        params_[e] + ") is not in " + scale_.signature());
      }
    }
  }
}

SVSet SVSet::constant(const Universe& universe, const ParamSet& params, const Scale& scale, const Element& value) {
  return SVSet(universe, params, scale, std::vector<Element>(universe.size() * params.size(), value));
}

SVSet SVSet::from_function(const Universe& universe, const ParamSet& params, const Scale& scale,
                           const std::function<Element(std::size_t, std::size_t)>& value_at) {
  std::vector<Element> values;
  values.reserve(universe.size() * params.size());
  for (std::size_t x = 0; x < universe.size(); ++x) {
    for (std::size_t e = 0; e < params.size(); ++e) values.push_back(value_at(x, e));
  }
  return SVSet(universe, params, scale, std::move(values));
}

SVSet SVSet::unparameterized(const Universe& universe, const Scale& scale, std::vector<Element> values) {
  return SVSet(universe, ParamSet::unparameterized(), scale, std::move(values));
}

const Element& SVSet::at(const std::string& x, const std::string& e) const {
  auto xi = universe_.find(x);
  if (!xi) throw Error(ErrorCode::UnknownElement, "\"" + x + "\" is not in universe \"" + universe_.name() + "\"");
  auto ei = params_.find(e);
  if (!ei) throw Error(ErrorCode::UnknownParam, "\"" + e + "\" is not a parameter");
  return at(*xi, *ei);
}

const Element& SVSet::at(const std::string& x) const {
  auto xi = universe_.find(x);
  if (!xi) throw Error(ErrorCode::UnknownElement, "\"" + x + "\" is not in universe \"" + universe_.name() + "\"");
  return at(*xi, 0);
}

bool SVSet::same_shape(const SVSet& other) const {
  return universe_ == other.universe_ && params_ == other.params_ && scale_ == other.scale_;
}

void require_same_shape(const SVSet& a, const SVSet& b) {
  if (!(a.universe() == b.universe())) throw Error(ErrorCode::ShapeMismatch, "universes differ");
  if (!(a.params() == b.params())) throw Error(ErrorCode::ShapeMismatch, "parameter sets differ");
  if (!(a.scale() == b.scale())) {
    throw Error(ErrorCode::ShapeMismatch, "scales differ: " + a.scale().signature() + " vs " + b.scale().signature());
  }
}

namespace {

template <typename Op>
SVSet pointwise(const SVSet& a, const SVSet& b, Op op) {
  require_same_shape(a, b);
  std::vector<Element> out;
  out.reserve(a.values().size());
  for (std::size_t i = 0; i < a.values().size(); ++i) out.push_back(op(a.values()[i], b.values()[i]));
  return SVSet(a.universe(), a.params(), a.scale(), std::move(out));
}

}  // namespace

SVSet sv_union(const SVSet& a, const SVSet& b) {
  return pointwise(a, b, [&](const Element& x, const Element& y) { return a.scale().join(x, y); });
}

SVSet sv_intersection(const SVSet& a, const SVSet& b) {
  return pointwise(a, b, [&](const Element& x, const Element& y) { return a.scale().meet(x, y); });
}

SVSet sv_complement(const SVSet& a) {
  std::vector<Element> out;
  out.reserve(a.values().size());
  for (const auto& v : a.values()) out.push_back(a.scale().neg(v));
  return SVSet(a.universe(), a.params(), a.scale(), std::move(out));
}

bool sv_subset(const SVSet& a, const SVSet& b) {
  require_same_shape(a, b);
  for (std::size_t i = 0; i < a.values().size(); ++i) {
    if (!a.scale().leq(a.values()[i], b.values()[i])) return false;
  }
  return true;
}

SVSet slice(const SVSet& a, const std::string& param) {
  auto e = a.params().find(param);
  if (!e) throw Error(ErrorCode::UnknownParam, "\"" + param + "\" is not a parameter of this set");
  std::vector<Element> out;
  out.reserve(a.universe().size());
  for (std::size_t x = 0; x < a.universe().size(); ++x) out.push_back(a.at(x, *e));
  return SVSet::unparameterized(a.universe(), a.scale(), std::move(out));
}

SVSet transport(const ScaleHom& hom, const SVSet& a) {
  if (!(a.scale() == hom.source)) {
    throw Error(ErrorCode::ScaleMismatch,
                "set is over " + a.scale().signature() + " but the map starts at " + hom.source.signature());
  }
  std::vector<Element> out;
  out.reserve(a.values().size());
  for (const auto& v : a.values()) out.push_back(hom(v));
  return SVSet(a.universe(), a.params(), hom.target, std::move(out));
}

namespace {

std::vector<std::size_t> resolve_map(const LabelMap& f, const LabelSet& domain, const LabelSet& codomain,
                                     std::string_view what) {
  std::vector<std::size_t> image;
  image.reserve(domain.size());
  for (const auto& label : domain.labels()) {
    auto it = f.find(label);
    if (it == f.end()) {
      throw Error(ErrorCode::NonTotalMap, std::string(what) + " is not defined on \"" + label + "\"");
    }
    auto target = codomain.find(it->second);
    if (!target) {
      throw Error(ErrorCode::TargetMismatch,
                  std::string(what) + " sends \"" + label + "\" to \"" + it->second + "\", which is not in its target");
    }
    image.push_back(*target);
  }
  return image;
}

}  // namespace

SVSet pullback(const LabelMap& f, const Universe& new_universe, const LabelMap& g, const ParamSet& new_params,
               const SVSet& a) {
  const auto fx = resolve_map(f, new_universe, a.universe(), "f");
  const auto ge = resolve_map(g, new_params, a.params(), "g");
  return SVSet::from_function(new_universe, new_params, a.scale(),
                              [&](std::size_t x, std::size_t e) { return a.at(fx[x], ge[e]); });
}

SVSet pushforward(const LabelMap& f, const Universe& target, const SVSet& a) {
  const auto fx = resolve_map(f, a.universe(), target, "f");
  const Scale& s = a.scale();
  std::vector<Element> out(target.size() * a.params().size(), s.bottom());
  for (std::size_t x = 0; x < a.universe().size(); ++x) {
    for (std::size_t e = 0; e < a.params().size(); ++e) {
      auto& slot = out[fx[x] * a.params().size() + e];
      slot = s.join(slot, a.at(x, e));
    }
  }
  return SVSet(target, a.params(), s, std::move(out));
}

}  // namespace svset
