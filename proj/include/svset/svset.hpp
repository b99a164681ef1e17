#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "svset/scale.hpp"

namespace svset {

/// A finite, ordered set of unique labels.
class LabelSet {
 public:
  LabelSet(std::string name, std::vector<std::string> labels);

  const std::string& name() const { return name_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t size() const { return labels_.size(); }
  const std::string& operator[](std::size_t i) const { return labels_[i]; }
  bool contains(const std::string& label) const { return index_.count(label) > 0; }
  std::optional<std::size_t> find(const std::string& label) const;

  /// Label order matters; the display name does not.
  friend bool operator==(const LabelSet& a, const LabelSet& b) { return a.labels_ == b.labels_; }

 private:
  std::string name_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> index_;
};

struct Universe : LabelSet {
  using LabelSet::LabelSet;
  explicit Universe(std::vector<std::string> labels) : LabelSet("U", std::move(labels)) {}
};

struct ParamSet : LabelSet {
  using LabelSet::LabelSet;
  explicit ParamSet(std::vector<std::string> labels) : LabelSet("E", std::move(labels)) {}
  /// The singleton {*} used by unparameterized sets.
  static ParamSet unparameterized() { return ParamSet(std::vector<std::string>{"*"}); }
};

/// Crisp subset of a universe, by label.
using Subset = std::set<std::string>;
/// Total function between label sets, by label.
using LabelMap = std::map<std::string, std::string>;

/// A total map U x E -> scale, stored densely in (element, param) order.
class SVSet {
 public:
  /// `values` is row-major: values[x * |E| + e]. Every value is checked
  /// against the scale's carrier.
  SVSet(Universe universe, ParamSet params, Scale scale, std::vector<Element> values);

  static SVSet constant(const Universe& universe, const ParamSet& params, const Scale& scale, const Element& value);
  static SVSet from_function(const Universe& universe, const ParamSet& params, const Scale& scale,
                             const std::function<Element(std::size_t, std::size_t)>& value_at);
  /// Unparameterized set from one value per universe element.
  static SVSet unparameterized(const Universe& universe, const Scale& scale, std::vector<Element> values);

  const Universe& universe() const { return universe_; }
  const ParamSet& params() const { return params_; }
  const Scale& scale() const { return scale_; }
  const std::vector<Element>& values() const { return values_; }

  bool is_unparameterized() const { return params_.size() == 1; }

  const Element& at(std::size_t x, std::size_t e) const { return values_[x * params_.size() + e]; }
  const Element& at(const std::string& x, const std::string& e) const;
  /// Value of an unparameterized set at x.
  const Element& at(std::size_t x) const { return at(x, 0); }
  const Element& at(const std::string& x) const;

  bool same_shape(const SVSet& other) const;
  friend bool operator==(const SVSet& a, const SVSet& b) { return a.same_shape(b) && a.values_ == b.values_; }

 private:
  Universe universe_;
  ParamSet params_;
  Scale scale_;
  std::vector<Element> values_;
};

/// Throws ShapeMismatch unless both sets share universe, params and scale.
void require_same_shape(const SVSet& a, const SVSet& b);

SVSet sv_union(const SVSet& a, const SVSet& b);
SVSet sv_intersection(const SVSet& a, const SVSet& b);
SVSet sv_complement(const SVSet& a);
bool sv_subset(const SVSet& a, const SVSet& b);

/// Unparameterized set x -> A(x, e). Throws UnknownParam.
SVSet slice(const SVSet& a, const std::string& param);

/// (h_* A)(x,e) = h(A(x,e)). Throws ScaleMismatch if A is not over h.source.
SVSet transport(const ScaleHom& hom, const SVSet& a);

/// ((f,g)^* A)(x',e') = A(f(x'), g(e')) over the new universe and params.
/// Throws NonTotalMap when f or g misses a source label, TargetMismatch when
/// an image is not in A's universe or params.
SVSet pullback(const LabelMap& f, const Universe& new_universe, const LabelMap& g, const ParamSet& new_params,
               const SVSet& a);

/// (f_! A)(v,e) = join of A(x,e) over the fiber f(x) = v; empty fibers give bottom.
SVSet pushforward(const LabelMap& f, const Universe& target, const SVSet& a);

}  // namespace svset
