#pragma once

#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "svset/scale.hpp"

namespace svset::detail {

/// Unchecked scale operations. Arguments are assumed to be in the carrier;
/// the Scale handle performs membership checks before dispatching here.
class ScaleImpl {
 public:
  virtual ~ScaleImpl() = default;

  virtual ScaleKind kind() const = 0;
  virtual std::string signature() const = 0;
  virtual bool contains(const Element& a) const = 0;
  virtual Element join(const Element& a, const Element& b) const = 0;
  virtual Element meet(const Element& a, const Element& b) const = 0;
  virtual Element neg(const Element& a) const = 0;
  virtual bool leq(const Element& a, const Element& b) const { return meet(a, b) == a; }
  virtual Element bottom() const = 0;
  virtual Element top() const = 0;
  virtual std::optional<std::vector<Element>> carrier() const { return std::nullopt; }
  virtual bool is_chain() const = 0;
  virtual Element sample(std::mt19937_64& rng) const = 0;
};

std::shared_ptr<const ScaleImpl> make_finite_lattice(const FiniteLatticeSpec& spec, ScaleKind kind,
                                                     bool verify, M3Negation m3 = M3Negation::Swap);
const FiniteLatticeSpec& finite_lattice_spec(const ScaleImpl& impl);
M3Negation finite_lattice_m3_negation(const ScaleImpl& impl);

/// Uniform index in [0, n) that is reproducible across standard libraries.
inline std::size_t uniform_index(std::mt19937_64& rng, std::size_t n) {
  return static_cast<std::size_t>(rng() % n);
}

}  // namespace svset::detail
