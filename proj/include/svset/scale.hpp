#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "svset/element.hpp"

namespace svset {

enum class ScaleKind {
  Bool,
  Chain,
  UnitRational,
  IfsDelta,
  RoughChain,
  M3Diamond,
  Product,
  Interval,
  FunctionGrid,
  CustomFinite,
};

std::string_view to_string(ScaleKind kind);

/// Presentation of a finite lattice by its cover relation plus a negation table.
struct FiniteLatticeSpec {
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> covers;  // (lower, upper)
  std::map<std::string, std::string> neg;
  std::string bottom;
  std::string top;
};

/// The two antitone involutions on M3 = {0, p, q, 1}.
enum class M3Negation { Swap, Fix };

namespace detail {
class ScaleImpl;
}

/// A bounded De Morgan lattice. Cheap to copy (shared immutable state).
///
/// Every public operation checks that its arguments belong to the carrier and
/// throws Error(ElementNotInCarrier) otherwise.
class Scale {
 public:
  explicit Scale(std::shared_ptr<const detail::ScaleImpl> impl);

  ScaleKind kind() const;
  /// Canonical structural description, e.g. "product(unit-rational,chain(10))".
  /// Two scales are the same scale iff their signatures agree.
  std::string signature() const;

  bool contains(const Element& a) const;
  void require(const Element& a) const;

  Element join(const Element& a, const Element& b) const;
  Element meet(const Element& a, const Element& b) const;
  Element neg(const Element& a) const;
  bool leq(const Element& a, const Element& b) const;
  bool lt(const Element& a, const Element& b) const { return a != b && leq(a, b); }
  Element bottom() const;
  Element top() const;

  bool is_finite() const;
  /// Enumerates the carrier; throws InfiniteCarrierExhaustive when infinite.
  std::vector<Element> carrier() const;
  bool is_chain() const;
  /// Finite scales are complete. Unit-interval based scales are flagged
  /// not-complete since suprema of rational families need not be rational.
  bool is_complete() const { return is_finite(); }

  Element sample(std::mt19937_64& rng) const;

  // Structural accessors; each throws InvalidArgument on the wrong kind.
  std::int64_t chain_bound() const;
  const std::vector<Rational>& grid() const;
  std::vector<Scale> components() const;
  const FiniteLatticeSpec& finite_spec() const;
  M3Negation m3_negation() const;

  const detail::ScaleImpl& impl() const { return *impl_; }

  friend bool operator==(const Scale& a, const Scale& b) { return a.signature() == b.signature(); }

 private:
  std::shared_ptr<const detail::ScaleImpl> impl_;
};

Scale bool_scale();
/// {0, 1, ..., k} with max/min and n -> k - n. Requires k >= 1.
Scale chain_scale(std::int64_t k);
/// [0,1] over exact rationals with max/min and t -> 1 - t.
Scale unit_scale();
/// Intuitionistic pairs (a, b) with a + b <= 1.
Scale ifs_scale();
/// (0,0) < (0,1) < (1,1), with the boundary value fixed by negation.
Scale rough_scale();
Scale m3_scale(M3Negation negation = M3Negation::Swap);
Scale product_scale(const Scale& left, const Scale& right);
/// Closed intervals [l, u] of the base, endpointwise ops, neg[l,u] = [neg u, neg l].
Scale interval_scale(const Scale& base);
/// Unit-valued functions on a finite grid of [0,1], all ops pointwise.
Scale function_scale(std::vector<Rational> grid);

/// Builds a finite scale from its cover presentation and verifies every
/// bounded De Morgan lattice law exhaustively. Throws NotALattice,
/// BadInvolution, DeMorganViolation or BoundsMismatch.
Scale build_finite_scale(const FiniteLatticeSpec& spec);

/// Same presentation, but only the order closure and lub/glb tables are
/// built; the negation is taken as given. Used to examine broken fixtures
/// with verify_scale_laws. Still throws NotALattice if joins or meets are
/// not unique, since the operations would be undefined.
Scale build_finite_scale_unverified(const FiniteLatticeSpec& spec);

/// Join of a finite family; the empty join is bottom.
Element join_all(const Scale& scale, std::span<const Element> values);
/// Meet of a finite family; the empty meet is top.
Element meet_all(const Scale& scale, std::span<const Element> values);

// ---------------------------------------------------------------------------
// Law verification

struct Sampling {
  enum class Mode { Exhaustive, Random };
  Mode mode = Mode::Exhaustive;
  std::size_t samples = 0;
  std::uint64_t seed = 0;

  static Sampling exhaustive() { return {}; }
  static Sampling random(std::size_t n, std::uint64_t seed) { return {Mode::Random, n, seed}; }
};

struct LawResult {
  std::string law;
  bool passed = true;
  std::size_t checked = 0;
  std::vector<Element> witness;  // empty when passed
};

struct LawReport {
  std::string subject;
  std::vector<LawResult> laws;

  bool all_passed() const;
  const LawResult* find(std::string_view law) const;
  const LawResult* first_failure() const;
};

/// Checks closure, the lattice axioms, bounds, involution, antitonicity,
/// both De Morgan identities and the meet/join order agreement.
/// Distributivity is deliberately not a law (M3 is a scale).
LawReport verify_scale_laws(const Scale& scale, const Sampling& sampling);

/// A map between scales claimed to preserve joins, meets, bounds and negation.
struct ScaleHom {
  Scale source;
  Scale target;
  std::function<Element(const Element&)> mapping;
  std::string name;

  /// Applies the mapping; checks source membership and target membership.
  Element operator()(const Element& a) const;

  static ScaleHom identity(const Scale& scale);
  /// Finite explicit table. Keys must cover the source carrier when used
  /// exhaustively; a missing key raises NonTotalMap on application.
  static ScaleHom from_table(const Scale& source, const Scale& target,
                             std::vector<std::pair<Element, Element>> table, std::string name = "table");
};

LawReport verify_scale_hom(const ScaleHom& hom, const Sampling& sampling);

}  // namespace svset
