#pragma once

#include <optional>
#include <string>
#include <vector>

#include "svset/svset.hpp"

namespace svset {

/// A finite group given by its Cayley table. Construction checks closure,
/// associativity, the identity law and two-sided inverses.
class FiniteGroup {
 public:
  /// table[i][j] is the label of elements[i] * elements[j].
  FiniteGroup(std::vector<std::string> elements, const std::vector<std::vector<std::string>>& table,
              const std::string& identity);

  std::size_t order() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  std::size_t index_of(const std::string& label) const;
  std::size_t identity() const { return identity_; }
  std::size_t multiply(std::size_t a, std::size_t b) const { return table_[a * labels_.size() + b]; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  Universe universe() const { return Universe("G", labels_); }

 private:
  std::vector<std::string> labels_;
  std::vector<std::size_t> table_;
  std::vector<std::size_t> inverse_;
  std::size_t identity_ = 0;
};

/// Z_n with labels "0".."n-1".
FiniteGroup cyclic_group(std::size_t n);
/// S_3 as permutations of {1,2,3}: e, (12), (13), (23), (123), (132).
FiniteGroup symmetric_group_3();
/// Symmetries of the square: r0..r3 rotations, s0..s3 reflections.
FiniteGroup dihedral_group_4();
/// "Z<n>", "S3" or "D4".
FiniteGroup builtin_group(const std::string& name);

/// A map between finite groups; construction checks phi(ab) = phi(a)phi(b).
class GroupHom {
 public:
  GroupHom(FiniteGroup source, FiniteGroup target, const LabelMap& mapping);

  const FiniteGroup& source() const { return source_; }
  const FiniteGroup& target() const { return target_; }
  std::size_t operator()(std::size_t a) const { return image_[a]; }
  LabelMap mapping() const;

 private:
  FiniteGroup source_;
  FiniteGroup target_;
  std::vector<std::size_t> image_;
};

/// Reduction Z_n -> Z_m, x -> x mod m; needs m | n.
GroupHom reduction_hom(std::size_t n, std::size_t m);

struct SubgroupReport {
  bool passed = true;
  std::string failure;                  // "identity-not-top" or "inequality"; empty on pass
  std::optional<std::string> param;     // failing slice of a parameterized set
  std::optional<std::string> x;         // witness pair for the inequality
  std::optional<std::string> y;
};

/// A(e) = top and A(x y^-1) >= A(x) ^ A(y) for all x, y. A parameterized
/// set passes iff every slice does. Throws UniverseMismatch.
SubgroupReport is_sv_subgroup(const FiniteGroup& group, const SVSet& a);

struct DerivedPropertiesReport {
  bool below_identity = true;      // A(x) <= A(e)
  bool inverse_symmetric = true;   // A(x^-1) = A(x)
  bool product_closed = true;      // A(xy) >= A(x) ^ A(y)
  std::optional<std::string> witness;

  bool all_hold() const { return below_identity && inverse_symmetric && product_closed; }
};

/// Consequences of the subgroup condition. Requires is_sv_subgroup to pass
/// (NotASubgroup otherwise); every property must then hold.
DerivedPropertiesReport derived_properties_check(const FiniteGroup& group, const SVSet& a);

/// The symmetric form: A(e) = top, A(x^-1) = A(x), A(xy) >= A(x) ^ A(y).
/// Independent of is_sv_subgroup; the two are equivalent.
bool satisfies_symmetric_form(const FiniteGroup& group, const SVSet& a);

/// Weak level set {x : alpha <= A(x)}.
Subset level_subgroup(const FiniteGroup& group, const SVSet& a, const Element& alpha);

/// Contains e, closed under x y^-1.
bool is_crisp_subgroup(const FiniteGroup& group, const Subset& subset);

struct EquivalenceReport {
  bool sv_subgroup = false;
  bool all_levels_subgroups = true;
  std::size_t levels_checked = 0;
  std::optional<Element> failing_level;  // first alpha whose level set is not a subgroup
  bool agree() const { return sv_subgroup == all_levels_subgroups; }
};

/// Compares the pointwise condition against "every weak level set is a
/// subgroup". Levels range over the whole carrier when it is finite, and
/// otherwise over the meet-closure of image(A) together with top.
EquivalenceReport level_equivalence_check(const FiniteGroup& group, const SVSet& a);

/// Pointwise meet of SV-subgroups; the result is re-verified.
SVSet meet_subgroups(const FiniteGroup& group, const std::vector<SVSet>& subgroups);

/// (phi^* A)(x) = A(phi(x)) over the source group; the result is re-verified.
SVSet pullback_subgroup(const GroupHom& phi, const SVSet& a);

}  // namespace svset
