#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "svset/svset.hpp"

namespace svset {

// Encoders and decoders between classical generalized-set models and SV-sets.
// Every pair is mutually inverse on valid input, and each encoder carries the
// model's own union/intersection/complement to the pointwise SV operations.

template <typename T>
using Membership = std::map<std::string, T>;

// --- crisp ----------------------------------------------------------------
SVSet crisp_to_sv(const Universe& universe, const Subset& subset);
Subset sv_to_crisp(const SVSet& a);

// --- soft -----------------------------------------------------------------
struct SoftSet {
  Universe universe;
  ParamSet params;
  std::map<std::string, Subset> assignment;  // total on params
};

SVSet soft_to_sv(const SoftSet& soft);
SoftSet sv_to_soft(const SVSet& a);
SoftSet soft_union(const SoftSet& f, const SoftSet& g);
SoftSet soft_intersection(const SoftSet& f, const SoftSet& g);
SoftSet soft_complement(const SoftSet& f);

// --- identity-on-values encodings ------------------------------------------
SVSet multiset_to_sv(const Universe& universe, const Membership<std::int64_t>& multiplicity, std::int64_t k);
Membership<std::int64_t> sv_to_multiset(const SVSet& a);

SVSet fuzzy_to_sv(const Universe& universe, const Membership<Rational>& grade);
Membership<Rational> sv_to_fuzzy(const SVSet& a);

SVSet lfuzzy_to_sv(const Universe& universe, const Membership<Element>& grade, const Scale& lattice);
Membership<Element> sv_to_lfuzzy(const SVSet& a);

// --- intuitionistic fuzzy ---------------------------------------------------
struct IFSPair {
  Membership<Rational> mu;
  Membership<Rational> nu;
};

SVSet ifs_to_sv(const Universe& universe, const IFSPair& pair);
IFSPair sv_to_ifs(const SVSet& a);

// --- rough pairs ------------------------------------------------------------
struct RoughPair {
  Subset lower;
  Subset upper;
  friend bool operator==(const RoughPair&, const RoughPair&) = default;
};

enum class RoughOp { Union, Intersection, Complement };

SVSet rough_to_sv(const Universe& universe, const RoughPair& pair);
RoughPair sv_to_rough(const SVSet& a);
/// Pairwise union/intersection, or (U \ M, U \ L) for the complement
/// (the second argument is ignored for Complement).
RoughPair rough_ops(const Universe& universe, const RoughPair& r1, const RoughPair& r2, RoughOp op);

// --- Type-2 and interval Type-2 ---------------------------------------------
/// Secondary memberships: for each x, one unit value per grid point.
using Type2Membership = Membership<std::vector<Rational>>;

SVSet type2_to_sv(const Universe& universe, const std::vector<Rational>& grid, const Type2Membership& mu);
Type2Membership sv_to_type2(const SVSet& a);

struct IT2Footprint {
  Membership<Rational> lower;
  Membership<Rational> upper;
};

SVSet it2_to_sv(const Universe& universe, const IT2Footprint& footprint);
IT2Footprint sv_to_it2(const SVSet& a);

// --- lattice-valued interval soft sets ----------------------------------------
/// An LVISS over the function lattice V^U, stored by its membership
/// presentation: for each parameter e, lower[e] and upper[e] give f_e^- and
/// f_e^+ as one V-value per universe element.
struct LVISS {
  Universe universe;
  ParamSet params;                  // full parameter set E
  std::vector<std::string> domain;  // parameters where F is defined
  Scale base;                       // V
  std::vector<std::vector<Element>> lower;  // [param][element]
  std::vector<std::vector<Element>> upper;

  bool is_simple() const { return lower == upper; }
};

/// e -> [A_e, A_e]: the simple LVISS on the full parameter domain.
LVISS sv_to_simple_lviss(const SVSet& a);
/// (x, e) -> [f_e^-(x), f_e^+(x)] over interval_scale(V). Throws
/// VariableDomainUnsupported when the domain is a proper subset of E.
SVSet lviss_membership_to_sv(const LVISS& f);
LVISS lviss_union(const LVISS& f, const LVISS& g);
LVISS lviss_intersection(const LVISS& f, const LVISS& g);
/// e -> [neg f_e^+, neg f_e^-].
LVISS lviss_complement(const LVISS& f);

/// The formal view for an abstract lattice L: the domain becomes the
/// universe of an unparameterized set valued in interval_scale(L).
SVSet lviss_formal_to_sv(const std::vector<std::string>& domain, const Scale& lattice,
                         const Membership<std::pair<Element, Element>>& intervals);

}  // namespace svset
