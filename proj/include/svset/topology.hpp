#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "svset/svset.hpp"

namespace svset {

/// Finite family of unparameterized SV-sets on one universe and scale.
struct SVTopology {
  Scale scale;
  Universe universe;
  std::vector<SVSet> opens;
};

struct CrispTopology {
  Universe universe;
  std::vector<Subset> opens;
};

/// One violated closure requirement. `operands` index into the family's
/// opens; `missing` is the member that should have been present.
template <typename Member>
struct ClosureWitness {
  std::string rule;  // "bottom", "top", "join", "meet"
  std::vector<std::size_t> operands;
  Member missing;
};

template <typename Member>
struct ValidationReport {
  std::vector<ClosureWitness<Member>> witnesses;
  bool valid() const { return witnesses.empty(); }
};

using SVTopologyReport = ValidationReport<SVSet>;
using CrispTopologyReport = ValidationReport<Subset>;

/// {x : A(x) > alpha}, strictly above in the lattice order. Requires an
/// unparameterized A and alpha < top (AlphaIsTop otherwise). Defined on any
/// scale; only chains give cut topologies.
Subset strong_cut(const SVSet& a, const Element& alpha);
/// {x : alpha <= A(x)}.
Subset weak_cut(const SVSet& a, const Element& alpha);

/// Checks both constants and closure under joins and meets. For a finite
/// family, closure under pairwise joins is closure under every nonempty
/// subfamily join; the empty join is the bottom constant.
SVTopologyReport validate_sv_topology(const SVTopology& topology);
CrispTopologyReport validate_crisp_topology(const CrispTopology& topology);

inline constexpr std::size_t kDefaultClosureCap = 4096;

/// Least family containing the generators and both constants that is closed
/// under joins and meets. Members keep first-insertion order. Throws
/// ClosureCapExceeded once the family would grow past `cap`.
SVTopology generate_sv_topology(const Universe& universe, const Scale& scale, const std::vector<SVSet>& generators,
                                std::size_t cap = kDefaultClosureCap);

/// {A^{>alpha} : A in tau}, deduplicated in order of first appearance.
/// Refuses non-chain scales with NotAChain.
CrispTopology cut_topology(const SVTopology& topology, const Element& alpha);

struct CounterexampleReport {
  std::string scale;
  Element a_value;
  Element b_value;
  Element alpha;
  Element meet_value;
  Subset cut_intersection;  // A^{>alpha} intersected with B^{>alpha}
  Subset meet_cut;          // (A ^ B)^{>alpha}

  bool is_counterexample() const { return cut_intersection != meet_cut; }
};

/// U = {x}, A(x) = a, B(x) = b: compares the intersection of the cuts with
/// the cut of the meet.
CounterexampleReport cut_meet_counterexample(const Scale& scale, const Element& a, const Element& b,
                                             const Element& alpha);
/// The M3 fixture: A(x) = p, B(x) = q, alpha = 0.
CounterexampleReport m3_cut_counterexample();

struct ContinuityReport {
  bool continuous = true;
  std::optional<std::size_t> failing_open;  // index into the target topology
  std::optional<SVSet> failing_pullback;
};

/// Tests B . f in tau_U for every B in tau_V by exact value-table equality.
ContinuityReport check_sv_continuity(const LabelMap& f, const SVTopology& source, const SVTopology& target);
/// Classical continuity: every preimage of an open is open.
bool check_crisp_continuity(const LabelMap& f, const CrispTopology& source, const CrispTopology& target);

/// {A_e : A in family} for a parameterized family satisfying the topology
/// axioms over SV(U, E; scale). Throws UnknownParam or InvalidFamily.
SVTopology slice_topology(const std::vector<SVSet>& family, const std::string& param);

/// Members common to both topologies.
SVTopology topology_intersection(const SVTopology& a, const SVTopology& b);

}  // namespace svset
