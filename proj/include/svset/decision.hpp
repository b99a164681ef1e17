#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "svset/rational.hpp"
#include "svset/svset.hpp"

namespace svset {

/// Suitability grade mu in [0,1] backed by m of at most k evidence items.
struct EvidenceGrade {
  Rational mu;
  std::int64_t m = 0;
  std::int64_t k = 1;

  /// Throws OutOfRange unless 0 <= mu <= 1, k >= 1 and 0 <= m <= k.
  void validate() const;
  Element to_element() const;
  static EvidenceGrade from_element(const Element& e, std::int64_t k);

  friend bool operator==(const EvidenceGrade&, const EvidenceGrade&) = default;
};

std::string to_string(const EvidenceGrade& g);

/// unit-rational x chain(k).
Scale evidence_scale(std::int64_t k);

/// Alternatives x criteria -> evidence grade, stored as an SV-set over the
/// evidence scale.
class DecisionTable {
 public:
  /// `grades` is row-major by alternative; every grade must carry bound k.
  DecisionTable(Universe alternatives, ParamSet criteria, std::int64_t k, const std::vector<EvidenceGrade>& grades);
  /// Throws WrongScale unless the set is over unit-rational x chain(k).
  static DecisionTable from_svset(const SVSet& a);

  const Universe& alternatives() const { return set_.universe(); }
  const ParamSet& criteria() const { return set_.params(); }
  std::int64_t k() const { return k_; }
  EvidenceGrade grade(std::size_t alternative, std::size_t criterion) const;
  EvidenceGrade grade(const std::string& alternative, const std::string& criterion) const;
  const SVSet& to_svset() const { return set_; }

 private:
  DecisionTable(SVSet set, std::int64_t k) : set_(std::move(set)), k_(k) {}

  SVSet set_;
  std::int64_t k_;
};

/// Aggregated grade per alternative, in universe order.
using Profile = std::vector<std::pair<std::string, EvidenceGrade>>;
using ScoreList = std::vector<std::pair<std::string, Rational>>;

/// Meet across criteria. Throws EmptyCriteria when there are none.
Profile aggregate_min(const DecisionTable& table);

/// lambda * mu + (1 - lambda) * m / k.
Rational hybrid_score(const EvidenceGrade& g, const Rational& lambda);
/// Throws LambdaOutOfRange unless 0 < lambda < 1, BoundMismatch unless every
/// grade has bound k.
ScoreList score(const Profile& profile, const Rational& lambda, std::int64_t k);

struct TieGroup {
  Rational value;
  std::vector<std::string> members;  // sorted by label
};

/// Groups equal values, best first.
std::vector<TieGroup> tie_groups(const ScoreList& scores);

struct RankingResult {
  Rational lambda;
  ScoreList scores;
  std::vector<TieGroup> order;
};

RankingResult rank(const Profile& profile, const Rational& lambda, std::int64_t k);
RankingResult rank(const DecisionTable& table, const Rational& lambda);

enum class PairRelation { Crossing, Dominance, AlwaysTied };
std::string to_string(PairRelation r);

struct BreakEvenReport {
  std::string first;
  std::string second;
  PairRelation relation = PairRelation::AlwaysTied;
  std::optional<Rational> lambda_star;
  /// Strict winner for lambda in (0, lambda*) and (lambda*, 1). Under
  /// dominance both name the dominating side; always-tied leaves them empty.
  std::optional<std::string> winner_below;
  std::optional<std::string> winner_above;
};

/// Throws BoundMismatch when the grades carry different k.
BreakEvenReport break_even(const EvidenceGrade& g1, const EvidenceGrade& g2, const std::string& first = "first",
                           const std::string& second = "second");
/// Compares aggregated grades. Throws UnknownElement for unknown labels.
BreakEvenReport break_even(const DecisionTable& table, const std::string& first, const std::string& second);

struct SweepInterval {
  Rational lower;
  Rational upper;
  RankingResult ranking;  // evaluated at the midpoint
};

struct SweepReport {
  std::vector<Rational> breakpoints;     // distinct crossing points, ascending
  std::vector<SweepInterval> intervals;  // breakpoints.size() + 1 open intervals
  std::vector<RankingResult> at_breakpoints;
};

SweepReport lambda_sweep(const DecisionTable& table);

struct ProjectionReport {
  std::vector<TieGroup> grade_only;     // by aggregated mu
  std::vector<TieGroup> evidence_only;  // by aggregated m
};

ProjectionReport projection_rankings(const DecisionTable& table);

}  // namespace svset
