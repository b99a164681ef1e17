#include "svset/decision.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "svset/error.hpp"

namespace svset {

void EvidenceGrade::validate() const {
  if (k < 1) throw Error(ErrorCode::OutOfRange, "evidence bound k must be at least 1, got " + std::to_string(k));
  if (!in_unit_interval(mu)) throw Error(ErrorCode::OutOfRange, "grade " + svset::to_string(mu) + " is outside [0,1]");
  if (m < 0 || m > k) {
    throw Error(ErrorCode::OutOfRange,
                "evidence count " + std::to_string(m) + " is outside 0.." + std::to_string(k));
  }
}

Element EvidenceGrade::to_element() const { return Element::pair(Element::rational(mu), Element::integer(m)); }

EvidenceGrade EvidenceGrade::from_element(const Element& e, std::int64_t k) {
  evidence_scale(k).require(e);
  return EvidenceGrade{e.items()[0].as_rational(), e.items()[1].as_integer(), k};
}

std::string to_string(const EvidenceGrade& g) { return "(" + to_string(g.mu) + "," + std::to_string(g.m) + ")"; }

Scale evidence_scale(std::int64_t k) { return product_scale(unit_scale(), chain_scale(k)); }

DecisionTable::DecisionTable(Universe alternatives, ParamSet criteria, std::int64_t k,
                             const std::vector<EvidenceGrade>& grades)
    : set_([&] {
        if (grades.size() != alternatives.size() * criteria.size()) {
          throw Error(ErrorCode::NonTotalMap, "decision table needs " +
                                                  std::to_string(alternatives.size() * criteria.size()) +
                                                  " grades, got " + std::to_string(grades.size()));
        }
        std::vector<Element> values;
        for (const auto& g : grades) {
          g.validate();
          if (g.k != k) {
            throw Error(ErrorCode::BoundMismatch,
                        "grade " + to_string(g) + " has bound " + std::to_string(g.k) + ", table has " +
                            std::to_string(k));
          }
          values.push_back(g.to_element());
        }
        return SVSet(std::move(alternatives), std::move(criteria), evidence_scale(k), std::move(values));
      }()),
      k_(k) {}

DecisionTable DecisionTable::from_svset(const SVSet& a) {
  const Scale& s = a.scale();
  if (s.kind() == ScaleKind::Product) {
    auto parts = s.components();
    if (parts[0].kind() == ScaleKind::UnitRational && parts[1].kind() == ScaleKind::Chain) {
      return DecisionTable(a, parts[1].chain_bound());
    }
  }
  throw Error(ErrorCode::WrongScale, "decision tables need unit-rational x chain(k), got " + s.signature());
}

EvidenceGrade DecisionTable::grade(std::size_t alternative, std::size_t criterion) const {
  const Element& e = set_.at(alternative, criterion);
  return EvidenceGrade{e.items()[0].as_rational(), e.items()[1].as_integer(), k_};
}

EvidenceGrade DecisionTable::grade(const std::string& alternative, const std::string& criterion) const {
  return EvidenceGrade::from_element(set_.at(alternative, criterion), k_);
}

Profile aggregate_min(const DecisionTable& table) {
  if (table.criteria().size() == 0) throw Error(ErrorCode::EmptyCriteria, "no criteria to aggregate over");
  const SVSet& a = table.to_svset();
  const Scale& s = a.scale();
  Profile out;
  for (std::size_t x = 0; x < a.universe().size(); ++x) {
    Element b = a.at(x, 0);
    for (std::size_t e = 1; e < a.params().size(); ++e) b = s.meet(b, a.at(x, e));
    out.emplace_back(a.universe()[x], EvidenceGrade::from_element(b, table.k()));
  }
  return out;
}

namespace {

void require_lambda(const Rational& lambda) {
  if (lambda <= 0 || lambda >= 1) {
    throw Error(ErrorCode::LambdaOutOfRange, "lambda must lie strictly between 0 and 1, got " + to_string(lambda));
  }
}

void require_bound(const EvidenceGrade& g, std::int64_t k) {
  if (g.k != k) {
    throw Error(ErrorCode::BoundMismatch,
                "grade " + to_string(g) + " has bound " + std::to_string(g.k) + ", expected " + std::to_string(k));
  }
}

}  // namespace

Rational hybrid_score(const EvidenceGrade& g, const Rational& lambda) {
  return lambda * g.mu + (1 - lambda) * Rational(g.m, g.k);
}

ScoreList score(const Profile& profile, const Rational& lambda, std::int64_t k) {
  require_lambda(lambda);
  ScoreList out;
  for (const auto& [label, g] : profile) {
    require_bound(g, k);
    g.validate();
    out.emplace_back(label, hybrid_score(g, lambda));
  }
  return out;
}

std::vector<TieGroup> tie_groups(const ScoreList& scores) {
  std::map<Rational, std::vector<std::string>, std::greater<>> groups;
  for (const auto& [label, value] : scores) groups[value].push_back(label);
  std::vector<TieGroup> out;
  for (auto& [value, members] : groups) {
    std::sort(members.begin(), members.end());
    out.push_back(TieGroup{value, std::move(members)});
  }
  return out;
}

RankingResult rank(const Profile& profile, const Rational& lambda, std::int64_t k) {
  RankingResult result{lambda, score(profile, lambda, k), {}};
  result.order = tie_groups(result.scores);
  return result;
}

RankingResult rank(const DecisionTable& table, const Rational& lambda) {
  return rank(aggregate_min(table), lambda, table.k());
}

std::string to_string(PairRelation r) {
  switch (r) {
    case PairRelation::Crossing:
      return "crossing";
    case PairRelation::Dominance:
      return "dominance";
    case PairRelation::AlwaysTied:
      return "always-tied";
  }
  return "?";
}

BreakEvenReport break_even(const EvidenceGrade& g1, const EvidenceGrade& g2, const std::string& first,
                           const std::string& second) {
  require_bound(g2, g1.k);
  g1.validate();
  g2.validate();
  BreakEvenReport report{first, second, PairRelation::AlwaysTied, std::nullopt, std::nullopt, std::nullopt};
  const Rational d_mu = g1.mu - g2.mu;
  const Rational d_ev = Rational(g1.m - g2.m, g1.k);
  if (d_mu == 0 && d_ev == 0) return report;

  if (d_mu != 0 && d_ev != 0 && (d_mu > 0) != (d_ev > 0)) {
    // Scores agree where lambda * d_mu + (1 - lambda) * d_ev = 0.
    report.relation = PairRelation::Crossing;
    report.lambda_star = d_ev / (d_ev - d_mu);
    report.winner_below = d_ev > 0 ? first : second;
    report.winner_above = d_mu > 0 ? first : second;
    return report;
  }
  report.relation = PairRelation::Dominance;
  const std::string& winner = (d_mu > 0 || d_ev > 0) ? first : second;
  report.winner_below = winner;
  report.winner_above = winner;
  return report;
}

namespace {

const EvidenceGrade& profile_grade(const Profile& profile, const std::string& label) {
  for (const auto& [l, g] : profile) {
    if (l == label) return g;
  }
  throw Error(ErrorCode::UnknownElement, "unknown alternative \"" + label + "\"");
}

}  // namespace

BreakEvenReport break_even(const DecisionTable& table, const std::string& first, const std::string& second) {
  const Profile profile = aggregate_min(table);
  return break_even(profile_grade(profile, first), profile_grade(profile, second), first, second);
}

SweepReport lambda_sweep(const DecisionTable& table) {
  const Profile profile = aggregate_min(table);
  std::set<Rational> points;
  for (std::size_t i = 0; i < profile.size(); ++i) {
    for (std::size_t j = i + 1; j < profile.size(); ++j) {
      auto report = break_even(profile[i].second, profile[j].second);
      if (report.lambda_star) points.insert(*report.lambda_star);
    }
  }
  SweepReport sweep;
  sweep.breakpoints.assign(points.begin(), points.end());
  std::vector<Rational> edges{Rational(0)};
  edges.insert(edges.end(), points.begin(), points.end());
  edges.emplace_back(1);
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    const Rational mid = (edges[i] + edges[i + 1]) / 2;
    sweep.intervals.push_back(SweepInterval{edges[i], edges[i + 1], rank(profile, mid, table.k())});
  }
  for (const auto& p : sweep.breakpoints) sweep.at_breakpoints.push_back(rank(profile, p, table.k()));
  return sweep;
}

ProjectionReport projection_rankings(const DecisionTable& table) {
  const Profile profile = aggregate_min(table);
  ScoreList grades;
  ScoreList evidence;
  for (const auto& [label, g] : profile) {
    grades.emplace_back(label, g.mu);
    evidence.emplace_back(label, Rational(g.m));
  }
  return ProjectionReport{tie_groups(grades), tie_groups(evidence)};
}

}  // namespace svset
