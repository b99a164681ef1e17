#include <gtest/gtest.h>

#include "support/fixtures.hpp"
#include "svset/encodings.hpp"
#include "svset/error.hpp"

namespace svset {
namespace {

using testing::pick;
using testing::random_unit;

template <typename F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::Internal;
}

Subset subset_of_mask(const Universe& u, std::uint64_t mask) {
  Subset s;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if ((mask >> i) & 1U) s.insert(u[i]);
  }
  return s;
}

Subset random_subset(std::mt19937_64& rng, const Universe& u) { return subset_of_mask(u, rng()); }

TEST(Crisp, BoundsAndExhaustiveRoundTrip) {
  const Universe u = testing::universe_of(6);
  EXPECT_EQ(crisp_to_sv(u, {}), SVSet::constant(u, ParamSet::unparameterized(), bool_scale(), Element::boolean(false)));
  EXPECT_EQ(crisp_to_sv(u, Subset(u.labels().begin(), u.labels().end())),
            SVSet::constant(u, ParamSet::unparameterized(), bool_scale(), Element::boolean(true)));
  for (std::uint64_t mask = 0; mask < 64; ++mask) {
    const Subset s = subset_of_mask(u, mask);
    EXPECT_EQ(sv_to_crisp(crisp_to_sv(u, s)), s);
  }
}

TEST(Crisp, DecodingNeedsBoolScale) {
  const SVSet a = SVSet::unparameterized(Universe({"x"}), chain_scale(1), {Element::integer(1)});
  EXPECT_EQ(code_of([&] { sv_to_crisp(a); }), ErrorCode::WrongScale);
}

TEST(Soft, RoundTripAndOperations) {
  std::mt19937_64 rng(31);
  const Universe u = testing::universe_of(4);
  const ParamSet e({"p", "q", "r"});
  SoftSet empty{u, e, {{"p", {}}, {"q", {}}, {"r", {}}}};
  EXPECT_EQ(soft_to_sv(empty), SVSet::constant(u, e, bool_scale(), Element::boolean(false)));
  for (int i = 0; i < 200; ++i) {
    SoftSet f{u, e, {}};
    SoftSet g{u, e, {}};
    for (const auto& p : e.labels()) {
      f.assignment[p] = random_subset(rng, u);
      g.assignment[p] = random_subset(rng, u);
    }
    EXPECT_EQ(sv_to_soft(soft_to_sv(f)).assignment, f.assignment);
    EXPECT_EQ(soft_to_sv(soft_union(f, g)), sv_union(soft_to_sv(f), soft_to_sv(g)));
    EXPECT_EQ(soft_to_sv(soft_intersection(f, g)), sv_intersection(soft_to_sv(f), soft_to_sv(g)));
    EXPECT_EQ(soft_to_sv(soft_complement(f)), sv_complement(soft_to_sv(f)));
  }
}

TEST(Multiset, ComplementIsKMinusN) {
  const Universe u({"x", "y"});
  const SVSet a = multiset_to_sv(u, {{"x", 3}, {"y", 0}}, 4);
  EXPECT_EQ(sv_to_multiset(sv_complement(a)), (Membership<std::int64_t>{{"x", 1}, {"y", 4}}));
  EXPECT_EQ(multiset_to_sv(u, {{"x", 0}, {"y", 0}}, 4),
            SVSet::constant(u, ParamSet::unparameterized(), chain_scale(4), Element::integer(0)));
  EXPECT_EQ(code_of([&] { multiset_to_sv(u, {{"x", 5}, {"y", 0}}, 4); }), ErrorCode::OutOfRange);
  EXPECT_EQ(code_of([&] { multiset_to_sv(u, {{"x", 1}}, 4); }), ErrorCode::NonTotalMap);
}

TEST(Fuzzy, RandomRoundTripsAndOps) {
  std::mt19937_64 rng(37);
  const Universe u = testing::universe_of(5);
  for (int i = 0; i < 200; ++i) {
    Membership<Rational> mu;
    Membership<Rational> nu;
    for (const auto& x : u.labels()) {
      mu[x] = random_unit(rng);
      nu[x] = random_unit(rng);
    }
    EXPECT_EQ(sv_to_fuzzy(fuzzy_to_sv(u, mu)), mu);
    const Membership<Rational> both = sv_to_fuzzy(sv_intersection(fuzzy_to_sv(u, mu), fuzzy_to_sv(u, nu)));
    for (const auto& x : u.labels()) EXPECT_EQ(both.at(x), std::min(mu.at(x), nu.at(x)));
  }
  EXPECT_EQ(code_of([&] { fuzzy_to_sv(Universe({"x"}), {{"x", Rational(3, 2)}}); }), ErrorCode::OutOfRange);
}

TEST(LFuzzy, OverM3MatchesLatticeOps) {
  std::mt19937_64 rng(41);
  const Scale m3 = m3_scale();
  const Universe u = testing::universe_of(4);
  for (int i = 0; i < 100; ++i) {
    Membership<Element> a;
    Membership<Element> b;
    for (const auto& x : u.labels()) {
      a[x] = m3.sample(rng);
      b[x] = m3.sample(rng);
    }
    const auto joined = sv_to_lfuzzy(sv_union(lfuzzy_to_sv(u, a, m3), lfuzzy_to_sv(u, b, m3)));
    const auto negated = sv_to_lfuzzy(sv_complement(lfuzzy_to_sv(u, a, m3)));
    for (const auto& x : u.labels()) {
      EXPECT_EQ(joined.at(x), m3.join(a.at(x), b.at(x)));
      EXPECT_EQ(negated.at(x), m3.neg(a.at(x)));
    }
    EXPECT_EQ(sv_to_lfuzzy(lfuzzy_to_sv(u, a, m3)), a);
  }
}

TEST(Ifs, ExamplesAndConstraint) {
  const Universe u({"x"});
  const SVSet top = ifs_to_sv(u, {{{"x", Rational(1)}}, {{"x", Rational(0)}}});
  EXPECT_EQ(top.at("x"), ifs_scale().top());
  const SVSet a = ifs_to_sv(u, {{{"x", Rational(3, 5)}}, {{"x", Rational(3, 10)}}});
  const IFSPair c = sv_to_ifs(sv_complement(a));
  EXPECT_EQ(c.mu.at("x"), Rational(3, 10));
  EXPECT_EQ(c.nu.at("x"), Rational(3, 5));
  EXPECT_EQ(code_of([&] { ifs_to_sv(u, {{{"x", Rational(7, 10)}}, {{"x", Rational(2, 5)}}}); }),
            ErrorCode::ConstraintViolation);
}

TEST(Ifs, RandomRoundTrips) {
  std::mt19937_64 rng(43);
  const Universe u = testing::universe_of(4);
  for (int i = 0; i < 200; ++i) {
    IFSPair p;
    for (const auto& x : u.labels()) {
      p.mu[x] = random_unit(rng);
      p.nu[x] = (1 - p.mu[x]) * random_unit(rng);
    }
    const IFSPair back = sv_to_ifs(ifs_to_sv(u, p));
    EXPECT_EQ(back.mu, p.mu);
    EXPECT_EQ(back.nu, p.nu);
  }
}

std::vector<RoughPair> all_rough_pairs(const Universe& u) {
  std::vector<RoughPair> out;
  const std::uint64_t full = (std::uint64_t{1} << u.size()) - 1;
  for (std::uint64_t upper = 0; upper <= full; ++upper) {
    for (std::uint64_t lower = 0; lower <= full; ++lower) {
      if ((lower & ~upper) == 0) out.push_back({subset_of_mask(u, lower), subset_of_mask(u, upper)});
    }
  }
  return out;
}

TEST(Rough, ExhaustiveRoundTripAndOps) {
  const Universe u = testing::universe_of(3);
  const auto pairs = all_rough_pairs(u);
  ASSERT_EQ(pairs.size(), 27U);
  EXPECT_EQ(rough_to_sv(u, {{}, {}}), SVSet::constant(u, ParamSet::unparameterized(), rough_scale(), rough_scale().bottom()));
  for (const auto& r : pairs) {
    EXPECT_EQ(sv_to_rough(rough_to_sv(u, r)), r);
    EXPECT_EQ(rough_to_sv(u, rough_ops(u, r, r, RoughOp::Complement)), sv_complement(rough_to_sv(u, r)));
    for (const auto& s : pairs) {
      EXPECT_EQ(rough_to_sv(u, rough_ops(u, r, s, RoughOp::Union)), sv_union(rough_to_sv(u, r), rough_to_sv(u, s)));
      EXPECT_EQ(rough_to_sv(u, rough_ops(u, r, s, RoughOp::Intersection)),
                sv_intersection(rough_to_sv(u, r), rough_to_sv(u, s)));
    }
  }
}

TEST(Rough, ComplementSwapsApproximations) {
  const Universe u({"a", "b", "c"});
  const RoughPair r{{"a"}, {"a", "b"}};
  EXPECT_EQ(rough_ops(u, r, r, RoughOp::Complement), (RoughPair{{"c"}, {"b", "c"}}));
  EXPECT_EQ(code_of([&] { rough_to_sv(u, {{"a"}, {"b"}}); }), ErrorCode::ConstraintViolation);
}

TEST(Type2, RoundTripsOnAFiveGrid) {
  std::mt19937_64 rng(47);
  const std::vector<Rational> grid{Rational(0), Rational(1, 4), Rational(1, 2), Rational(3, 4), Rational(1)};
  const Universe u = testing::universe_of(3);
  Type2Membership ones;
  for (const auto& x : u.labels()) ones[x] = std::vector<Rational>(grid.size(), Rational(1));
  EXPECT_EQ(type2_to_sv(u, grid, ones).at("x1"), function_scale(grid).top());
  for (int i = 0; i < 200; ++i) {
    Type2Membership mu;
    for (const auto& x : u.labels()) {
      for (std::size_t g = 0; g < grid.size(); ++g) mu[x].push_back(random_unit(rng));
    }
    EXPECT_EQ(sv_to_type2(type2_to_sv(u, grid, mu)), mu);
  }
  Type2Membership short_row = ones;
  short_row["x1"].pop_back();
  EXPECT_EQ(code_of([&] { type2_to_sv(u, grid, short_row); }), ErrorCode::BadGrid);
}

TEST(IT2, DegenerateAndRandom) {
  std::mt19937_64 rng(53);
  const Universe u = testing::universe_of(4);
  Membership<Rational> mu;
  for (const auto& x : u.labels()) mu[x] = random_unit(rng);
  const SVSet degenerate = it2_to_sv(u, {mu, mu});
  for (const auto& x : u.labels()) {
    EXPECT_EQ(degenerate.at(x), Element::pair(Element::rational(mu[x]), Element::rational(mu[x])));
  }
  for (int i = 0; i < 200; ++i) {
    IT2Footprint f;
    for (const auto& x : u.labels()) {
      f.lower[x] = random_unit(rng);
      f.upper[x] = f.lower[x] + (1 - f.lower[x]) * random_unit(rng);
    }
    const IT2Footprint back = sv_to_it2(it2_to_sv(u, f));
    EXPECT_EQ(back.lower, f.lower);
    EXPECT_EQ(back.upper, f.upper);
  }
  EXPECT_EQ(code_of([&] { it2_to_sv(Universe({"x"}), {{{"x", Rational(1, 2)}}, {{"x", Rational(1, 4)}}}); }),
            ErrorCode::IntervalViolation);
}

LVISS random_lviss(std::mt19937_64& rng, const Universe& u, const ParamSet& e) {
  LVISS f{u, e, e.labels(), unit_scale(), {}, {}};
  for (std::size_t p = 0; p < e.size(); ++p) {
    std::vector<Element> lo;
    std::vector<Element> hi;
    for (std::size_t x = 0; x < u.size(); ++x) {
      const Rational l = random_unit(rng);
      lo.push_back(Element::rational(l));
      hi.push_back(Element::rational(l + (1 - l) * random_unit(rng)));
    }
    f.lower.push_back(lo);
    f.upper.push_back(hi);
  }
  return f;
}

TEST(Lviss, SimpleRoundTrip) {
  std::mt19937_64 rng(59);
  const Universe u = testing::universe_of(3);
  const ParamSet e({"p", "q"});
  const SVSet a = testing::random_svset(rng, u, e, unit_scale());
  const LVISS f = sv_to_simple_lviss(a);
  EXPECT_TRUE(f.is_simple());
  const SVSet m = lviss_membership_to_sv(f);
  EXPECT_EQ(m.scale(), interval_scale(unit_scale()));
  for (std::size_t i = 0; i < a.values().size(); ++i) {
    EXPECT_EQ(m.values()[i], Element::pair(a.values()[i], a.values()[i]));
  }
}

TEST(Lviss, EndpointwiseOpsMatchIntervalOps) {
  std::mt19937_64 rng(61);
  const Universe u = testing::universe_of(3);
  const ParamSet e({"p", "q"});
  for (int i = 0; i < 200; ++i) {
    const LVISS f = random_lviss(rng, u, e);
    const LVISS g = random_lviss(rng, u, e);
    const SVSet mf = lviss_membership_to_sv(f);
    const SVSet mg = lviss_membership_to_sv(g);
    EXPECT_EQ(lviss_membership_to_sv(lviss_union(f, g)), sv_union(mf, mg));
    EXPECT_EQ(lviss_membership_to_sv(lviss_intersection(f, g)), sv_intersection(mf, mg));
    EXPECT_EQ(lviss_membership_to_sv(lviss_complement(f)), sv_complement(mf));
  }
}

TEST(Lviss, NonDegenerateIntervalsLoseInformationUnderTheSimpleView) {
  const Universe u({"x"});
  const ParamSet e({"p"});
  LVISS f{u, e, {"p"}, unit_scale(), {{Element::rational("0.2")}}, {{Element::rational("0.6")}}};
  ASSERT_FALSE(f.is_simple());
  const SVSet m = lviss_membership_to_sv(f);
  const SVSet back = lviss_membership_to_sv(sv_to_simple_lviss(m));
  EXPECT_NE(back.values(), m.values());
}

TEST(Lviss, RestrictionsAreEnforced) {
  const Universe u({"x"});
  LVISS partial{u, ParamSet({"p", "q"}), {"p"}, unit_scale(), {{Element::rational("0")}, {Element::rational("0")}},
                {{Element::rational("1")}, {Element::rational("1")}}};
  EXPECT_EQ(code_of([&] { lviss_membership_to_sv(partial); }), ErrorCode::VariableDomainUnsupported);
  LVISS inverted{u, ParamSet({"p"}), {"p"}, unit_scale(), {{Element::rational("0.9")}}, {{Element::rational("0.1")}}};
  EXPECT_EQ(code_of([&] { lviss_membership_to_sv(inverted); }), ErrorCode::IntervalViolation);
}

TEST(Lviss, FormalView) {
  const Scale l = m3_scale();
  const SVSet a = lviss_formal_to_sv({"p", "q"}, l,
                                     {{"p", {Element::atom("0"), Element::atom("p")}},
                                      {"q", {Element::atom("q"), Element::atom("1")}}});
  EXPECT_EQ(a.scale(), interval_scale(l));
  EXPECT_EQ(code_of([&] {
              lviss_formal_to_sv({"p"}, l, {{"p", {Element::atom("p"), Element::atom("q")}}});
            }),
            ErrorCode::IntervalViolation);
}

}  // namespace
}  // namespace svset
