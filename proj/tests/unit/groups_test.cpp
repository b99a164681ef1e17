#include <gtest/gtest.h>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "svset/encodings.hpp"
#include "svset/error.hpp"
#include "svset/groups.hpp"

namespace svset {
namespace {

Element n(std::int64_t v) { return Element::integer(v); }

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

SVSet on_group(const FiniteGroup& g, const Scale& s, std::vector<Element> values) {
  return SVSet::unparameterized(g.universe(), s, std::move(values));
}

// Every function G -> carrier, encoded in base |carrier|.
std::vector<SVSet> all_functions(const FiniteGroup& g, const Scale& s) {
  const std::vector<Element> carrier = s.carrier();
  std::size_t total = 1;
  for (std::size_t i = 0; i < g.order(); ++i) total *= carrier.size();
  std::vector<SVSet> out;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<Element> values;
    std::size_t rest = code;
    for (std::size_t i = 0; i < g.order(); ++i) {
      values.push_back(carrier[rest % carrier.size()]);
      rest /= carrier.size();
    }
    out.push_back(on_group(g, s, values));
  }
  return out;
}

TEST(FiniteGroups, BuiltinsValidate) {
  EXPECT_EQ(cyclic_group(6).order(), 6U);
  EXPECT_EQ(symmetric_group_3().order(), 6U);
  EXPECT_EQ(dihedral_group_4().order(), 8U);
  EXPECT_EQ(builtin_group("Z4").order(), 4U);
  const FiniteGroup s3 = symmetric_group_3();
  const std::size_t a = s3.index_of("(12)");
  const std::size_t b = s3.index_of("(13)");
  // Non-abelian.
  EXPECT_NE(s3.multiply(a, b), s3.multiply(b, a));
  EXPECT_EQ(s3.label(s3.inverse(s3.index_of("(123)"))), "(132)");
  EXPECT_EQ(code_of([] { builtin_group("Q8"); }), ErrorCode::InvalidArgument);
}

TEST(FiniteGroups, RejectsBadTables) {
  const std::vector<std::string> e{"e", "a"};
  EXPECT_EQ(code_of([&] { FiniteGroup(e, {{"e", "a"}, {"a", "a"}}, "e"); }), ErrorCode::NotAGroup);
  EXPECT_EQ(code_of([&] { FiniteGroup(e, {{"e", "a"}, {"a", "b"}}, "e"); }), ErrorCode::NotAGroup);
  EXPECT_EQ(code_of([&] { FiniteGroup(e, {{"e", "a"}, {"a", "e"}}, "a"); }), ErrorCode::NotAGroup);
  EXPECT_EQ(code_of([&] { FiniteGroup(e, {{"e", "a"}}, "e"); }), ErrorCode::NotAGroup);
  // Left-zero on {e,a,b} with a twist: every row a permutation but not associative.
  const std::vector<std::string> three{"e", "a", "b"};
  EXPECT_EQ(code_of([&] { FiniteGroup(three, {{"e", "a", "b"}, {"a", "e", "e"}, {"b", "b", "e"}}, "e"); }),
            ErrorCode::NotAGroup);
  EXPECT_NO_THROW(FiniteGroup(e, {{"e", "a"}, {"a", "e"}}, "e"));
}

TEST(GroupHoms, ReductionAndRejection) {
  const GroupHom r = reduction_hom(6, 3);
  EXPECT_EQ(r(5), 2U);
  EXPECT_EQ(code_of([] { reduction_hom(6, 4); }), ErrorCode::InvalidArgument);
  const FiniteGroup z4 = cyclic_group(4);
  const FiniteGroup z2 = cyclic_group(2);
  EXPECT_EQ(code_of([&] { GroupHom(z4, z2, {{"0", "0"}, {"1", "1"}, {"2", "1"}, {"3", "0"}}); }),
            ErrorCode::NotAHomomorphism);
  EXPECT_EQ(code_of([&] { GroupHom(z4, z2, {{"0", "0"}, {"1", "1"}}); }), ErrorCode::NonTotalMap);
}

TEST(SubgroupCheck, ChainFunctionsOnZ4) {
  // Z4 has subgroups {0}, {0,2}, Z4. Over chain(2) the subgroups are the
  // decreasing assignments along that tower with A(0) = 2.
  const FiniteGroup z4 = cyclic_group(4);
  const Scale c2 = chain_scale(2);
  std::size_t passing = 0;
  for (const SVSet& a : all_functions(z4, c2)) {
    const auto v = [&](std::size_t i) { return a.at(i).as_integer(); };
    const bool expected = v(0) == 2 && v(1) == v(3) && v(1) <= v(2);
    const SubgroupReport r = is_sv_subgroup(z4, a);
    EXPECT_EQ(r.passed, expected);
    if (r.passed) ++passing;
    EXPECT_EQ(satisfies_symmetric_form(z4, a), expected);
  }
  EXPECT_EQ(passing, 6U);
}

TEST(SubgroupCheck, BoolFunctionsMatchBruteForceOnS3) {
  const FiniteGroup s3 = symmetric_group_3();
  const std::set<Subset> brute = testing::enumerate_subgroups(s3);
  EXPECT_EQ(brute.size(), 6U);
  std::set<Subset> found;
  for (const SVSet& a : all_functions(s3, bool_scale())) {
    const Subset support = sv_to_crisp(a);
    EXPECT_EQ(is_sv_subgroup(s3, a).passed, brute.count(support) == 1);
    EXPECT_EQ(is_crisp_subgroup(s3, support), brute.count(support) == 1);
    if (is_sv_subgroup(s3, a).passed) found.insert(support);
  }
  EXPECT_EQ(found, brute);
}

TEST(SubgroupCheck, D4HasTenSubgroups) {
  EXPECT_EQ(testing::enumerate_subgroups(dihedral_group_4()).size(), 10U);
  std::size_t count = 0;
  for (const SVSet& a : all_functions(dihedral_group_4(), bool_scale())) count += is_sv_subgroup(dihedral_group_4(), a).passed;
  EXPECT_EQ(count, 10U);
}

TEST(SubgroupCheck, FailureWitnesses) {
  const FiniteGroup z4 = cyclic_group(4);
  const Scale c2 = chain_scale(2);
  const SubgroupReport not_top = is_sv_subgroup(z4, on_group(z4, c2, {n(1), n(1), n(1), n(1)}));
  EXPECT_EQ(not_top.failure, "identity-not-top");
  const SubgroupReport bad = is_sv_subgroup(z4, on_group(z4, c2, {n(2), n(2), n(0), n(2)}));
  EXPECT_FALSE(bad.passed);
  EXPECT_EQ(bad.failure, "inequality");
  ASSERT_TRUE(bad.x && bad.y);
  EXPECT_EQ(code_of([&] { is_sv_subgroup(z4, SVSet::constant(testing::universe_of(4), ParamSet::unparameterized(), c2, n(2))); }),
            ErrorCode::UniverseMismatch);
}

TEST(SubgroupCheck, ParameterizedNeedsEverySlice) {
  const FiniteGroup z2 = cyclic_group(2);
  const Scale c1 = chain_scale(1);
  const ParamSet e({"p", "q"});
  // p slice is Z2, q slice has A(0) = 0.
  const SVSet a(z2.universe(), e, c1, {n(1), n(0), n(1), n(1)});
  const SubgroupReport r = is_sv_subgroup(z2, a);
  EXPECT_FALSE(r.passed);
  EXPECT_EQ(r.param, std::optional<std::string>("q"));
}

TEST(DerivedProperties, HoldOnEverySubgroup) {
  const FiniteGroup s3 = symmetric_group_3();
  const Scale c2 = chain_scale(2);
  std::size_t checked = 0;
  for (const SVSet& a : all_functions(s3, c2)) {
    if (!is_sv_subgroup(s3, a).passed) {
      EXPECT_EQ(code_of([&] { derived_properties_check(s3, a); }), ErrorCode::NotASubgroup);
      continue;
    }
    EXPECT_TRUE(derived_properties_check(s3, a).all_hold());
    ++checked;
  }
  EXPECT_GT(checked, 6U);
}

TEST(Levels, AgreeOnSmallGroups) {
  for (const FiniteGroup& g : {cyclic_group(4), cyclic_group(6), symmetric_group_3()}) {
    for (const Scale& s : {chain_scale(2), m3_scale()}) {
      if (g.order() == 6 && s.kind() == ScaleKind::M3Diamond) continue;
      for (const SVSet& a : all_functions(g, s)) {
        const EquivalenceReport r = level_equivalence_check(g, a);
        EXPECT_TRUE(r.agree());
        EXPECT_EQ(r.sv_subgroup, is_sv_subgroup(g, a).passed);
      }
    }
  }
}

TEST(Levels, NonChainScaleUsesEveryLevel) {
  // M3 levels p and q are incomparable; both must be subgroups.
  const FiniteGroup z4 = cyclic_group(4);
  const Scale m3 = m3_scale();
  const SVSet a = on_group(z4, m3, {Element::atom("1"), Element::atom("q"), Element::atom("p"), Element::atom("q")});
  EXPECT_FALSE(is_sv_subgroup(z4, a).passed);
  const EquivalenceReport r = level_equivalence_check(z4, a);
  EXPECT_FALSE(r.all_levels_subgroups);
  ASSERT_TRUE(r.failing_level.has_value());
  EXPECT_FALSE(is_crisp_subgroup(z4, level_subgroup(z4, a, *r.failing_level)));
  EXPECT_EQ(level_subgroup(z4, a, Element::atom("q")), (Subset{"0", "1", "3"}));
}

TEST(Levels, InfiniteScaleUsesMeetClosure) {
  const FiniteGroup z2 = cyclic_group(2);
  const SVSet a = on_group(z2, unit_scale(), {Element::rational("1"), Element::rational("1/3")});
  const EquivalenceReport r = level_equivalence_check(z2, a);
  EXPECT_TRUE(r.sv_subgroup);
  EXPECT_TRUE(r.agree());
  EXPECT_EQ(r.levels_checked, 2U);
}

TEST(Closure, MeetsAndPullbacks) {
  std::mt19937_64 rng(107);
  const FiniteGroup z6 = cyclic_group(6);
  const Scale c3 = chain_scale(3);
  std::vector<SVSet> subgroups;
  for (const SVSet& a : all_functions(z6, chain_scale(1))) {
    if (is_sv_subgroup(z6, a).passed) subgroups.push_back(transport(ScaleHom::from_table(chain_scale(1), c3, {{n(0), n(1)}, {n(1), n(3)}}), a));
  }
  ASSERT_EQ(subgroups.size(), 4U);
  for (int i = 0; i < 20; ++i) {
    const SVSet& a = subgroups[testing::pick(rng, subgroups.size())];
    const SVSet& b = subgroups[testing::pick(rng, subgroups.size())];
    const SVSet m = meet_subgroups(z6, {a, b});
    EXPECT_EQ(m, sv_intersection(a, b));
    EXPECT_TRUE(is_sv_subgroup(z6, m).passed);
  }
  EXPECT_EQ(code_of([&] { meet_subgroups(z6, {}); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([&] { meet_subgroups(z6, {SVSet::constant(z6.universe(), ParamSet::unparameterized(), c3, n(1))}); }),
            ErrorCode::NotASubgroup);

  const GroupHom r = reduction_hom(6, 3);
  for (const SVSet& b : all_functions(cyclic_group(3), c3)) {
    if (!is_sv_subgroup(cyclic_group(3), b).passed) continue;
    const SVSet pulled = pullback_subgroup(r, b);
    EXPECT_TRUE(is_sv_subgroup(z6, pulled).passed);
    for (std::size_t x = 0; x < 6; ++x) EXPECT_EQ(pulled.at(x), b.at(x % 3));
  }
}

}  // namespace
}  // namespace svset
