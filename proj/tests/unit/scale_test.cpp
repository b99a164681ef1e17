#include <gtest/gtest.h>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "svset/error.hpp"
#include "svset/scale.hpp"

namespace svset {
namespace {

using testing::chain4_fixing_middle;

Element q(const char* text) { return Element::rational(text); }
Element qq(const char* a, const char* b) { return Element::pair(q(a), q(b)); }
Element n(std::int64_t v) { return Element::integer(v); }
Element at(const char* name) { return Element::atom(name); }

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

TEST(ScaleOps, Join) {
  EXPECT_EQ(chain_scale(10).join(n(3), n(7)), n(7));
  EXPECT_EQ(ifs_scale().join(qq("0.6", "0.3"), qq("0.4", "0.2")), qq("0.6", "0.2"));
  EXPECT_EQ(m3_scale().join(at("p"), at("q")), at("1"));
}

TEST(ScaleOps, Meet) {
  EXPECT_EQ(ifs_scale().meet(qq("0.6", "0.3"), qq("0.4", "0.2")), qq("0.4", "0.3"));
  EXPECT_EQ(m3_scale().meet(at("p"), at("q")), at("0"));
  const Scale ev = product_scale(unit_scale(), chain_scale(10));
  EXPECT_EQ(ev.meet(Element::pair(q("0.9"), n(8)), Element::pair(q("0.5"), n(3))), Element::pair(q("0.5"), n(3)));
}

TEST(ScaleOps, Neg) {
  EXPECT_EQ(unit_scale().neg(q("0.3")), q("0.7"));
  const Element boundary = Element::pair(n(0), n(1));
  EXPECT_EQ(rough_scale().neg(boundary), boundary);
  EXPECT_EQ(interval_scale(unit_scale()).neg(qq("0.2", "0.5")), qq("0.5", "0.8"));
  EXPECT_EQ(m3_scale(M3Negation::Swap).neg(at("p")), at("q"));
  EXPECT_EQ(m3_scale(M3Negation::Fix).neg(at("p")), at("p"));
}

TEST(ScaleOps, Leq) {
  EXPECT_TRUE(chain_scale(5).leq(n(2), n(4)));
  EXPECT_TRUE(ifs_scale().leq(qq("0.3", "0.5"), qq("0.6", "0.2")));
  EXPECT_FALSE(m3_scale().leq(at("p"), at("q")));
  EXPECT_FALSE(m3_scale().leq(at("q"), at("p")));
}

TEST(ScaleOps, ForeignValuesAreRejected) {
  EXPECT_EQ(code_of([] { chain_scale(3).join(n(2), n(4)); }), ErrorCode::ElementNotInCarrier);
  EXPECT_EQ(code_of([] { unit_scale().neg(q("1.5")); }), ErrorCode::ElementNotInCarrier);
  EXPECT_EQ(code_of([] { ifs_scale().neg(qq("0.6", "0.5")); }), ErrorCode::ElementNotInCarrier);
  EXPECT_EQ(code_of([] { interval_scale(unit_scale()).neg(qq("0.6", "0.5")); }), ErrorCode::ElementNotInCarrier);
  EXPECT_EQ(code_of([] { bool_scale().neg(n(1)); }), ErrorCode::ElementNotInCarrier);
  EXPECT_EQ(code_of([] { m3_scale().neg(at("r")); }), ErrorCode::ElementNotInCarrier);
}

TEST(ProductScale, Examples) {
  const Scale bb = product_scale(bool_scale(), bool_scale());
  EXPECT_EQ(bb.neg(Element::pair(Element::boolean(true), Element::boolean(false))),
            Element::pair(Element::boolean(false), Element::boolean(true)));
  EXPECT_EQ(product_scale(unit_scale(), chain_scale(10)).top(), Element::pair(q("1"), n(10)));
  const Scale ev5 = product_scale(unit_scale(), chain_scale(5));
  const Element a = Element::pair(q("0.6"), n(2));
  const Element b = Element::pair(q("0.65"), n(4));
  const Element j = ev5.join(a, b);
  EXPECT_EQ(j, b);
  // Componentwise cross-check through the order.
  EXPECT_TRUE(ev5.leq(a, j) && ev5.leq(b, j));
}

TEST(IntervalScale, Examples) {
  const Scale iu = interval_scale(unit_scale());
  EXPECT_EQ(iu.join(qq("0.2", "0.6"), qq("0.3", "0.5")), qq("0.3", "0.6"));
  EXPECT_EQ(iu.neg(qq("0", "1")), qq("0", "1"));
  const Scale ic = interval_scale(chain_scale(4));
  EXPECT_EQ(ic.meet(Element::pair(n(1), n(2)), Element::pair(n(2), n(3))), Element::pair(n(1), n(2)));
  EXPECT_EQ(iu.bottom(), qq("0", "0"));
  EXPECT_EQ(iu.top(), qq("1", "1"));
}

TEST(FunctionScale, Examples) {
  const Scale f3 = function_scale({Rational(0), Rational(1, 2), Rational(1)});
  EXPECT_EQ(f3.neg(Element::tuple({q("0"), q("0.5"), q("1")})), Element::tuple({q("1"), q("0.5"), q("0")}));
  EXPECT_EQ(f3.top(), Element::tuple({q("1"), q("1"), q("1")}));
  const Scale f2 = function_scale({Rational(0), Rational(1)});
  EXPECT_EQ(f2.join(Element::tuple({q("0.2"), q("0.8")}), Element::tuple({q("0.4"), q("0.1")})),
            Element::tuple({q("0.4"), q("0.8")}));
}

TEST(FunctionScale, BadGrids) {
  EXPECT_EQ(code_of([] { function_scale({}); }), ErrorCode::BadGrid);
  EXPECT_EQ(code_of([] { function_scale({Rational(1, 2), Rational(1, 4)}); }), ErrorCode::BadGrid);
  EXPECT_EQ(code_of([] { function_scale({Rational(0), Rational(0)}); }), ErrorCode::BadGrid);
  EXPECT_EQ(code_of([] { function_scale({Rational(3, 2)}); }), ErrorCode::BadGrid);
}

TEST(FiniteScale, ShippedPresentationsBuild) {
  FiniteLatticeSpec m3{{"0", "p", "q", "1"}, {{"0", "p"}, {"0", "q"}, {"p", "1"}, {"q", "1"}},
                       {{"0", "1"}, {"p", "q"}, {"q", "p"}, {"1", "0"}}, "0", "1"};
  EXPECT_NO_THROW(build_finite_scale(m3));
  m3.neg = {{"0", "1"}, {"p", "p"}, {"q", "q"}, {"1", "0"}};
  EXPECT_NO_THROW(build_finite_scale(m3));

  FiniteLatticeSpec rough{{"00", "01", "11"}, {{"00", "01"}, {"01", "11"}}, {{"00", "11"}, {"01", "01"}, {"11", "00"}},
                          "00", "11"};
  const Scale r = build_finite_scale(rough);
  EXPECT_EQ(r.neg(at("00")), at("11"));
}

TEST(FiniteScale, AtomFixingSquareIsDeMorgan) {
  // Fixing both atoms of the Boolean square is still an antitone involution.
  const Scale s = build_finite_scale(testing::square_fixing_atoms());
  EXPECT_TRUE(verify_scale_laws(s, Sampling::exhaustive()).all_passed());
}

TEST(FiniteScale, RejectsBrokenPresentations) {
  EXPECT_EQ(code_of([] { build_finite_scale(chain4_fixing_middle()); }), ErrorCode::DeMorganViolation);

  FiniteLatticeSpec not_involutive = testing::boolean_square();
  not_involutive.neg["a"] = "1";
  EXPECT_EQ(code_of([&] { build_finite_scale(not_involutive); }), ErrorCode::BadInvolution);

  // Two maximal elements: no join for the atoms.
  FiniteLatticeSpec vee{{"0", "a", "b"}, {{"0", "a"}, {"0", "b"}}, {{"0", "0"}, {"a", "b"}, {"b", "a"}}, "0", "a"};
  EXPECT_EQ(code_of([&] { build_finite_scale(vee); }), ErrorCode::NotALattice);

  FiniteLatticeSpec wrong_top = testing::chain_spec(2);
  wrong_top.top = "c1";
  EXPECT_EQ(code_of([&] { build_finite_scale(wrong_top); }), ErrorCode::BoundsMismatch);

  FiniteLatticeSpec cycle = testing::chain_spec(2);
  cycle.covers.emplace_back("c2", "c0");
  EXPECT_EQ(code_of([&] { build_finite_scale(cycle); }), ErrorCode::NotALattice);
}

TEST(FiniteScale, AcceptsExactlyWhatTheLawCheckAccepts) {
  // Every involution on the 4-chain and on the square: the builder and the
  // unverified scale's law report must agree.
  const std::vector<std::string> names{"0", "a", "b", "1"};
  for (auto base : {testing::chain4_fixing_middle(), testing::boolean_square()}) {
    std::vector<std::string> images = names;
    std::sort(images.begin(), images.end());
    do {
      base.neg.clear();
      for (std::size_t i = 0; i < names.size(); ++i) base.neg[names[i]] = images[i];
      bool built = true;
      try {
        build_finite_scale(base);
      } catch (const Error&) {
        built = false;
      }
      const Scale raw = build_finite_scale_unverified(base);
      EXPECT_EQ(built, verify_scale_laws(raw, Sampling::exhaustive()).all_passed());
      EXPECT_EQ(built, testing::oracle_lattice_defect(raw).empty());
    } while (std::next_permutation(images.begin(), images.end()));
  }
}

TEST(Laws, ExhaustiveOnFiniteScales) {
  std::vector<Scale> scales{bool_scale(), rough_scale(), m3_scale(M3Negation::Swap), m3_scale(M3Negation::Fix)};
  for (std::int64_t k = 1; k <= 6; ++k) scales.push_back(chain_scale(k));
  for (const auto& s : testing::custom_fixtures()) scales.push_back(s);
  scales.push_back(product_scale(bool_scale(), chain_scale(2)));
  scales.push_back(interval_scale(chain_scale(3)));
  scales.push_back(interval_scale(m3_scale()));
  for (const auto& s : scales) {
    const LawReport r = verify_scale_laws(s, Sampling::exhaustive());
    EXPECT_TRUE(r.all_passed()) << s.signature() << ": " << (r.first_failure() ? r.first_failure()->law : "");
    EXPECT_EQ(testing::oracle_lattice_defect(s), "") << s.signature();
  }
}

TEST(Laws, RandomOnInfiniteScales) {
  const std::vector<Scale> scales{unit_scale(),
                                  ifs_scale(),
                                  product_scale(unit_scale(), chain_scale(10)),
                                  interval_scale(unit_scale()),
                                  function_scale({Rational(0), Rational(1, 4), Rational(1, 2), Rational(1)})};
  for (const auto& s : scales) {
    EXPECT_TRUE(verify_scale_laws(s, Sampling::random(300, 1)).all_passed()) << s.signature();
  }
}

TEST(Laws, RandomModeIsReproducible) {
  const auto a = verify_scale_laws(ifs_scale(), Sampling::random(50, 9));
  const auto b = verify_scale_laws(ifs_scale(), Sampling::random(50, 9));
  ASSERT_EQ(a.laws.size(), b.laws.size());
  for (std::size_t i = 0; i < a.laws.size(); ++i) EXPECT_EQ(a.laws[i].checked, b.laws[i].checked);
}

TEST(Laws, ExhaustiveNeedsFiniteCarrier) {
  EXPECT_EQ(code_of([] { verify_scale_laws(unit_scale(), Sampling::exhaustive()); }),
            ErrorCode::InfiniteCarrierExhaustive);
}

TEST(Laws, CorruptedLatticeFailsWithWitness) {
  const Scale broken = build_finite_scale_unverified(chain4_fixing_middle());
  const LawReport r = verify_scale_laws(broken, Sampling::exhaustive());
  EXPECT_FALSE(r.all_passed());
  const LawResult* antitone = r.find("antitone");
  ASSERT_NE(antitone, nullptr);
  EXPECT_FALSE(antitone->passed);
  ASSERT_EQ(antitone->witness.size(), 2U);
  // The witness is a comparable pair whose negations do not reverse.
  const Element& a = antitone->witness[0];
  const Element& b = antitone->witness[1];
  const bool violated = (broken.leq(a, b) && !broken.leq(broken.neg(b), broken.neg(a))) ||
                        (broken.leq(b, a) && !broken.leq(broken.neg(a), broken.neg(b)));
  EXPECT_TRUE(violated);
}

TEST(Laws, OrderAgreesWithJoinAndMeet) {
  std::mt19937_64 rng(3);
  for (const auto& s : {ifs_scale(), interval_scale(unit_scale()), product_scale(unit_scale(), chain_scale(4))}) {
    for (int i = 0; i < 200; ++i) {
      const Element a = s.sample(rng);
      const Element b = s.sample(rng);
      EXPECT_EQ(s.leq(a, b), s.join(a, b) == b);
      EXPECT_EQ(s.leq(a, b), s.meet(a, b) == a);
    }
    EXPECT_EQ(s.neg(s.bottom()), s.top());
    EXPECT_EQ(s.neg(s.top()), s.bottom());
  }
}

TEST(Homs, IdentityAndBoolIntoChain) {
  EXPECT_TRUE(verify_scale_hom(ScaleHom::identity(chain_scale(5)), Sampling::exhaustive()).all_passed());
  const ScaleHom h = ScaleHom::from_table(bool_scale(), chain_scale(4),
                                          {{Element::boolean(false), n(0)}, {Element::boolean(true), n(4)}});
  EXPECT_TRUE(verify_scale_hom(h, Sampling::exhaustive()).all_passed());
}

TEST(Homs, CollapsingTheMiddleOfAChainFails) {
  for (bool middle : {false, true}) {
    const ScaleHom h = ScaleHom::from_table(
        chain_scale(2), bool_scale(),
        {{n(0), Element::boolean(false)}, {n(1), Element::boolean(middle)}, {n(2), Element::boolean(true)}});
    const LawReport r = verify_scale_hom(h, Sampling::exhaustive());
    EXPECT_FALSE(r.all_passed());
    const LawResult* neg = r.find("preserves-neg");
    ASSERT_NE(neg, nullptr);
    EXPECT_FALSE(neg->passed);
    EXPECT_FALSE(neg->witness.empty());
  }
}

TEST(Homs, MissingTableEntryIsReported) {
  const ScaleHom h = ScaleHom::from_table(chain_scale(2), bool_scale(), {{n(0), Element::boolean(false)}});
  const LawReport r = verify_scale_hom(h, Sampling::exhaustive());
  ASSERT_NE(r.find("total"), nullptr);
  EXPECT_FALSE(r.find("total")->passed);
}

TEST(Signatures, StructuralEquality) {
  EXPECT_EQ(product_scale(unit_scale(), chain_scale(10)).signature(), "product(unit-rational,chain(10))");
  EXPECT_EQ(chain_scale(3), chain_scale(3));
  EXPECT_NE(chain_scale(3), chain_scale(4));
  EXPECT_NE(m3_scale(M3Negation::Swap), m3_scale(M3Negation::Fix));
}

}  // namespace
}  // namespace svset
