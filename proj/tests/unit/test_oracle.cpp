#include <gtest/gtest.h>

#include "ryd/oracle.hpp"
#include "ryd/table.hpp"
#include "support.hpp"

using namespace ryd;
using ryd::test::fam;
using ryd::test::S;

TEST(Poly, Arithmetic) {
  const auto a = RestrictionPoly::linear({1, 0});
  const auto b = RestrictionPoly::linear({0, 1});
  const auto p = (a + b) * (a + b);
  EXPECT_EQ(p.degree(), 2);
  EXPECT_TRUE(p.is_homogeneous());
  EXPECT_EQ(p.terms().size(), 3u);
  EXPECT_EQ(p.evaluate({Rational(1), Rational(2)}), Rational(9));
  EXPECT_FALSE((p + RestrictionPoly::constant(2, 1)).is_homogeneous());
  EXPECT_EQ(RestrictionPoly(2).degree(), -1);
}

TEST(Billey, TrivialCases) {
  const auto rs = RootSystem::build(CartanType::B, 3);
  const auto e = WeylElement::identity(3);
  for (const auto& rep : minimal_coset_reps(rs, {2})) {
    EXPECT_EQ(billey_restriction(e, rep.w, rs), RestrictionPoly::constant(3, 1));
  }
  const auto a1 = RootSystem::build(CartanType::A, 3);
  const auto s1 = a1.simple_reflections()[0];
  EXPECT_EQ(billey_restriction(s1, s1, a1), RestrictionPoly::linear({1, 0}));
}

TEST(Billey, DegreeAndSupport) {
  const auto rs = RootSystem::build(CartanType::C, 3);
  const auto reps = minimal_coset_reps(rs, {2});
  for (const auto& u : reps) {
    for (const auto& w : reps) {
      const auto p = billey_restriction(u.w, w.w, rs);
      if (p.is_zero()) {
        EXPECT_FALSE(bruhat_leq_weyl(u.w, w.w, rs));
        continue;
      }
      EXPECT_TRUE(bruhat_leq_weyl(u.w, w.w, rs));
      EXPECT_TRUE(p.is_homogeneous());
      EXPECT_EQ(p.degree(), u.length);
    }
  }
}

// The subword sum does not depend on which reduced word of w is used.
TEST(Billey, ReducedWordIndependence) {
  for (auto [type, n] : {std::pair{CartanType::B, 3}, {CartanType::D, 4}, {CartanType::G2, 2}, {CartanType::A, 4}}) {
    const auto rs = RootSystem::build(type, n);
    const auto reps = minimal_coset_reps(rs, {2});
    for (const auto& w : reps) {
      if (w.length > 6) continue;
      const auto words = all_reduced_words(w.w, rs);
      ASSERT_FALSE(words.empty());
      for (const auto& u : reps) {
        if (u.length > w.length) continue;
        const auto ref = billey_restriction(u.w, w.w, rs, words.front());
        for (const auto& word : words) ASSERT_EQ(billey_restriction(u.w, w.w, rs, word), ref);
      }
    }
  }
}

TEST(Billey, ValuesMatchPolynomials) {
  const auto rs = RootSystem::build(CartanType::B, 3);
  const std::vector<Rational> ones(3, Rational(1));
  for (const auto& w : minimal_coset_reps(rs, {2})) {
    const auto values = billey_values(w.w, rs);
    for (const auto& u : minimal_coset_reps(rs, {2})) {
      const auto it = values.find(u.w);
      const BigInt v = it == values.end() ? BigInt(0) : it->second;
      EXPECT_EQ(Rational(v), billey_restriction(u.w, w.w, rs).evaluate(ones));
    }
  }
}

TEST(Oracle, TrivialConstants) {
  const CosetOracle o(RootSystem::build(CartanType::B, 3), {2});
  for (std::size_t u = 0; u < o.cosets().size(); ++u) {
    EXPECT_EQ(o.constant(static_cast<int>(u), 0, static_cast<int>(u)), Rational(1));
    const auto p = o.product(0, static_cast<int>(u));
    ASSERT_EQ(p.size(), 1u);
    EXPECT_EQ(p.begin()->first, static_cast<int>(u));
  }
  EXPECT_EQ(o.index_of(WeylElement({-1, -2, -3})), -1);
}

// Shape order equals Bruhat order of the coset representatives.
TEST(Oracle, ShapeBruhatMatchesSubwordOrder) {
  for (auto k : {FamilyKind::Flag, FamilyKind::LG, FamilyKind::OGodd, FamilyKind::OGeven, FamilyKind::ChainB,
                 FamilyKind::ChainC, FamilyKind::G2P1, FamilyKind::G2P2}) {
    for (int n : {4, 5}) {
      const Family f = fam(k, n);
      const auto g = indexing_geometry(f);
      const auto rs = RootSystem::build(g.type, g.rank);
      const auto shapes = enumerate_shapes(f);
      for (const auto& a : shapes) {
        for (const auto& b : shapes) {
          ASSERT_EQ(bruhat_leq(a, b), bruhat_leq_weyl(shape_to_coset(a), shape_to_coset(b), rs))
              << to_string(f) << ' ' << format_shape(a) << " <= " << format_shape(b);
        }
      }
    }
  }
}

TEST(Oracle, IntroductionExamples) {
  const Family lg = fam(FamilyKind::LG, 4);
  const FamilyOracle o(lg);
  EXPECT_EQ(o.product(S(lg, "3,1|off"), S(lg, "3,2|off")), multiply(S(lg, "3,1|off"), S(lg, "3,2|off")));
  const Family d = fam(FamilyKind::OGeven, 6);
  const FamilyOracle od(d);
  EXPECT_EQ(od.product(S(d, "4,1|off|up"), S(d, "4,2|off|down")),
            multiply(S(d, "4,1|off|up"), S(d, "4,2|off|down")));
}

class OracleTable : public ::testing::TestWithParam<std::pair<FamilyKind, int>> {};

TEST_P(OracleTable, RulesMatchLocalization) {
  const auto [k, n] = GetParam();
  const auto r = verify_against_oracle(StructTable::from_rules(fam(k, n)));
  EXPECT_TRUE(r.ok()) << r.failures.front();
}

INSTANTIATE_TEST_SUITE_P(Small, OracleTable,
                         ::testing::Values(std::pair{FamilyKind::Flag, 4}, std::pair{FamilyKind::LG, 3},
                                           std::pair{FamilyKind::OGodd, 4}, std::pair{FamilyKind::OGeven, 4},
                                           std::pair{FamilyKind::ChainB, 4}, std::pair{FamilyKind::ChainC, 4},
                                           std::pair{FamilyKind::G2P1, 2}, std::pair{FamilyKind::G2P2, 2}),
                         ryd::test::FamilyParamName());

TEST(Monk, FlagDegreeOne) {
  for (int n = 3; n <= 5; ++n) EXPECT_TRUE(verify_monk(n).ok()) << n;
}

TEST(Monk, RejectsNonPermutation) {
  EXPECT_THROW(monk_multiply(WeylElement({-1, 2, 3}), 1, 3), std::invalid_argument);
}
