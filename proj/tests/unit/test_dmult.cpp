#include <gtest/gtest.h>

#include "ryd/dmult.hpp"
#include "ryd/table.hpp"
#include "support.hpp"

using namespace ryd;
using ryd::test::expansion;
using ryd::test::fam;
using ryd::test::S;

namespace {

FlatCombo flat(std::initializer_list<std::tuple<int, int, bool, std::int64_t>> terms) {
  FlatCombo c;
  for (const auto& [a, b, on, k] : terms) c.add(FlatShape{a, b, on}, k);
  return c;
}

}  // namespace

TEST(Diamond, WorkedExample) {
  EXPECT_EQ(diamond({4, 1, false}, {4, 2, false}, 6),
            flat({{8, 2, true, 1}, {7, 3, true, 2}, {6, 4, true, 2}, {5, 5, true, 1}}));
}

TEST(Diamond, IdentityAndOnOn) {
  EXPECT_EQ(diamond({0, 0, false}, {3, 1, false}, 5), flat({{3, 1, false, 1}}));
  EXPECT_TRUE(diamond({4, 2, true}, {3, 3, true}, 5).empty());
}

TEST(Eta, Cases) {
  const Family d6 = fam(FamilyKind::OGeven, 6), d5 = fam(FamilyKind::OGeven, 5);
  EXPECT_EQ(eta(S(d6, "4,1|off|up"), S(d6, "4,0|off|up")), 2);
  EXPECT_EQ(eta(S(d6, "4,1|off|up"), S(d6, "4,2|off|down")), 0);
  EXPECT_EQ(eta(S(d6, "1,0|off"), S(d6, "4,2|off|down")), 1);
  EXPECT_EQ(eta(S(d5, "3,0|off|up"), S(d5, "3,0|off|up")), 0);
  EXPECT_EQ(eta(S(d5, "3,0|off|up"), S(d5, "3,0|off|down")), 2);
}

TEST(Star, WorkedExampleStages) {
  const Family f = fam(FamilyKind::OGeven, 6);
  StarTrace t;
  const auto r = star(S(f, "4,1|off|up"), S(f, "4,2|off|down"), &t);
  EXPECT_FALSE(t.base_case);
  EXPECT_EQ(t.diamond, flat({{8, 2, true, 1}, {7, 3, true, 2}, {6, 4, true, 2}, {5, 5, true, 1}}));
  EXPECT_EQ(t.after_eta, flat({{7, 3, true, 2}, {6, 4, true, 2}, {5, 5, true, 1}}));
  EXPECT_EQ(t.after_fsh, flat({{7, 3, true, 1}, {6, 4, true, 2}, {5, 5, true, 1}}));
  EXPECT_EQ(to_expansion(r),
            expansion(f, {{"7,3|on", 1}, {"6,4|on|up", 1}, {"6,4|on|down", 1}, {"5,5|on", 1}}));
}

TEST(Star, EtaKillsFullFirstRow) {
  const Family f = fam(FamilyKind::OGeven, 6);
  EXPECT_EQ(multiply(S(f, "4,0|off|down"), S(f, "4,2|off|up")),
            expansion(f, {{"7,2|on", 1}, {"6,3|on", 1}, {"5,4|on|up", 1}}));
}

TEST(Star, BaseCaseMatchedCharges) {
  const Family f = fam(FamilyKind::OGeven, 5);
  StarTrace t;
  const auto r = star(S(f, "3,0|off|down"), S(f, "3,0|off|down"), &t);
  EXPECT_TRUE(t.base_case);
  EXPECT_EQ(to_expansion(r), expansion(f, {{"5,1|off", 1}, {"3,3|off|down", 1}}));
}

TEST(Star, BaseCaseOppositeCharges) {
  const Family f = fam(FamilyKind::OGeven, 5);
  EXPECT_EQ(multiply(S(f, "3,0|off|up"), S(f, "3,0|off|down")), expansion(f, {{"6,0|off", 1}, {"4,2|off", 1}}));
}

TEST(Star, IdentityAndCommutativity) {
  for (int n = 4; n <= 6; ++n) {
    const Family f = fam(FamilyKind::OGeven, n);
    const auto shapes = enumerate_shapes(f);
    for (const auto& a : shapes) {
      EXPECT_EQ(multiply(S(f, "0,0|off"), a), (Expansion{{a, 1}}));
      for (const auto& b : shapes) ASSERT_EQ(multiply(a, b), multiply(b, a));
    }
  }
}

TEST(Star, AssociativeAtNFour) {
  const auto r = verify_associativity(StructTable::from_rules(fam(FamilyKind::OGeven, 4)));
  EXPECT_EQ(r.checked, 24u * 24u * 24u);
  EXPECT_TRUE(r.ok()) << r.failures.front();
}

TEST(Star, Pieri) {
  EXPECT_TRUE(is_pieri({3, 0, false}));
  EXPECT_TRUE(is_pieri({6, 0, true}));
  EXPECT_FALSE(is_pieri({3, 1, false}));
}

TEST(Star, ValueSetGrowsWithRank) {
  auto observed = [](int n) { return verify_values(StructTable::from_rules(fam(FamilyKind::OGeven, n))).observed; };
  EXPECT_EQ(observed(5), (std::vector<std::int64_t>{0, 1, 2}));
  EXPECT_EQ(observed(6), (std::vector<std::int64_t>{0, 1, 2, 4}));
  EXPECT_EQ(observed(7), (std::vector<std::int64_t>{0, 1, 2, 4, 8}));
}
