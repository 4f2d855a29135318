#include <gtest/gtest.h>

#include "ryd/nonzero.hpp"
#include "support.hpp"

using namespace ryd;
using ryd::test::fam;
using ryd::test::S;

TEST(Predicate, Examples) {
  const Family og4 = fam(FamilyKind::OGodd, 4);
  EXPECT_TRUE(nonzero_predicate(S(og4, "2,1|off"), S(og4, "3,2|off"), S(og4, "4,3|on")));
  const Family lg4 = fam(FamilyKind::LG, 4);
  EXPECT_FALSE(nonzero_predicate(S(lg4, "1,0|off"), S(lg4, "1,0|off"), S(lg4, "5,0|on")));
  const Family fl5 = fam(FamilyKind::Flag, 5);
  EXPECT_TRUE(nonzero_predicate(S(fl5, "2,0|off"), S(fl5, "1,2|off"), S(fl5, "3,1|on")));
}

TEST(Predicate, TripleVector) {
  const Family og4 = fam(FamilyKind::OGodd, 4);
  const auto v = triple_vector(S(og4, "2,1|off"), S(og4, "3,2|off"), S(og4, "4,3|on"));
  EXPECT_EQ(v.concat(), (std::vector<int>{2, 1, 0, 3, 2, 0, 4, 3, 1}));
  EXPECT_EQ(shape_vector(S(fam(FamilyKind::OGeven, 6), "6,4|on|up")), (std::vector<int>{4, 3, 2, 1, 1}));
}

TEST(Predicate, RejectsMixedFamilies) {
  const Family a = fam(FamilyKind::LG, 4), b = fam(FamilyKind::OGodd, 4);
  EXPECT_THROW(nonzero_predicate(S(a, "1,0|off"), S(b, "1,0|off"), S(a, "2,0|off")), std::invalid_argument);
}

class Polytope : public ::testing::TestWithParam<std::pair<FamilyKind, int>> {};

TEST_P(Polytope, PredicateMatchesRules) {
  const auto [k, n] = GetParam();
  const auto r = verify_polytope_description(fam(k, n));
  EXPECT_GT(r.checked, 0u);
  EXPECT_TRUE(r.ok()) << r.failures.size() << " mismatches, first " << r.failures.front();
}

INSTANTIATE_TEST_SUITE_P(Families, Polytope,
                         ::testing::Values(std::pair{FamilyKind::Flag, 4}, std::pair{FamilyKind::Flag, 6},
                                           std::pair{FamilyKind::LG, 4}, std::pair{FamilyKind::OGodd, 5},
                                           std::pair{FamilyKind::ChainB, 5}, std::pair{FamilyKind::ChainC, 5},
                                           std::pair{FamilyKind::G2P1, 2}, std::pair{FamilyKind::G2P2, 2},
                                           std::pair{FamilyKind::OGeven, 4}, std::pair{FamilyKind::OGeven, 5}),
                         ryd::test::FamilyParamName());

TEST(Witness, LineAtNFour) {
  const auto w = find_nonconvexity_witness(4);
  EXPECT_TRUE(w.collinear);
  EXPECT_EQ(w.pattern, "NZN");
  ASSERT_EQ(w.points.size(), 3u);
  EXPECT_EQ(w.points[0].vector, (std::vector<int>{2, 0, 0, 0, 0, 2, 0, 0, 0, 0, 2, 0, 2, 0, 0}));
}

TEST(Witness, LineAlternatesForLargerN) {
  for (int n = 5; n <= 8; ++n) {
    const auto w = find_nonconvexity_witness(n);
    EXPECT_TRUE(w.collinear) << n;
    EXPECT_TRUE(w.alternates) << n << ' ' << w.pattern;
    EXPECT_EQ(w.pattern, n % 2 ? "ZNZN" : "NZNZ") << n;
  }
}

TEST(Witness, FlattenedImagesAtNFive) {
  const auto w = find_nonconvexity_witness(5);
  std::vector<FlatShape> got;
  for (const auto& p : w.points) got.push_back(flatten(p.nu));
  EXPECT_EQ(got, (std::vector<FlatShape>{{6, 0, false}, {5, 1, false}, {4, 2, false}, {3, 3, false}}));
}

TEST(Witness, Examples) {
  const auto ws = example_witnesses();
  ASSERT_EQ(ws.size(), 3u);
  EXPECT_EQ(ws[0].pattern, "ZNZ");
  EXPECT_EQ(ws[1].pattern, "NZN");
  EXPECT_EQ(ws[2].pattern, "NZN");
  for (const auto& w : ws) EXPECT_TRUE(w.collinear) << w.label;
}

TEST(Encodings, RoundTrip) {
  for (const auto& s : enumerate_shapes(fam(FamilyKind::OGeven, 5))) {
    EXPECT_EQ(shape_from_columns(5, shape_columns(s)), s);
    EXPECT_EQ(shape_from_flat_vector(5, shape_flat_vector(s)), s);
    EXPECT_EQ(shape_from_layers(5, shape_vector(s)), s);
  }
  EXPECT_THROW(shape_from_columns(5, {0, 1, 0, 0, 0, 0, 0}), std::invalid_argument);
}
