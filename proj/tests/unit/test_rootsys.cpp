#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "ryd/error.hpp"
#include "ryd/rootsys.hpp"

using namespace ryd;

namespace {

int count_short(const RootSystem& rs) {
  int k = 0;
  for (std::size_t i = 0; i < rs.positive_roots().size(); ++i) k += rs.is_short(static_cast<int>(i));
  return k;
}

}  // namespace

TEST(RootSystem, PositiveRootCounts) {
  EXPECT_EQ(RootSystem::build(CartanType::G2, 2).positive_roots().size(), 6u);
  EXPECT_EQ(RootSystem::build(CartanType::B, 4).positive_roots().size(), 16u);
  EXPECT_EQ(RootSystem::build(CartanType::D, 5).positive_roots().size(), 20u);
  for (int n = 3; n <= 7; ++n) {
    EXPECT_EQ(RootSystem::build(CartanType::A, n).positive_roots().size(), static_cast<std::size_t>(n * (n - 1) / 2));
    EXPECT_EQ(RootSystem::build(CartanType::C, n).positive_roots().size(), static_cast<std::size_t>(n * n));
  }
}

TEST(RootSystem, ShortRoots) {
  const auto g2 = RootSystem::build(CartanType::G2, 2);
  EXPECT_EQ(count_short(g2), 3);
  const auto b4 = RootSystem::build(CartanType::B, 4);
  EXPECT_EQ(count_short(b4), 4);
  for (std::size_t i = 0; i < b4.positive_roots().size(); ++i) {
    const auto& a = b4.positive_roots()[i].ambient;
    const int nz = static_cast<int>(std::count_if(a.begin(), a.end(), [](int x) { return x != 0; }));
    EXPECT_EQ(b4.is_short(static_cast<int>(i)), nz == 1);
  }
  const auto c4 = RootSystem::build(CartanType::C, 4);
  EXPECT_EQ(count_short(c4), 12);
  EXPECT_EQ(count_short(RootSystem::build(CartanType::D, 5)), 0);
  EXPECT_EQ(count_short(RootSystem::build(CartanType::A, 5)), 0);
}

TEST(RootSystem, G2HighestRootIsLong) {
  const auto g2 = RootSystem::build(CartanType::G2, 2);
  const auto& roots = g2.positive_roots();
  auto height = [](const Root& r) { return r.coeffs[0] + r.coeffs[1]; };
  const auto top = std::max_element(roots.begin(), roots.end(),
                                    [&](const Root& a, const Root& b) { return height(a) < height(b); });
  EXPECT_EQ(height(*top), 5);
  EXPECT_FALSE(g2.is_short(*top));
}

TEST(RootSystem, RejectsUnsupportedRanks) {
  EXPECT_THROW(RootSystem::build(CartanType::A, 2), ConfigError);
  EXPECT_THROW(RootSystem::build(CartanType::B, 1), ConfigError);
  EXPECT_THROW(RootSystem::build(CartanType::D, 3), ConfigError);
  EXPECT_THROW(RootSystem::build(CartanType::G2, 3), ConfigError);
}

TEST(RootSystem, ShortQueryRejectsForeignRoot) {
  const auto b3 = RootSystem::build(CartanType::B, 3);
  Root bogus{{2, 2, 2}, {4, 0, 0}, RootLength::Long};
  EXPECT_THROW(b3.is_short(bogus), ConfigError);
}

TEST(WeylElement, Composition) {
  const auto b3 = RootSystem::build(CartanType::B, 3);
  for (const auto& s : b3.simple_reflections()) {
    EXPECT_EQ(s * s, WeylElement::identity(3));
    EXPECT_EQ(b3.length(s), 1);
  }
  const WeylElement w({-2, 3, 1});
  EXPECT_EQ(w * w.inverse(), WeylElement::identity(3));
  EXPECT_EQ(w.sign_changes(), 1);
  EXPECT_TRUE(b3.is_valid_element(w));
  EXPECT_FALSE(RootSystem::build(CartanType::D, 4).is_valid_element(WeylElement({-1, 2, 3, 4})));
}

TEST(WeylElement, LengthMatchesReducedWord) {
  for (auto [type, n] : {std::pair{CartanType::B, 3}, {CartanType::C, 3}, {CartanType::D, 4}, {CartanType::G2, 2},
                         {CartanType::A, 4}}) {
    const auto rs = RootSystem::build(type, n);
    for (const auto& rep : minimal_coset_reps(rs, {1})) {
      const auto word = rs.reduced_word(rep.w);
      EXPECT_EQ(static_cast<int>(word.size()), rs.length(rep.w));
      EXPECT_EQ(rs.from_word(word), rep.w);
      EXPECT_EQ(static_cast<int>(rs.inversion_set(rep.w).size()), rep.length);
    }
  }
}

TEST(LambdaPoset, AdjointSizes) {
  EXPECT_EQ(lambda_poset(RootSystem::build(CartanType::B, 4), {2}).size(), 11u);
  EXPECT_EQ(lambda_poset(RootSystem::build(CartanType::D, 5), {2}).size(), 13u);
  EXPECT_EQ(lambda_poset(RootSystem::build(CartanType::A, 5), {1, 4}).size(), 7u);
  EXPECT_EQ(lambda_poset(RootSystem::build(CartanType::G2, 2), {2}).size(), 5u);
  for (int n = 3; n <= 7; ++n) {
    EXPECT_EQ(lambda_poset(RootSystem::build(CartanType::B, n), {2}).size() % 2, 1u);
    EXPECT_EQ(lambda_poset(RootSystem::build(CartanType::C, n), {1}).size(), static_cast<std::size_t>(2 * n - 1));
  }
}

TEST(LambdaPoset, UniqueMaximalElementIsHighestRoot) {
  for (auto [type, n, node] : {std::tuple{CartanType::B, 4, 2}, {CartanType::D, 5, 2}, {CartanType::C, 4, 1},
                               {CartanType::G2, 2, 2}}) {
    const auto rs = RootSystem::build(type, n);
    const auto p = lambda_poset(rs, {node});
    ASSERT_EQ(p.maximal_elements().size(), 1u);
    for (int g : p.ground()) EXPECT_TRUE(p.leq(g, p.maximal_elements()[0]));
  }
}

TEST(LambdaPoset, EmptyMarkingRejected) {
  EXPECT_THROW(lambda_poset(RootSystem::build(CartanType::B, 3), {}), ConfigError);
  EXPECT_THROW(lambda_poset(RootSystem::build(CartanType::B, 3), {4}), ConfigError);
}

// B_n and C_n at node 2 give the same poset; only the order structure is compared.
TEST(LambdaPoset, BAndCAreIsomorphicAtNodeTwo) {
  for (int n = 3; n <= 6; ++n) {
    const auto b = RootSystem::build(CartanType::B, n);
    const auto c = RootSystem::build(CartanType::C, n);
    const auto pb = lambda_poset(b, {2});
    const auto pc = lambda_poset(c, {2});
    ASSERT_EQ(pb.size(), pc.size());
    auto profile = [](const RootPoset& p) {
      std::multiset<std::pair<int, int>> out;
      for (int x : p.ground()) {
        int below = 0, above = 0;
        for (int y : p.ground()) {
          below += p.leq(y, x);
          above += p.leq(x, y);
        }
        out.emplace(below, above);
      }
      return out;
    };
    EXPECT_EQ(profile(pb), profile(pc)) << "n=" << n;
  }
}

TEST(CosetReps, Counts) {
  EXPECT_EQ(minimal_coset_reps(RootSystem::build(CartanType::B, 4), {2}).size(), 24u);
  EXPECT_EQ(minimal_coset_reps(RootSystem::build(CartanType::D, 4), {2}).size(), 24u);
  for (int n = 3; n <= 7; ++n) {
    EXPECT_EQ(minimal_coset_reps(RootSystem::build(CartanType::A, n), {1, n - 1}).size(),
              static_cast<std::size_t>(n * (n - 1)));
    EXPECT_EQ(minimal_coset_reps(RootSystem::build(CartanType::C, n), {1}).size(), static_cast<std::size_t>(2 * n));
  }
  EXPECT_EQ(minimal_coset_reps(RootSystem::build(CartanType::G2, 2), {1}).size(), 6u);
}

// With every node marked W_P is trivial, so every element is its own coset.
TEST(CosetReps, AllNodesMarkedGivesWholeGroup) {
  EXPECT_EQ(minimal_coset_reps(RootSystem::build(CartanType::B, 3), {1, 2, 3}).size(), 48u);
  EXPECT_EQ(minimal_coset_reps(RootSystem::build(CartanType::G2, 2), {1, 2}).size(), 12u);
}

TEST(CosetReps, InversionSetsInsideLambdaAndInjective) {
  for (auto [type, n, nodes] : {std::tuple{CartanType::B, 4, std::set<int>{2}}, {CartanType::D, 5, {2}},
                                {CartanType::A, 5, {1, 4}}, {CartanType::G2, 2, {1}}}) {
    const auto rs = RootSystem::build(type, n);
    const auto p = lambda_poset(rs, nodes);
    std::set<std::vector<int>> seen;
    for (const auto& rep : minimal_coset_reps(rs, nodes)) {
      for (int r : rep.inversions) EXPECT_TRUE(p.contains(r));
      EXPECT_TRUE(seen.insert(rep.inversions).second);
    }
  }
}
