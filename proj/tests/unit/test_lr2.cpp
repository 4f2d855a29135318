#include <gtest/gtest.h>

#include "ryd/lr2.hpp"

using namespace ryd;

TEST(LR2, PieriCase) { EXPECT_EQ(lr2_coeff({1, 0}, {1, 0}, {2, 0}), 1); }

TEST(LR2, GoldenValues) {
  for (Partition2 nu : {Partition2{8, 3}, {7, 4}, {6, 5}}) EXPECT_EQ(lr2_coeff({4, 1}, {4, 2}, nu), 1);
  EXPECT_EQ(lr2_coeff({4, 1}, {4, 2}, {9, 2}), 0);
  EXPECT_EQ(lr2_coeff({3, 1}, {3, 2}, {6, 3}), 1);
  EXPECT_EQ(lr2_coeff({3, 1}, {3, 2}, {5, 4}), 1);
  EXPECT_EQ(lr2_coeff({3, 1}, {3, 2}, {6, 4}), 0);  // wrong degree
}

TEST(LR2, ExpandInsideBox) {
  EXPECT_EQ(lr2_expand({2, 1}, {3, 2}, {6, 5}), (std::vector<Partition2>{{5, 3}, {4, 4}}));
  EXPECT_EQ(lr2_expand({4, 1}, {4, 2}, {9, 8}), (std::vector<Partition2>{{8, 3}, {7, 4}, {6, 5}}));
  EXPECT_EQ(lr2_expand({0, 0}, {3, 1}, {5, 5}), (std::vector<Partition2>{{3, 1}}));
  EXPECT_TRUE(lr2_expand({4, 4}, {4, 4}, {5, 5}).empty());
}

// Closed form against tableau counting over every triple in a 2 x 12 box.
TEST(LR2, ClosedFormMatchesTableauxExhaustively) {
  std::vector<Partition2> parts;
  for (int a = 0; a <= 12; ++a) {
    for (int b = 0; b <= a; ++b) parts.push_back({a, b});
  }
  long checked = 0;
  for (const auto& l : parts) {
    for (const auto& m : parts) {
      for (const auto& n : parts) {
        if (n.size() != l.size() + m.size()) continue;
        ASSERT_EQ(lr2_coeff(l, m, n), lr2_coeff_tableau(l, m, n))
            << l.p1 << ',' << l.p2 << ' ' << m.p1 << ',' << m.p2 << ' ' << n.p1 << ',' << n.p2;
        ASSERT_LE(lr2_coeff(l, m, n), 1);
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 10000);
}

TEST(LR2, Symmetric) {
  for (int a = 0; a <= 6; ++a) {
    for (int b = 0; b <= a; ++b) {
      for (int c = 0; c <= 6; ++c) {
        for (int d = 0; d <= c; ++d) {
          for (const auto& nu : lr2_expand({a, b}, {c, d}, {12, 12})) {
            EXPECT_EQ(lr2_coeff({c, d}, {a, b}, nu), 1);
          }
        }
      }
    }
  }
}

TEST(LR1, Examples) {
  EXPECT_EQ(lr1_coeff(1, 2, 3, 5), 1);
  EXPECT_EQ(lr1_coeff(1, 2, 4, 5), 0);
  EXPECT_EQ(lr1_coeff(3, 3, 6, 4), 0);
}
