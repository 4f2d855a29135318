#pragma once

#include <compare>
#include <vector>

namespace ryd {

struct Partition2 {
  int p1 = 0;
  int p2 = 0;

  bool valid() const { return p1 >= p2 && p2 >= 0; }
  int size() const { return p1 + p2; }
  auto operator<=>(const Partition2&) const = default;
};

// Counts Littlewood-Richardson skew tableaux of shape nu/lambda and content mu.
int lr2_coeff_tableau(Partition2 lambda, Partition2 mu, Partition2 nu);

// Two-row Horn inequalities; equal to lr2_coeff_tableau.
int lr2_coeff(Partition2 lambda, Partition2 mu, Partition2 nu);

// All nu with nu1 <= box.p1, nu2 <= box.p2 and nonzero coefficient (which is then 1).
std::vector<Partition2> lr2_expand(Partition2 lambda, Partition2 mu, Partition2 box);

int lr1_coeff(int a, int b, int c, int m);

}  // namespace ryd
