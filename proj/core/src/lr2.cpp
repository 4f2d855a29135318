#include "ryd/lr2.hpp"

#include <algorithm>

namespace ryd {

int lr2_coeff_tableau(Partition2 lambda, Partition2 mu, Partition2 nu) {
  if (!lambda.valid() || !mu.valid() || !nu.valid()) return 0;
  if (nu.p1 < lambda.p1 || nu.p2 < lambda.p2) return 0;
  const int len1 = nu.p1 - lambda.p1;
  const int len2 = nu.p2 - lambda.p2;
  int count = 0;
  // Entries lie in {1,2}, so a semistandard row is 1^a 2^(len-a).
  for (int a1 = 0; a1 <= len1; ++a1) {
    for (int a2 = 0; a2 <= len2; ++a2) {
      if (a1 + a2 != mu.p1 || (len1 - a1) + (len2 - a2) != mu.p2) continue;
      auto row1 = [&](int col) { return col - lambda.p1 < a1 ? 1 : 2; };
      auto row2 = [&](int col) { return col - lambda.p2 < a2 ? 1 : 2; };
      bool ok = true;
      for (int col = std::max(lambda.p1, lambda.p2); col < nu.p2 && ok; ++col) {
        if (row2(col) <= row1(col)) ok = false;
      }
      // Reverse reading word: row 1 right to left, then row 2.
      int ones = 0, twos = 0;
      auto read = [&](int v) {
        (v == 1 ? ones : twos)++;
        if (twos > ones) ok = false;
      };
      for (int col = nu.p1 - 1; col >= lambda.p1 && ok; --col) read(row1(col));
      for (int col = nu.p2 - 1; col >= lambda.p2 && ok; --col) read(row2(col));
      if (ok) ++count;
    }
  }
  return count;
}

int lr2_coeff(Partition2 lambda, Partition2 mu, Partition2 nu) {
  if (!lambda.valid() || !mu.valid() || !nu.valid()) return 0;
  if (nu.size() != lambda.size() + mu.size()) return 0;
  if (nu.p1 > lambda.p1 + mu.p1) return 0;
  if (nu.p2 > lambda.p1 + mu.p2 || nu.p2 > lambda.p2 + mu.p1) return 0;
  return 1;
}

std::vector<Partition2> lr2_expand(Partition2 lambda, Partition2 mu, Partition2 box) {
  std::vector<Partition2> out;
  const int total = lambda.size() + mu.size();
  for (int a = std::min(box.p1, total); a >= 0; --a) {
    Partition2 nu{a, total - a};
    if (nu.p2 > box.p2) break;
    if (nu.valid() && lr2_coeff(lambda, mu, nu)) out.push_back(nu);
  }
  return out;
}

int lr1_coeff(int a, int b, int c, int m) { return (c == a + b && c <= m) ? 1 : 0; }

}  // namespace ryd
