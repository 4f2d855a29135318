#pragma once

#include "ryd/combo.hpp"

namespace ryd {

// Product on the planarized OG(2,2n) poset, box 2 x (2n-4).
FlatCombo diamond(const FlatShape& a, const FlatShape& b, int n);

int eta(const Shape& lambda, const Shape& mu);

// Intermediate stages of the star product, kept for inspection.
struct StarTrace {
  bool base_case = false;
  FlatCombo diamond;
  FlatCombo after_eta;
  FlatCombo after_fsh;
  ClassCombo result;
};

ClassCombo star(const Shape& lambda, const Shape& mu, StarTrace* trace = nullptr);

bool is_pieri(const FlatShape& f);

}  // namespace ryd
