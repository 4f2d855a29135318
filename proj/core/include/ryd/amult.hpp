#pragma once

#include "ryd/combo.hpp"
#include "ryd/lr2.hpp"

namespace ryd {

// Flag, LG and OGodd shapes.
ClassCombo a_op(const Shape& lambda, const Shape& mu, Partition2 nu);

ClassCombo mult_flag(const Shape& lambda, const Shape& mu);
ClassCombo mult_lg(const Shape& lambda, const Shape& mu);         // closed forms with M
ClassCombo mult_lg_via_lr(const Shape& lambda, const Shape& mu);  // sum of C * A over nu
ClassCombo mult_og_odd(const Shape& lambda, const Shape& mu);
ClassCombo mult_chain(const Shape& lambda, const Shape& mu);      // ChainB, ChainC
ClassCombo mult_g2(const Shape& lambda, const Shape& mu);         // G2P1, G2P2

}  // namespace ryd
