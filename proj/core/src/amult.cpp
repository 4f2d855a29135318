#include "ryd/amult.hpp"

#include <algorithm>

#include "ryd/error.hpp"

namespace ryd {

Expansion to_expansion(const ClassCombo& c) {
  Expansion out;
  for (const auto& [s, coeff] : c.terms()) {
    const auto v = coeff.to_integer();
    if (v < 0) throw InvariantViolation("negative coefficient at " + format_shape(s));
    out.emplace(s, v);
  }
  return out;
}

namespace {

void require_family(const Shape& a, const Shape& b, std::initializer_list<FamilyKind> kinds, const char* op) {
  if (a.family != b.family) throw ConfigError(std::string(op) + ": shapes from different families");
  if (std::find(kinds.begin(), kinds.end(), a.family.kind) == kinds.end()) {
    throw ConfigError(std::string(op) + ": unsupported family " + to_string(a.family));
  }
  require_valid(a);
  require_valid(b);
}

bool legal(const Family& f, int a, int b) {
  if (f.is_chain()) return a >= 0 && a <= f.lambda_size() && b == 0;
  const int h = f.half();
  if (a < 0 || b < 0 || a > h || b > h) return false;
  return f.kind == FamilyKind::Flag || a >= b;
}

void add_term(ClassCombo& out, const Family& f, int a, int b, bool on, const Dyadic& c) {
  if (!legal(f, a, b)) return;
  Shape s{f, a, b, on, Charge::Neutral};
  if (!validate_shape(s)) throw InvariantViolation("legal term is not a valid shape: " + format_shape(s));
  out.add(s, c);
}

// 2^{sh(nu)-sh(lambda)-sh(mu)} applied termwise.
ClassCombo rescale_by_sh(const ClassCombo& in, const Shape& lambda, const Shape& mu, int base) {
  ClassCombo out;
  const int sl = sh(lambda) + sh(mu);
  for (const auto& [s, c] : in.terms()) {
    const int e = sh(s) - sl;
    if (base == 2) {
      out.add(s, c.scaled(e));
      continue;
    }
    std::int64_t p = 1;
    for (int i = 0; i < std::abs(e); ++i) p *= base;
    const std::int64_t v = c.to_integer();
    if (e >= 0) {
      out.add(s, Dyadic(v * p));
    } else {
      if (v % p != 0) throw InvariantViolation("non-integral rescale at " + format_shape(s));
      out.add(s, Dyadic(v / p));
    }
  }
  return out;
}

ClassCombo lg_closed(const Shape& l, const Shape& m) {
  ClassCombo out;
  const Family& f = l.family;
  if (l.on && m.on) return out;
  const int M = std::min(l.r1 - l.r2, m.r1 - m.r2);
  const int a = l.r1 + m.r1;
  const int b = l.r2 + m.r2;
  if (l.on || m.on) {
    for (int k = 0; k <= M; ++k) add_term(out, f, a - k, b + k, true, 1);
  } else if (l.size() + m.size() <= f.half()) {
    for (int k = 0; k <= M; ++k) add_term(out, f, a - k, b + k, false, 1);
  } else {
    for (int k = 0; k <= M; ++k) {
      add_term(out, f, a - k, b + k - 1, true, 1);
      add_term(out, f, a - k - 1, b + k, true, 1);
    }
  }
  return out;
}

ClassCombo lg_via_lr(const Shape& l, const Shape& m) {
  ClassCombo out;
  const int h = l.family.half();
  for (const auto& nu : lr2_expand({l.r1, l.r2}, {m.r1, m.r2}, {h + 1, h})) out.add(a_op(l, m, nu));
  return out;
}

}  // namespace

ClassCombo a_op(const Shape& l, const Shape& m, Partition2 nu) {
  require_family(l, m, {FamilyKind::Flag, FamilyKind::LG, FamilyKind::OGodd}, "a_op");
  ClassCombo out;
  const Family& f = l.family;
  if (l.on && m.on) return out;
  if (l.on || m.on) {
    add_term(out, f, nu.p1, nu.p2, true, 1);
  } else if (l.size() + m.size() <= f.half()) {
    add_term(out, f, nu.p1, nu.p2, false, 1);
  } else {
    add_term(out, f, nu.p1 - 1, nu.p2, true, 1);
    add_term(out, f, nu.p1, nu.p2 - 1, true, 1);
  }
  return out;
}

ClassCombo mult_flag(const Shape& l, const Shape& m) {
  require_family(l, m, {FamilyKind::Flag}, "mult_flag");
  return a_op(l, m, Partition2{l.r1 + m.r1, l.r2 + m.r2});
}

ClassCombo mult_lg(const Shape& l, const Shape& m) {
  require_family(l, m, {FamilyKind::LG}, "mult_lg");
  return lg_closed(l, m);
}

ClassCombo mult_lg_via_lr(const Shape& l, const Shape& m) {
  require_family(l, m, {FamilyKind::LG}, "mult_lg_via_lr");
  return lg_via_lr(l, m);
}

ClassCombo mult_og_odd(const Shape& l, const Shape& m) {
  require_family(l, m, {FamilyKind::OGodd}, "mult_og_odd");
  ClassCombo out = rescale_by_sh(lg_closed(l, m), l, m, 2);
  for (const auto& [s, c] : out.terms()) {
    if (!c.is_integer()) throw InvariantViolation("non-integral OGodd coefficient at " + format_shape(s));
  }
  return out;
}

namespace {

// Single-row rule shared by the chains and G2: the (off,off,on) case doubles.
ClassCombo chain_core(const Shape& l, const Shape& m) {
  ClassCombo out;
  const Family& f = l.family;
  const int k = l.r1 + m.r1;
  if (k > f.lambda_size()) return out;
  const bool on = k > f.half();
  if (l.on && m.on) return out;
  add_term(out, f, k, 0, on, (!l.on && !m.on && on) ? 2 : 1);
  return out;
}

}  // namespace

ClassCombo mult_chain(const Shape& l, const Shape& m) {
  require_family(l, m, {FamilyKind::ChainB, FamilyKind::ChainC}, "mult_chain");
  ClassCombo base = chain_core(l, m);
  if (l.family.kind == FamilyKind::ChainB) return base;
  ClassCombo out = rescale_by_sh(base, l, m, 2);
  for (const auto& [s, c] : out.terms()) {
    if (!c.is_integer()) throw InvariantViolation("non-integral chain coefficient at " + format_shape(s));
  }
  return out;
}

ClassCombo mult_g2(const Shape& l, const Shape& m) {
  require_family(l, m, {FamilyKind::G2P1, FamilyKind::G2P2}, "mult_g2");
  ClassCombo base = chain_core(l, m);
  if (l.family.kind == FamilyKind::G2P1) return base;
  return rescale_by_sh(base, l, m, 3);
}

}  // namespace ryd
