#include "ryd/dmult.hpp"

#include <algorithm>

#include "ryd/error.hpp"

namespace ryd {

namespace {

void add_flat(FlatCombo& out, int n, int a, int b, bool on, const Dyadic& c) {
  if (b < 0 || a < b || a > 2 * n - 4) return;
  const FlatShape f{a, b, on};
  if (!valid_flat(f, n)) throw InvariantViolation("legal diamond term is not a valid flat shape");
  out.add(f, c);
}

void require_og_even(const Shape& a, const Shape& b) {
  if (a.family != b.family || a.family.kind != FamilyKind::OGeven) {
    throw ConfigError("star needs two OGeven shapes of the same n");
  }
  require_valid(a);
  require_valid(b);
}

}  // namespace

bool is_pieri(const FlatShape& f) { return f.r2 == 0; }

FlatCombo diamond(const FlatShape& x, const FlatShape& y, int n) {
  if (!valid_flat(x, n) || !valid_flat(y, n)) throw ConfigError("diamond: invalid flat shape");
  FlatCombo out;
  if (x.on && y.on) return out;
  const int M = std::min(x.r1 - x.r2, y.r1 - y.r2);
  const int a = x.r1 + y.r1;
  const int b = x.r2 + y.r2;
  if (x.on || y.on) {
    for (int k = 0; k <= M; ++k) add_flat(out, n, a - k, b + k, true, 1);
  } else if (x.size() + y.size() <= 2 * n - 4) {
    for (int k = 0; k <= M; ++k) add_flat(out, n, a - k, b + k, false, 1);
  } else {
    add_flat(out, n, a, b - 1, true, 1);
    for (int k = 1; k <= M; ++k) add_flat(out, n, a - k, b + k - 1, true, 2);
    add_flat(out, n, a - M - 1, b + M, true, 1);
  }
  return out;
}

int eta(const Shape& l, const Shape& m) {
  if (l.charge == Charge::Neutral || m.charge == Charge::Neutral) return 1;
  const bool even = l.family.n % 2 == 0;
  const bool match = l.charge == m.charge;
  return (match == even) ? 2 : 0;
}

namespace {

ClassCombo pieri_base(const Shape& l, const Shape& m) {
  const int n = l.family.n;
  const bool match = l.charge == m.charge;
  const bool even = n % 2 == 0;
  ClassCombo out;
  auto put = [&](int a, int b) {
    FlatShape f{a, b, false};
    if (!valid_flat(f, n)) throw InvariantViolation("base case produced an invalid shape");
    if (is_ambiguous(f, n)) {
      if (!match) throw InvariantViolation("opposite-charge base case produced an ambiguous shape");
      out.add(Shape{l.family, a, b, false, l.charge}, 1);
    } else {
      out.add(Shape{l.family, a, b, false, Charge::Neutral}, 1);
    }
  };
  // Rows of total 2n-4 with second row of fixed parity.
  const bool second_even = (match == even);
  for (int k = 0;; ++k) {
    const int b = second_even ? 2 * k : 2 * k + 1;
    const int a = 2 * n - 4 - b;
    if (a < b) break;
    put(a, b);
  }
  return out;
}

}  // namespace

ClassCombo star(const Shape& l, const Shape& m, StarTrace* trace) {
  require_og_even(l, m);
  const int n = l.family.n;
  const FlatShape pl = flatten(l);
  const FlatShape pm = flatten(m);
  const FlatShape charged_pieri{n - 2, 0, false};

  if (pl == charged_pieri && pm == charged_pieri) {
    ClassCombo out = pieri_base(l, m);
    if (trace) {
      *trace = StarTrace{};
      trace->base_case = true;
      trace->result = out;
    }
    return out;
  }

  const FlatCombo d = diamond(pl, pm, n);

  // (i)
  const int e = eta(l, m);
  FlatCombo after_eta;
  for (const auto& [k, c] : d.terms()) after_eta.add(k, k.r1 == 2 * n - 4 ? c * Dyadic(e) : c);

  // (ii)
  const int base = fsh(pl, n) + fsh(pm, n);
  FlatCombo after_fsh;
  for (const auto& [k, c] : after_eta.terms()) after_fsh.add(k, c.scaled(fsh(k, n) - base));

  // (iii)
  enum class Rule { Split, Assign, ParityRule };
  Rule rule = Rule::Split;
  Charge assigned = Charge::Neutral;
  const Shape* pieri_side = nullptr;
  const Shape* other = nullptr;
  const bool lp = is_pieri(pl);
  const bool mp = is_pieri(pm);
  if (!lp && !mp) {
    rule = Rule::Split;
  } else if ((lp && l.charge == Charge::Neutral) || (mp && m.charge == Charge::Neutral)) {
    const bool left = lp && l.charge == Charge::Neutral;
    other = left ? &m : &l;
    if (other->charge == Charge::Neutral) {
      rule = Rule::Split;
    } else {
      rule = Rule::Assign;
      assigned = other->charge;
    }
  } else {
    // One side is the charged Pieri shape <n-2,0|off>, the other is not Pieri.
    pieri_side = lp ? &l : &m;
    other = lp ? &m : &l;
    if (other->charge == Charge::Neutral && other->on && other->r1 + other->r2 == 2 * n - 4) {
      rule = Rule::ParityRule;
    } else if (other->charge == Charge::Neutral) {
      rule = Rule::Split;
    } else {
      rule = Rule::Assign;
      assigned = other->charge;
    }
  }

  ClassCombo out;
  const FlatShape parity_target{2 * n - 4, n - 2, true};
  for (const auto& [k, c] : after_fsh.terms()) {
    if (!is_ambiguous(k, n)) {
      out.add(Shape{l.family, k.r1, k.r2, k.on, Charge::Neutral}, c);
      continue;
    }
    Rule r = rule;
    if (r == Rule::ParityRule && !(k == parity_target)) r = Rule::Split;
    switch (r) {
      case Rule::Split:
        out.add(Shape{l.family, k.r1, k.r2, k.on, Charge::Up}, c.scaled(-1));
        out.add(Shape{l.family, k.r1, k.r2, k.on, Charge::Down}, c.scaled(-1));
        break;
      case Rule::Assign:
        out.add(Shape{l.family, k.r1, k.r2, k.on, assigned}, c);
        break;
      case Rule::ParityRule: {
        const Charge ch = other->r1 % 2 == 0 ? pieri_side->charge : opposite(pieri_side->charge);
        out.add(Shape{l.family, k.r1, k.r2, k.on, ch}, c);
        break;
      }
    }
  }
  if (trace) {
    *trace = StarTrace{false, d, after_eta, after_fsh, out};
  }
  return out;
}

}  // namespace ryd
