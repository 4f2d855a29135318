#include "ryd/oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "ryd/error.hpp"
#include "ryd/parallel.hpp"

namespace ryd {

namespace {

// r_j = s_{a_1}...s_{a_{j-1}}(alpha_{a_j}) for each position j of the word, as positive-root indices.
std::vector<int> word_roots(const std::vector<int>& word, const RootSystem& rs) {
  std::vector<int> out;
  WeylElement prefix = WeylElement::identity(rs.ambient_dim());
  for (int a : word) {
    auto idx = rs.positive_index(prefix.apply(rs.simple_roots()[a - 1].ambient));
    if (!idx) throw InvariantViolation("word is not reduced");
    out.push_back(*idx);
    prefix = prefix * rs.simple_reflections()[a - 1];
  }
  return out;
}

bool ascends(const WeylElement& v, int a, const RootSystem& rs) {
  return rs.is_positive(v.apply(rs.simple_roots()[a - 1].ambient));
}

// Visits every reduced subword: leaf(v, chosen positions).
void reduced_subwords(const std::vector<int>& word, const RootSystem& rs,
                      const std::function<void(const WeylElement&, const std::vector<int>&)>& leaf) {
  std::vector<int> chosen;
  std::function<void(std::size_t, const WeylElement&)> go = [&](std::size_t j, const WeylElement& v) {
    if (j == word.size()) {
      leaf(v, chosen);
      return;
    }
    go(j + 1, v);
    const int a = word[j];
    if (ascends(v, a, rs)) {
      chosen.push_back(static_cast<int>(j));
      go(j + 1, v * rs.simple_reflections()[a - 1]);
      chosen.pop_back();
    }
  };
  go(0, WeylElement::identity(rs.ambient_dim()));
}

}  // namespace

RestrictionPoly billey_restriction(const WeylElement& u, const WeylElement& w, const RootSystem& rs,
                                   const std::vector<int>& word) {
  if (rs.from_word(word) != w || static_cast<int>(word.size()) != rs.length(w)) {
    throw ConfigError("billey_restriction: not a reduced word of w");
  }
  const auto roots = word_roots(word, rs);
  RestrictionPoly total(rs.rank());
  reduced_subwords(word, rs, [&](const WeylElement& v, const std::vector<int>& chosen) {
    if (v != u) return;
    RestrictionPoly term = RestrictionPoly::constant(rs.rank(), 1);
    for (int j : chosen) term = term * RestrictionPoly::linear(rs.positive_roots()[roots[j]].coeffs);
    total += term;
  });
  return total;
}

RestrictionPoly billey_restriction(const WeylElement& u, const WeylElement& w, const RootSystem& rs) {
  return billey_restriction(u, w, rs, rs.reduced_word(w));
}

std::map<WeylElement, BigInt> billey_values(const WeylElement& w, const RootSystem& rs) {
  const auto word = rs.reduced_word(w);
  const auto roots = word_roots(word, rs);
  std::vector<long long> height;
  for (int r : roots) {
    const auto& c = rs.positive_roots()[r].coeffs;
    height.push_back(std::accumulate(c.begin(), c.end(), 0LL));
  }
  std::map<WeylElement, BigInt> out;
  std::function<void(std::size_t, const WeylElement&, const BigInt&)> go = [&](std::size_t j, const WeylElement& v,
                                                                             const BigInt& acc) {
    if (j == word.size()) {
      out[v] += acc;
      return;
    }
    go(j + 1, v, acc);
    const int a = word[j];
    if (ascends(v, a, rs)) go(j + 1, v * rs.simple_reflections()[a - 1], acc * height[j]);
  };
  go(0, WeylElement::identity(rs.ambient_dim()), BigInt(1));
  return out;
}

std::vector<std::vector<int>> all_reduced_words(const WeylElement& w, const RootSystem& rs) {
  const WeylElement inv = w.inverse();
  std::vector<std::vector<int>> out;
  bool any = false;
  for (int i = 1; i <= rs.rank(); ++i) {
    if (rs.is_positive(inv.apply(rs.simple_roots()[i - 1].ambient))) continue;
    any = true;
    for (auto tail : all_reduced_words(rs.simple_reflections()[i - 1] * w, rs)) {
      tail.insert(tail.begin(), i);
      out.push_back(std::move(tail));
    }
  }
  if (!any) out.push_back({});
  return out;
}

bool bruhat_leq_weyl(const WeylElement& u, const WeylElement& w, const RootSystem& rs) {
  bool found = false;
  reduced_subwords(rs.reduced_word(w), rs, [&](const WeylElement& v, const std::vector<int>&) {
    if (v == u) found = true;
  });
  return found;
}

CosetOracle::CosetOracle(RootSystem rs, std::set<int> marked)
    : rs_(std::move(rs)), marked_(std::move(marked)), cosets_(minimal_coset_reps(rs_, marked_)) {
  const std::size_t m = cosets_.size();
  for (std::size_t i = 0; i < m; ++i) index_[cosets_[i].w] = static_cast<int>(i);
  values_.assign(m, std::vector<BigInt>(m, BigInt(0)));
  parallel_for(m, [&](std::size_t w) {
    for (const auto& [v, val] : billey_values(cosets_[w].w, rs_)) {
      auto it = index_.find(v);
      if (it != index_.end()) values_[it->second][w] = val;
    }
  });
  for (std::size_t w = 0; w < m; ++w) {
    if (values_[w][w] == 0) throw InvariantViolation("vanishing diagonal restriction");
  }
}

int CosetOracle::index_of(const WeylElement& w) const {
  auto it = index_.find(w);
  return it == index_.end() ? -1 : it->second;
}

std::vector<Rational> CosetOracle::equivariant_row(int u, int v, int max_length) const {
  const std::size_t m = cosets_.size();
  std::vector<Rational> c(m, Rational(0));
  for (std::size_t w = 0; w < m && cosets_[w].length <= max_length; ++w) {
    Rational acc = Rational(values_[u][w] * values_[v][w]);
    for (std::size_t x = 0; x < w; ++x) {
      if (cosets_[x].length >= cosets_[w].length) break;
      if (c[x] != 0 && values_[x][w] != 0) acc -= c[x] * Rational(values_[x][w]);
    }
    c[w] = acc / Rational(values_[w][w]);
  }
  return c;
}

Rational CosetOracle::constant(int u, int v, int w) const {
  return equivariant_row(u, v, cosets_.at(w).length)[w];
}

std::map<int, BigInt> CosetOracle::product(int u, int v) const {
  const int target = cosets_.at(u).length + cosets_.at(v).length;
  const auto c = equivariant_row(u, v, target);
  std::map<int, BigInt> out;
  for (std::size_t w = 0; w < cosets_.size(); ++w) {
    if (cosets_[w].length != target || c[w] == 0) continue;
    if (denominator(c[w]) != 1 || c[w] < 0) {
      throw InvariantViolation("oracle constant is not a nonnegative integer");
    }
    out.emplace(static_cast<int>(w), numerator(c[w]));
  }
  return out;
}

Rational oracle_constant(const WeylElement& u, const WeylElement& v, const WeylElement& w,
                         const CosetOracle& oracle) {
  const int a = oracle.index_of(u), b = oracle.index_of(v), c = oracle.index_of(w);
  if (a < 0 || b < 0 || c < 0) throw ConfigError("oracle_constant: not a minimal coset representative");
  return oracle.constant(a, b, c);
}

FamilyOracle::FamilyOracle(const Family& f) : family_(f), shapes_(enumerate_shapes(f)) {
  const auto vg = variety_geometry(f);
  oracle_ = std::make_unique<CosetOracle>(RootSystem::build(vg.type, vg.rank), vg.marked);
  const auto ig = indexing_geometry(f);
  const RootSystem irs = RootSystem::build(ig.type, ig.rank);
  std::map<std::vector<int>, Shape> by_roots;
  for (const auto& s : shapes_) by_roots.emplace(shape_root_indices(s, irs), s);

  for (const auto& rep : oracle_->cosets()) {
    WeylElement w = rep.w;
    if (vg.marked != ig.marked) {
      // Swap node labels in a reduced word to move between the two G2 parabolics.
      auto word = rep.reduced_word;
      for (int& a : word) a = 3 - a;
      w = irs.from_word(word);
    }
    auto it = by_roots.find(irs.inversion_set(w));
    if (it == by_roots.end()) throw InvariantViolation("coset representative matches no shape");
    coset_index_[it->second] = static_cast<int>(shape_of_coset_.size());
    shape_of_coset_.push_back(it->second);
  }
  if (coset_index_.size() != shapes_.size()) throw InvariantViolation("shape/coset correspondence is not bijective");
}

int FamilyOracle::coset_of(const Shape& s) const { return coset_index_.at(s); }

Expansion FamilyOracle::product(const Shape& a, const Shape& b) const {
  Expansion out;
  for (const auto& [w, c] : oracle_->product(coset_of(a), coset_of(b))) {
    out.emplace(shape_of_coset_[w], static_cast<std::int64_t>(c));
  }
  return out;
}

std::map<WeylElement, int> monk_multiply(const WeylElement& w, int r, int n) {
  if (w.dim() != n || w.sign_changes() != 0) throw ConfigError("monk_multiply needs a permutation of size n");
  if (r < 1 || r >= n) throw ConfigError("monk_multiply: node out of range");
  const auto& x = w.window();
  std::map<WeylElement, int> out;
  for (int p = 0; p < r; ++p) {
    for (int q = r; q < n; ++q) {
      if (x[p] > x[q]) continue;
      bool cover = true;
      for (int k = p + 1; k < q; ++k) {
        if (x[p] < x[k] && x[k] < x[q]) cover = false;
      }
      if (!cover) continue;
      std::vector<int> y(x);
      std::swap(y[p], y[q]);
      out[WeylElement(y)] += 1;
    }
  }
  return out;
}

}  // namespace ryd
