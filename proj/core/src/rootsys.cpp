#include "ryd/rootsys.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>

#include "ryd/error.hpp"

namespace ryd {

std::string to_string(CartanType t) {
  switch (t) {
    case CartanType::A: return "A";
    case CartanType::B: return "B";
    case CartanType::C: return "C";
    case CartanType::D: return "D";
    case CartanType::G2: return "G2";
  }
  return "?";
}

WeylElement::WeylElement(std::vector<int> window) : window_(std::move(window)) {
  const int d = dim();
  std::vector<bool> seen(d + 1, false);
  for (int x : window_) {
    const int a = std::abs(x);
    if (a < 1 || a > d || seen[a]) throw InvariantViolation("not a signed permutation");
    seen[a] = true;
  }
}

WeylElement WeylElement::identity(int dim) {
  std::vector<int> w(dim);
  std::iota(w.begin(), w.end(), 1);
  return WeylElement(std::move(w));
}

int WeylElement::sign_changes() const {
  return static_cast<int>(std::count_if(window_.begin(), window_.end(), [](int x) { return x < 0; }));
}

std::vector<int> WeylElement::apply(const std::vector<int>& v) const {
  std::vector<int> out(v.size(), 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    const int t = window_[i];
    out[std::abs(t) - 1] += t > 0 ? v[i] : -v[i];
  }
  return out;
}

WeylElement WeylElement::operator*(const WeylElement& other) const {
  std::vector<int> w(window_.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    const int b = other.window_[i];
    const int a = window_[std::abs(b) - 1];
    w[i] = b > 0 ? a : -a;
  }
  return WeylElement(std::move(w));
}

WeylElement WeylElement::inverse() const {
  std::vector<int> w(window_.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    const int t = window_[i];
    const int s = static_cast<int>(i) + 1;
    w[std::abs(t) - 1] = t > 0 ? s : -s;
  }
  return WeylElement(std::move(w));
}

namespace {

std::vector<int> unit(int dim, int i) {
  std::vector<int> v(dim, 0);
  v[i] = 1;
  return v;
}

int dot(const std::vector<int>& a, const std::vector<int>& b) {
  int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::vector<int> swap_window(int dim, int i, int j) {  // 0-based
  std::vector<int> w(dim);
  std::iota(w.begin(), w.end(), 1);
  std::swap(w[i], w[j]);
  return w;
}

}  // namespace

RootSystem RootSystem::build(CartanType type, int n) {
  RootSystem rs;
  rs.type_ = type;
  rs.n_ = n;
  std::vector<std::vector<int>> simple;
  switch (type) {
    case CartanType::A:
      if (n < 3) throw ConfigError("type A needs n >= 3");
      rs.dim_ = n;
      for (int i = 0; i + 1 < n; ++i) {
        auto v = unit(n, i);
        v[i + 1] = -1;
        simple.push_back(v);
        rs.reflections_.emplace_back(swap_window(n, i, i + 1));
      }
      break;
    case CartanType::B:
    case CartanType::C:
    case CartanType::D: {
      const int lo = type == CartanType::D ? 4 : 2;
      if (n < lo) throw ConfigError("type " + to_string(type) + " needs n >= " + std::to_string(lo));
      rs.dim_ = n;
      for (int i = 0; i + 1 < n; ++i) {
        auto v = unit(n, i);
        v[i + 1] = -1;
        simple.push_back(v);
        rs.reflections_.emplace_back(swap_window(n, i, i + 1));
      }
      std::vector<int> last(n, 0);
      std::vector<int> w(n);
      std::iota(w.begin(), w.end(), 1);
      if (type == CartanType::B) {
        last[n - 1] = 1;
        w[n - 1] = -n;
      } else if (type == CartanType::C) {
        last[n - 1] = 2;
        w[n - 1] = -n;
      } else {
        last[n - 2] = 1;
        last[n - 1] = 1;
        w[n - 2] = -n;
        w[n - 1] = -(n - 1);
      }
      simple.push_back(last);
      rs.reflections_.emplace_back(w);
      break;
    }
    case CartanType::G2:
      if (n != 2) throw ConfigError("G2 has rank 2");
      rs.dim_ = 3;
      simple = {{1, -1, 0}, {-2, 1, 1}};
      rs.reflections_.emplace_back(std::vector<int>{2, 1, 3});
      rs.reflections_.emplace_back(std::vector<int>{-1, -3, -2});
      break;
  }

  const int r = static_cast<int>(simple.size());
  for (int i = 0; i < r; ++i) {
    Root root;
    root.coeffs = unit(r, i);
    root.ambient = simple[i];
    rs.simple_.push_back(root);
  }

  // Positive roots by closure under simple reflections, tracking coefficients.
  std::deque<Root> queue(rs.simple_.begin(), rs.simple_.end());
  for (const auto& s : rs.simple_) {
    rs.index_[s.ambient] = static_cast<int>(rs.positive_.size());
    rs.positive_.push_back(s);
  }
  while (!queue.empty()) {
    Root b = queue.front();
    queue.pop_front();
    for (int i = 0; i < r; ++i) {
      const auto& a = simple[i];
      const int k = 2 * dot(b.ambient, a) / dot(a, a);
      if (k == 0) continue;
      Root c;
      c.ambient = rs.reflections_[i].apply(b.ambient);
      c.coeffs = b.coeffs;
      c.coeffs[i] -= k;
      if (std::any_of(c.coeffs.begin(), c.coeffs.end(), [](int x) { return x < 0; })) continue;
      if (rs.index_.count(c.ambient)) continue;
      rs.index_[c.ambient] = static_cast<int>(rs.positive_.size());
      rs.positive_.push_back(c);
      queue.push_back(c);
    }
  }

  int longest = 0;
  for (const auto& p : rs.positive_) longest = std::max(longest, dot(p.ambient, p.ambient));
  const bool laced = type == CartanType::A || type == CartanType::D;
  for (auto& p : rs.positive_) {
    p.length = (!laced && dot(p.ambient, p.ambient) < longest) ? RootLength::Short : RootLength::Long;
  }
  for (auto& s : rs.simple_) s.length = rs.positive_[rs.index_.at(s.ambient)].length;
  return rs;
}

std::optional<int> RootSystem::positive_index(const std::vector<int>& ambient) const {
  auto it = index_.find(ambient);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool RootSystem::is_positive(const std::vector<int>& ambient) const { return index_.count(ambient) > 0; }

bool RootSystem::is_root(const std::vector<int>& ambient) const {
  if (is_positive(ambient)) return true;
  std::vector<int> neg(ambient);
  for (int& x : neg) x = -x;
  return is_positive(neg);
}

bool RootSystem::is_short(const Root& r) const {
  auto idx = positive_index(r.ambient);
  if (!idx) throw ConfigError("root not in system");
  return is_short(*idx);
}

bool RootSystem::is_short(int positive_index) const {
  return positive_.at(positive_index).length == RootLength::Short;
}

std::vector<int> RootSystem::inversion_set(const WeylElement& w) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < positive_.size(); ++i) {
    if (!is_positive(w.apply(positive_[i].ambient))) out.push_back(static_cast<int>(i));
  }
  return out;
}

int RootSystem::length(const WeylElement& w) const { return static_cast<int>(inversion_set(w).size()); }

bool RootSystem::is_valid_element(const WeylElement& w) const {
  if (w.dim() != dim_) return false;
  // Root-preserving is not enough: an odd sign change preserves D_n's roots but is outside W.
  if (type_ == CartanType::D && w.sign_changes() % 2 != 0) return false;
  if (type_ == CartanType::A && w.sign_changes() != 0) return false;
  for (const auto& p : positive_) {
    if (!is_root(w.apply(p.ambient))) return false;
  }
  return true;
}

std::vector<int> RootSystem::reduced_word(const WeylElement& w) const {
  std::vector<int> word;
  WeylElement cur = w;
  while (true) {
    const WeylElement inv = cur.inverse();
    int found = -1;
    for (int i = 0; i < rank(); ++i) {
      if (!is_positive(inv.apply(simple_[i].ambient))) {
        found = i;
        break;
      }
    }
    if (found < 0) break;
    word.push_back(found + 1);
    cur = reflections_[found] * cur;
  }
  return word;
}

WeylElement RootSystem::from_word(const std::vector<int>& word) const {
  WeylElement w = WeylElement::identity(dim_);
  for (int a : word) w = w * reflections_.at(a - 1);
  return w;
}

RootPoset::RootPoset(const RootSystem& rs, std::set<int> marked) : marked_(std::move(marked)) {
  if (marked_.empty()) throw ConfigError("no marked node");
  for (int m : marked_) {
    if (m < 1 || m > rs.rank()) throw ConfigError("marked node out of range");
  }
  for (const auto& p : rs.positive_roots()) coeffs_.push_back(p.coeffs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (int m : marked_) {
      if (coeffs_[i][m - 1] > 0) {
        ground_.push_back(static_cast<int>(i));
        break;
      }
    }
  }
}

bool RootPoset::leq(int a, int b) const {
  const auto& x = coeffs_.at(a);
  const auto& y = coeffs_.at(b);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] > y[i]) return false;
  }
  return true;
}

std::vector<int> RootPoset::maximal_elements() const {
  std::vector<int> out;
  for (int a : ground_) {
    bool top = true;
    for (int b : ground_) {
      if (a != b && leq(a, b)) {
        top = false;
        break;
      }
    }
    if (top) out.push_back(a);
  }
  return out;
}

bool RootPoset::contains(int positive_index) const {
  return std::binary_search(ground_.begin(), ground_.end(), positive_index);
}

RootPoset lambda_poset(const RootSystem& rs, const std::set<int>& marked_nodes) {
  return RootPoset(rs, marked_nodes);
}

std::vector<CosetRep> minimal_coset_reps(const RootSystem& rs, const std::set<int>& marked_nodes) {
  for (int m : marked_nodes) {
    if (m < 1 || m > rs.rank()) throw ConfigError("marked node out of range");
  }
  auto minimal = [&](const WeylElement& w) {
    for (int j = 1; j <= rs.rank(); ++j) {
      if (marked_nodes.count(j)) continue;
      if (!rs.is_positive(w.apply(rs.simple_roots()[j - 1].ambient))) return false;
    }
    return true;
  };
  // Suffixes of minimal representatives are minimal, so left multiplication reaches all.
  std::set<WeylElement> seen;
  std::deque<WeylElement> queue;
  const auto e = WeylElement::identity(rs.ambient_dim());
  seen.insert(e);
  queue.push_back(e);
  while (!queue.empty()) {
    WeylElement w = queue.front();
    queue.pop_front();
    for (const auto& s : rs.simple_reflections()) {
      WeylElement v = s * w;
      if (seen.count(v) || !minimal(v)) continue;
      seen.insert(v);
      queue.push_back(v);
    }
  }
  std::vector<CosetRep> out;
  for (const auto& w : seen) {
    CosetRep c;
    c.w = w;
    c.inversions = rs.inversion_set(w);
    c.length = static_cast<int>(c.inversions.size());
    c.reduced_word = rs.reduced_word(w);
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const CosetRep& a, const CosetRep& b) {
    if (a.length != b.length) return a.length < b.length;
    return a.w < b.w;
  });
  return out;
}

bool is_short(const RootSystem& rs, const Root& r) { return rs.is_short(r); }

}  // namespace ryd
