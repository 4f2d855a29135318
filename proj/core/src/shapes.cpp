#include "ryd/shapes.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <regex>

#include "ryd/error.hpp"

namespace ryd {

std::string to_string(FamilyKind k) {
  switch (k) {
    case FamilyKind::Flag: return "Flag";
    case FamilyKind::LG: return "LG";
    case FamilyKind::OGodd: return "OGodd";
    case FamilyKind::OGeven: return "OGeven";
    case FamilyKind::ChainB: return "ChainB";
    case FamilyKind::ChainC: return "ChainC";
    case FamilyKind::G2P1: return "G2P1";
    case FamilyKind::G2P2: return "G2P2";
  }
  return "?";
}

FamilyKind parse_family_kind(const std::string& name) {
  static const std::map<std::string, FamilyKind> names = {
      {"Flag", FamilyKind::Flag},     {"A", FamilyKind::Flag},        {"LG", FamilyKind::LG},
      {"C", FamilyKind::LG},          {"OGodd", FamilyKind::OGodd},   {"B", FamilyKind::OGodd},
      {"OGeven", FamilyKind::OGeven}, {"D", FamilyKind::OGeven},      {"ChainB", FamilyKind::ChainB},
      {"ChainC", FamilyKind::ChainC}, {"G2P1", FamilyKind::G2P1},     {"G2P2", FamilyKind::G2P2},
  };
  auto it = names.find(name);
  if (it == names.end()) throw ParseError("unknown family '" + name + "'");
  return it->second;
}

Family Family::make(FamilyKind kind, int n) {
  int lo = 2;
  switch (kind) {
    case FamilyKind::Flag: lo = 3; break;
    case FamilyKind::OGeven: lo = 4; break;
    case FamilyKind::G2P1:
    case FamilyKind::G2P2: return Family{kind, 2};
    default: break;
  }
  if (n < lo) throw ConfigError(to_string(kind) + " needs n >= " + std::to_string(lo));
  if (n > 64) throw ConfigError("n too large");
  return Family{kind, n};
}

int Family::lambda_size() const {
  switch (kind) {
    case FamilyKind::Flag: return 2 * n - 3;
    case FamilyKind::LG:
    case FamilyKind::OGodd: return 4 * n - 5;
    case FamilyKind::OGeven: return 4 * n - 7;
    case FamilyKind::ChainB:
    case FamilyKind::ChainC: return 2 * n - 1;
    case FamilyKind::G2P1:
    case FamilyKind::G2P2: return 5;
  }
  return 0;
}

int Family::count() const {
  switch (kind) {
    case FamilyKind::Flag: return n * (n - 1);
    case FamilyKind::LG:
    case FamilyKind::OGodd:
    case FamilyKind::OGeven: return 2 * n * (n - 1);
    case FamilyKind::ChainB:
    case FamilyKind::ChainC: return 2 * n;
    case FamilyKind::G2P1:
    case FamilyKind::G2P2: return 6;
  }
  return 0;
}

bool Family::is_chain() const {
  return kind == FamilyKind::ChainB || kind == FamilyKind::ChainC || kind == FamilyKind::G2P1 ||
         kind == FamilyKind::G2P2;
}

std::string to_string(const Family& f) { return to_string(f.kind) + "(" + std::to_string(f.n) + ")"; }

Charge opposite(Charge c) {
  if (c == Charge::Up) return Charge::Down;
  if (c == Charge::Down) return Charge::Up;
  return c;
}

int Shape::size() const {
  if (family.is_chain()) return r1;
  return r1 + r2 + (on ? 1 : 0);
}

bool is_ambiguous(const FlatShape& f, int n) { return f.on ? f.r2 == n - 2 : f.r1 == n - 2; }

bool valid_flat(const FlatShape& f, int n) {
  const int m = 2 * n - 4;
  if (f.r2 < 0 || f.r2 > f.r1 || f.r1 > m) return false;
  return f.on ? f.r1 + f.r2 >= m : f.r1 + f.r2 <= m;
}

bool validate_shape(const Shape& s) {
  const Family& f = s.family;
  const int half = f.half();
  if (s.r1 < 0 || s.r2 < 0) return false;
  if (f.is_chain()) {
    if (s.r2 != 0 || s.charge != Charge::Neutral || s.r1 > f.lambda_size()) return false;
    return s.on ? s.r1 >= half + 1 : s.r1 <= half;
  }
  switch (f.kind) {
    case FamilyKind::Flag:
      if (s.charge != Charge::Neutral || s.r1 > f.n - 2 || s.r2 > f.n - 2) return false;
      return s.on ? s.r1 + s.r2 >= half : s.r1 + s.r2 <= half;
    case FamilyKind::LG:
    case FamilyKind::OGodd:
      if (s.charge != Charge::Neutral || s.r2 > s.r1 || s.r1 > half) return false;
      return s.on ? s.r1 + s.r2 >= half : s.r1 + s.r2 <= half;
    case FamilyKind::OGeven: {
      const FlatShape fl{s.r1, s.r2, s.on};
      if (!valid_flat(fl, f.n)) return false;
      return is_ambiguous(fl, f.n) == (s.charge != Charge::Neutral);
    }
    default: return false;
  }
}

void require_valid(const Shape& s) {
  if (!validate_shape(s)) throw ParseError("invalid shape " + format_shape(s) + " for " + to_string(s.family));
}

Shape make_shape(const Family& f, int r1, int r2, bool on, Charge charge) {
  Shape s{f, r1, r2, on, charge};
  require_valid(s);
  return s;
}

std::vector<Shape> enumerate_shapes(const Family& f) {
  std::vector<Shape> out;
  const int top = f.is_chain() ? f.lambda_size() : f.half();
  for (int on = 0; on <= 1; ++on) {
    for (int a = 0; a <= top; ++a) {
      for (int b = 0; b <= top; ++b) {
        for (Charge c : {Charge::Neutral, Charge::Up, Charge::Down}) {
          Shape s{f, a, b, on == 1, c};
          if (validate_shape(s)) out.push_back(s);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string format_shape(const Shape& s) {
  std::string t = std::to_string(s.r1) + "," + std::to_string(s.r2) + (s.on ? "|on" : "|off");
  if (s.charge == Charge::Up) t += "|up";
  if (s.charge == Charge::Down) t += "|down";
  return t;
}

Shape parse_shape(const Family& f, const std::string& text) {
  static const std::regex flat_re(R"(\s*(\d+)\s*,\s*(\d+)\s*\|\s*(on|off)\s*(?:\|\s*(up|down)\s*)?)");
  static const std::regex layer_re(
      R"(\s*\[\s*(\d+)\s*,\s*(\d+)\s*/\s*(\d+)\s*,\s*(\d+)\s*\]\s*\|\s*(on|off)\s*)");
  std::smatch m;
  if (std::regex_match(text, m, flat_re)) {
    Shape s{f, std::stoi(m[1]), std::stoi(m[2]), m[3] == "on", Charge::Neutral};
    if (m[4].matched) s.charge = m[4] == "up" ? Charge::Up : Charge::Down;
    require_valid(s);
    return s;
  }
  if (std::regex_match(text, m, layer_re)) {
    if (f.kind != FamilyKind::OGeven) throw ParseError("two-layer form is only for OGeven");
    TwoLayerShape t{std::stoi(m[1]), std::stoi(m[2]), std::stoi(m[3]), std::stoi(m[4]), m[5] == "on"};
    return from_two_layer(t, f.n);
  }
  throw ParseError("cannot parse shape '" + text + "'");
}

int sh(const Shape& s) {
  const Family& f = s.family;
  switch (f.kind) {
    case FamilyKind::LG:
    case FamilyKind::OGodd: return (s.r1 >= f.n - 1 ? 1 : 0) + (s.r2 >= f.n - 1 ? 1 : 0);
    case FamilyKind::ChainB:
    case FamilyKind::ChainC: return s.on ? s.r1 - 1 : s.r1;
    case FamilyKind::G2P1:
    case FamilyKind::G2P2: {
      const int used = s.on ? s.r1 - 1 : s.r1;
      return (used >= 2 ? 1 : 0) + (used >= 3 ? 1 : 0);
    }
    default: return 0;
  }
}

int fsh(const FlatShape& f, int n) {
  if (!f.on && f.r1 == n - 2 && f.r2 == n - 2) return 1;
  return (f.r1 >= n - 2 ? 1 : 0) + (f.r2 >= n - 2 ? 1 : 0);
}

FlatShape flatten(const Shape& s) {
  if (s.family.kind != FamilyKind::OGeven) throw ConfigError("flatten needs an OGeven shape");
  return FlatShape{s.r1, s.r2, s.on};
}

FlatShape flatten(const TwoLayerShape& t) { return FlatShape{t.b1 + t.t1, t.b2 + t.t2, t.on}; }

std::vector<Shape> unflatten(const FlatShape& f, int n) {
  if (!valid_flat(f, n)) throw ParseError("invalid flat shape");
  const Family fam = Family::make(FamilyKind::OGeven, n);
  if (!is_ambiguous(f, n)) return {Shape{fam, f.r1, f.r2, f.on, Charge::Neutral}};
  return {Shape{fam, f.r1, f.r2, f.on, Charge::Up}, Shape{fam, f.r1, f.r2, f.on, Charge::Down}};
}

namespace {

// Row of count c in the [2] x Q poset of D_n: (bottom, top) split.
std::pair<int, int> split_row(int c, Charge choice, int n) {
  if (c < n - 2) return {c, 0};
  if (c == n - 2) return choice == Charge::Up ? std::pair{n - 3, 1} : std::pair{n - 2, 0};
  return {n - 2, c - (n - 2)};
}

// Inverse of split_row; nullopt when (b, t) is not a row of a lower ideal.
std::optional<std::pair<int, Charge>> join_row(int b, int t, int n) {
  if (t == 0) return std::pair{b, b == n - 2 ? Charge::Down : Charge::Neutral};
  if (b == n - 2) return std::pair{n - 2 + t, Charge::Neutral};
  if (b == n - 3 && t == 1) return std::pair{n - 2, Charge::Up};
  return std::nullopt;
}

}  // namespace

TwoLayerShape to_two_layer(const Shape& s) {
  if (s.family.kind != FamilyKind::OGeven) throw ConfigError("two-layer form needs an OGeven shape");
  const int n = s.family.n;
  auto [b1, t1] = split_row(s.r1, s.charge, n);
  auto [b2, t2] = split_row(s.r2, s.charge, n);
  return TwoLayerShape{b1, b2, t1, t2, s.on};
}

Shape from_two_layer(const TwoLayerShape& t, int n) {
  const Family fam = Family::make(FamilyKind::OGeven, n);
  const int w = n - 2;
  auto in_box = [w](int a, int b) { return a >= b && b >= 0 && a <= w; };
  if (!in_box(t.b1, t.b2) || !in_box(t.t1, t.t2)) throw ParseError("layer is not a partition in 2x(n-2)");
  auto row1 = join_row(t.b1, t.t1, n);
  auto row2 = join_row(t.b2, t.t2, n);
  if (!row1 || !row2) throw ParseError("layers do not form a lower order ideal");
  Charge c = Charge::Neutral;
  for (Charge x : {row1->second, row2->second}) {
    if (x == Charge::Neutral) continue;
    if (c != Charge::Neutral && c != x) throw ParseError("layers do not form a lower order ideal");
    c = x;
  }
  Shape s{fam, row1->first, row2->first, t.on, c};
  require_valid(s);
  return s;
}

ShapeGeometry indexing_geometry(const Family& f) {
  switch (f.kind) {
    case FamilyKind::Flag: return {CartanType::A, f.n, {1, f.n - 1}};
    case FamilyKind::LG:
    case FamilyKind::OGodd: return {CartanType::B, f.n, {2}};
    case FamilyKind::OGeven: return {CartanType::D, f.n, {2}};
    case FamilyKind::ChainB:
    case FamilyKind::ChainC: return {CartanType::C, f.n, {1}};
    case FamilyKind::G2P1:
    case FamilyKind::G2P2: return {CartanType::G2, 2, {2}};
  }
  throw ConfigError("unknown family");
}

ShapeGeometry variety_geometry(const Family& f) {
  switch (f.kind) {
    case FamilyKind::LG: return {CartanType::C, f.n, {2}};
    case FamilyKind::ChainB: return {CartanType::B, f.n, {1}};
    case FamilyKind::G2P1: return {CartanType::G2, 2, {1}};
    default: return indexing_geometry(f);
  }
}

namespace {

std::vector<int> e(int dim, int i, int si, int j = 0, int sj = 0) {  // si e_i + sj e_j, 1-based
  std::vector<int> v(dim, 0);
  v[i - 1] += si;
  if (j > 0) v[j - 1] += sj;
  return v;
}

// Row of the B_n node-2 poset through e_i.
std::vector<int> b_row_root(int n, int i, int p) {
  if (p <= n - 2) return e(n, i, 1, p + 2, -1);
  if (p == n - 1) return e(n, i, 1);
  return e(n, i, 1, 2 * n - p, 1);
}

void d_row_roots(int n, int i, int c, Charge choice, std::vector<std::vector<int>>& out) {
  for (int p = 1; p <= std::min(c, n - 3); ++p) out.push_back(e(n, i, 1, p + 2, -1));
  if (c == n - 2) {
    out.push_back(e(n, i, 1, n, choice == Charge::Up ? 1 : -1));
  } else if (c > n - 2) {
    out.push_back(e(n, i, 1, n, -1));
    out.push_back(e(n, i, 1, n, 1));
    for (int q = 1; q <= c - (n - 1); ++q) out.push_back(e(n, i, 1, n - q, 1));
  }
}

}  // namespace

std::vector<std::vector<int>> shape_roots(const Shape& s) {
  const Family& f = s.family;
  const int n = f.n;
  std::vector<std::vector<int>> out;
  switch (f.kind) {
    case FamilyKind::Flag:
      for (int p = 1; p <= s.r1; ++p) out.push_back(e(n, 1, 1, p + 1, -1));
      for (int p = 1; p <= s.r2; ++p) out.push_back(e(n, n - p, 1, n, -1));
      if (s.on) out.push_back(e(n, 1, 1, n, -1));
      break;
    case FamilyKind::LG:
    case FamilyKind::OGodd:
      for (int p = 1; p <= s.r1; ++p) out.push_back(b_row_root(n, 2, p));
      for (int p = 1; p <= s.r2; ++p) out.push_back(b_row_root(n, 1, p));
      if (s.on) out.push_back(e(n, 1, 1, 2, 1));
      break;
    case FamilyKind::OGeven:
      d_row_roots(n, 2, s.r1, s.charge, out);
      d_row_roots(n, 1, s.r2, s.charge, out);
      if (s.on) out.push_back(e(n, 1, 1, 2, 1));
      break;
    case FamilyKind::ChainB:
    case FamilyKind::ChainC: {
      const int used = s.on ? s.r1 - 1 : s.r1;
      for (int p = 1; p <= used; ++p) out.push_back(p <= n - 1 ? e(n, 1, 1, p + 1, -1) : e(n, 1, 1, 2 * n - p, 1));
      if (s.on) out.push_back(e(n, 1, 2));
      break;
    }
    case FamilyKind::G2P1:
    case FamilyKind::G2P2: {
      static const std::vector<std::vector<int>> chain = {{-2, 1, 1}, {-1, 0, 1}, {0, -1, 1}, {1, -2, 1}};
      const int used = s.on ? s.r1 - 1 : s.r1;
      for (int p = 0; p < used; ++p) out.push_back(chain[p]);
      if (s.on) out.push_back({-1, -1, 2});
      break;
    }
  }
  return out;
}

std::vector<int> shape_root_indices(const Shape& s, const RootSystem& rs) {
  std::vector<int> out;
  for (const auto& v : shape_roots(s)) {
    auto idx = rs.positive_index(v);
    if (!idx) throw InvariantViolation("shape root is not a positive root");
    out.push_back(*idx);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct CosetLookup {
  RootSystem rs;
  std::map<std::vector<int>, WeylElement> by_inversions;
};

const CosetLookup& coset_lookup(const ShapeGeometry& g) {
  static std::mutex mu;
  static std::map<std::tuple<CartanType, int, std::set<int>>, std::unique_ptr<CosetLookup>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(g.type, g.rank, g.marked);
  auto& slot = cache[key];
  if (!slot) {
    slot = std::make_unique<CosetLookup>(CosetLookup{RootSystem::build(g.type, g.rank), {}});
    for (const auto& c : minimal_coset_reps(slot->rs, g.marked)) slot->by_inversions.emplace(c.inversions, c.w);
  }
  return *slot;
}

}  // namespace

WeylElement shape_to_coset(const Shape& s) {
  require_valid(s);
  const auto& look = coset_lookup(indexing_geometry(s.family));
  auto it = look.by_inversions.find(shape_root_indices(s, look.rs));
  if (it == look.by_inversions.end()) {
    throw InvariantViolation("no coset representative for shape " + format_shape(s));
  }
  return it->second;
}

bool bruhat_leq(const Shape& a, const Shape& b) {
  if (a.family != b.family) throw ConfigError("bruhat_leq across families");
  auto strip = [](const Shape& s) {
    auto r = shape_roots(s);
    if (s.on) r.pop_back();
    std::sort(r.begin(), r.end());
    return r;
  };
  const auto x = strip(a);
  const auto y = strip(b);
  std::vector<std::vector<int>> diff;
  std::set_difference(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(diff));
  if (a.on == b.on) return diff.empty();
  if (a.on) return false;
  return diff.size() <= 1 && a.size() < b.size();
}

}  // namespace ryd
