#include "ryd/nonzero.hpp"

#include "ryd/dmult.hpp"
#include "ryd/error.hpp"

namespace ryd {

std::vector<int> shape_vector(const Shape& s) {
  if (s.family.kind == FamilyKind::OGeven) {
    const auto t = to_two_layer(s);
    return {t.b1, t.b2, t.t1, t.t2, t.on ? 1 : 0};
  }
  if (s.family.is_chain()) return {s.on ? s.r1 - 1 : s.r1, 0, s.on ? 1 : 0};
  return {s.r1, s.r2, s.on ? 1 : 0};
}

std::vector<int> TripleVector::concat() const {
  std::vector<int> out(lambda);
  out.insert(out.end(), mu.begin(), mu.end());
  out.insert(out.end(), nu.begin(), nu.end());
  return out;
}

TripleVector triple_vector(const Shape& l, const Shape& m, const Shape& n) {
  return {shape_vector(l), shape_vector(m), shape_vector(n)};
}

bool horn_inequalities(const std::vector<int>& l, const std::vector<int>& m, const std::vector<int>& n) {
  return n[0] + n[1] + n[2] == l[0] + l[1] + l[2] + m[0] + m[1] + m[2] && n[0] <= l[0] + m[0] &&
         n[1] <= l[0] + m[1] && n[1] <= l[1] + m[0] && l[2] + m[2] <= n[2];
}

namespace {

std::vector<int> flat_vector(const Shape& s) { return {s.r1, s.r2, s.on ? 1 : 0}; }

}  // namespace

bool nonzero_predicate(const Shape& l, const Shape& m, const Shape& n) {
  if (l.family != m.family || l.family != n.family) throw ConfigError("nonzero_predicate: mixed families");
  require_valid(l);
  require_valid(m);
  require_valid(n);
  const auto a = flat_vector(l), b = flat_vector(m), c = flat_vector(n);
  switch (l.family.kind) {
    case FamilyKind::Flag:
      return c[0] + c[1] + c[2] == a[0] + a[1] + a[2] + b[0] + b[1] + b[2] && c[0] <= a[0] + b[0] &&
             c[1] <= a[1] + b[1] && a[2] + b[2] <= c[2];
    case FamilyKind::LG:
    case FamilyKind::OGodd: return horn_inequalities(a, b, c);
    case FamilyKind::OGeven: {
      const int n_ = l.family.n;
      if (is_pieri(flatten(l)) || is_pieri(flatten(m))) return !star(l, m).coeff(n).is_zero();
      if (n.r1 == 2 * n_ - 4) return eta(l, m) != 0 && horn_inequalities(a, b, c);
      return horn_inequalities(a, b, c);
    }
    default: return n.size() == l.size() + m.size();
  }
}

SuiteReport verify_polytope_description(const StructTable& t) {
  SuiteReport r{"polytope", 0, {}};
  const auto& shapes = t.shapes();
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    for (std::size_t j = 0; j < shapes.size(); ++j) {
      const auto& p = t.product(i, j);
      for (const auto& nu : shapes) {
        ++r.checked;
        const bool rule = p.count(nu) > 0;
        if (rule != nonzero_predicate(shapes[i], shapes[j], nu)) {
          r.failures.push_back("(" + format_shape(shapes[i]) + ", " + format_shape(shapes[j]) + ", " +
                               format_shape(nu) + "): rule " + (rule ? "nonzero" : "zero"));
        }
      }
    }
  }
  return r;
}

SuiteReport verify_polytope_description(const Family& f) {
  return verify_polytope_description(StructTable::from_rules(f));
}

Shape shape_from_layers(int n, const std::vector<int>& v) {
  if (v.size() != 5) throw ParseError("layer vector needs five entries");
  return from_two_layer(TwoLayerShape{v[0], v[1], v[2], v[3], v[4] == 1}, n);
}

Shape shape_from_columns(int n, const std::vector<int>& cols) {
  const int w = n - 2;
  if (static_cast<int>(cols.size()) != 2 * w + 1) throw ParseError("column vector has the wrong length");
  auto rows = [&](int offset) {
    int a = 0, b = 0;
    for (int i = 0; i < w; ++i) {
      const int h = cols[offset + i];
      if (h < 0 || h > 2 || (i > 0 && h > cols[offset + i - 1])) throw ParseError("columns do not form a partition");
      a += h >= 1;
      b += h >= 2;
    }
    return std::pair{a, b};
  };
  auto [b1, b2] = rows(0);
  auto [t1, t2] = rows(w);
  return from_two_layer(TwoLayerShape{b1, b2, t1, t2, cols.back() == 1}, n);
}

std::vector<int> shape_columns(const Shape& s) {
  const auto t = to_two_layer(s);
  const int w = s.family.n - 2;
  std::vector<int> out;
  for (int i = 0; i < w; ++i) out.push_back((t.b1 > i) + (t.b2 > i));
  for (int i = 0; i < w; ++i) out.push_back((t.t1 > i) + (t.t2 > i));
  out.push_back(t.on ? 1 : 0);
  return out;
}

std::vector<int> shape_flat_vector(const Shape& s) {
  return {s.r1, s.r2, s.on ? 1 : 0, s.charge == Charge::Up ? 1 : s.charge == Charge::Down ? -1 : 0};
}

Shape shape_from_flat_vector(int n, const std::vector<int>& v) {
  if (v.size() != 4) throw ParseError("flattened vector needs four entries");
  const Charge c = v[3] > 0 ? Charge::Up : v[3] < 0 ? Charge::Down : Charge::Neutral;
  return make_shape(Family::make(FamilyKind::OGeven, n), v[0], v[1], v[2] == 1, c);
}

namespace {

using Encoding = std::vector<int> (*)(const Shape&);

NonconvexityWitness evaluate(std::string label, const Shape& l, const Shape& m, const std::vector<Shape>& nus,
                             Encoding enc = shape_vector) {
  NonconvexityWitness w;
  w.label = std::move(label);
  w.lambda = l;
  w.mu = m;
  const auto prod = star(l, m);
  for (const auto& nu : nus) {
    WitnessPoint p{nu, enc(l), 0};
    for (const auto& part : {enc(m), enc(nu)}) p.vector.insert(p.vector.end(), part.begin(), part.end());
    const auto c = prod.coeff(nu);
    p.coeff = c.to_integer();
    w.points.push_back(p);
    w.pattern += p.coeff != 0 ? 'N' : 'Z';
  }
  // Collinear with equal spacing: p_k = p_0 + k (p_1 - p_0).
  w.collinear = w.points.size() >= 3;
  for (std::size_t k = 2; k < w.points.size() && w.collinear; ++k) {
    for (std::size_t i = 0; i < w.points[0].vector.size(); ++i) {
      const int d = w.points[1].vector[i] - w.points[0].vector[i];
      if (w.points[k].vector[i] != w.points[0].vector[i] + static_cast<int>(k) * d) w.collinear = false;
    }
  }
  w.alternates = w.pattern.size() >= 3;
  for (std::size_t k = 1; k < w.pattern.size(); ++k) {
    if (w.pattern[k] == w.pattern[k - 1]) w.alternates = false;
  }
  return w;
}

}  // namespace

NonconvexityWitness find_nonconvexity_witness(int n) {
  if (n < 4) throw ConfigError("OG(2,2n) witnesses need n >= 4");
  const Shape l = shape_from_layers(n, {n - 2, 0, 0, 0, 0});
  std::vector<Shape> nus;
  for (int k = 0; k <= (n == 4 ? 2 : 3); ++k) nus.push_back(shape_from_layers(n, {n - 2, k, n - 2 - k, 0, 0}));
  return evaluate("line n=" + std::to_string(n), l, l, nus);
}

std::vector<NonconvexityWitness> example_witnesses() {
  std::vector<NonconvexityWitness> out;
  {
    std::vector<Shape> nus;
    for (int k = 0; k <= 2; ++k) nus.push_back(shape_from_layers(4, {2, k, 2 - k, 0, 0}));
    out.push_back(
        evaluate("n=4 second", shape_from_layers(4, {2, 0, 0, 0, 0}), shape_from_layers(4, {1, 0, 1, 0, 0}), nus));
  }
  {
    std::vector<Shape> nus = {shape_from_columns(5, {2, 2, 2, 0, 0, 0, 0}), shape_from_columns(5, {2, 2, 1, 1, 0, 0, 0}),
                              shape_from_columns(5, {2, 2, 0, 2, 0, 0, 0})};
    out.push_back(evaluate("OG(2,10) columns", shape_from_columns(5, {2, 0, 0, 0, 0, 0, 0}),
                           shape_from_columns(5, {2, 2, 0, 0, 0, 0, 0}), nus, shape_columns));
  }
  {
    std::vector<Shape> nus = {shape_from_flat_vector(5, {6, 0, 0, 0}), shape_from_flat_vector(5, {5, 1, 0, 0}),
                              shape_from_flat_vector(5, {4, 2, 0, 0})};
    out.push_back(evaluate("OG(2,10) flattened", shape_from_flat_vector(5, {3, 0, 0, 1}),
                           shape_from_flat_vector(5, {3, 0, 0, -1}), nus, shape_flat_vector));
  }
  return out;
}

}  // namespace ryd
