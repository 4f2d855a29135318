#include "ryd/table.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "ryd/amult.hpp"
#include "ryd/dmult.hpp"
#include "ryd/error.hpp"
#include "ryd/oracle.hpp"
#include "ryd/parallel.hpp"

namespace ryd {

ClassCombo multiply_combo(const Shape& a, const Shape& b) {
  if (a.family != b.family) throw ConfigError("multiply: shapes from different families");
  switch (a.family.kind) {
    case FamilyKind::Flag: return mult_flag(a, b);
    case FamilyKind::LG: return mult_lg(a, b);
    case FamilyKind::OGodd: return mult_og_odd(a, b);
    case FamilyKind::OGeven: return star(a, b);
    case FamilyKind::ChainB:
    case FamilyKind::ChainC: return mult_chain(a, b);
    case FamilyKind::G2P1:
    case FamilyKind::G2P2: return mult_g2(a, b);
  }
  throw ConfigError("unknown family");
}

Expansion multiply(const Shape& a, const Shape& b) { return to_expansion(multiply_combo(a, b)); }

std::int64_t structure_constant(const Shape& a, const Shape& b, const Shape& c) {
  const auto e = multiply(a, b);
  auto it = e.find(c);
  return it == e.end() ? 0 : it->second;
}

StructTable StructTable::from_rules(const Family& f) {
  StructTable t;
  t.family_ = f;
  t.shapes_ = enumerate_shapes(f);
  const std::size_t m = t.shapes_.size();
  t.products_.resize(m * m);
  parallel_for(m * m, [&](std::size_t k) { t.products_[k] = multiply(t.shapes_[k / m], t.shapes_[k % m]); });
  return t;
}

StructTable StructTable::from_oracle(const Family& f) {
  StructTable t;
  t.family_ = f;
  t.shapes_ = enumerate_shapes(f);
  const FamilyOracle oracle(f);
  const std::size_t m = t.shapes_.size();
  t.products_.resize(m * m);
  parallel_for(m * m, [&](std::size_t k) {
    const std::size_t i = k / m, j = k % m;
    if (j < i) return;
    t.products_[k] = oracle.product(t.shapes_[i], t.shapes_[j]);
  });
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < i; ++j) t.products_[i * m + j] = t.products_[j * m + i];
  }
  return t;
}

std::size_t StructTable::index(const Shape& s) const {
  auto it = std::lower_bound(shapes_.begin(), shapes_.end(), s);
  if (it == shapes_.end() || *it != s) throw ConfigError("shape not in table: " + format_shape(s));
  return static_cast<std::size_t>(it - shapes_.begin());
}

std::int64_t StructTable::at(const Shape& a, const Shape& b, const Shape& c) const {
  const auto& p = product(index(a), index(b));
  auto it = p.find(c);
  return it == p.end() ? 0 : it->second;
}

std::vector<StructTable::Entry> StructTable::nonzero_entries() const {
  std::vector<Entry> out;
  for (std::size_t i = 0; i < shapes_.size(); ++i) {
    for (std::size_t j = 0; j < shapes_.size(); ++j) {
      for (const auto& [nu, c] : product(i, j)) out.push_back({shapes_[i], shapes_[j], nu, c});
    }
  }
  return out;
}

std::string StructTable::to_csv() const {
  std::ostringstream os;
  os << "lambda,mu,nu,coeff\n";
  for (const auto& e : nonzero_entries()) {
    os << '"' << format_shape(e.lambda) << "\",\"" << format_shape(e.mu) << "\",\"" << format_shape(e.nu) << "\","
       << e.coeff << '\n';
  }
  return os.str();
}

namespace {

std::string triple(const Shape& a, const Shape& b, const Shape& c) {
  return "(" + format_shape(a) + ", " + format_shape(b) + ", " + format_shape(c) + ")";
}

Expansion times(const StructTable& t, const Expansion& left, std::size_t right) {
  Expansion out;
  for (const auto& [x, c] : left) {
    for (const auto& [y, d] : t.product(t.index(x), right)) out[y] += c * d;
  }
  return out;
}

}  // namespace

SuiteReport verify_counts(const Family& f) {
  SuiteReport r{"counts", 0, {}};
  const auto shapes = enumerate_shapes(f);
  r.checked = shapes.size();
  if (static_cast<int>(shapes.size()) != f.count()) {
    r.failures.push_back(to_string(f) + ": enumerated " + std::to_string(shapes.size()) + " shapes, table says " +
                         std::to_string(f.count()));
  }
  const auto g = indexing_geometry(f);
  const auto rs = RootSystem::build(g.type, g.rank);
  const auto reps = minimal_coset_reps(rs, g.marked);
  if (reps.size() != shapes.size()) {
    r.failures.push_back(to_string(f) + ": " + std::to_string(reps.size()) + " coset representatives");
  }
  if (static_cast<int>(lambda_poset(rs, g.marked).size()) != f.lambda_size()) {
    r.failures.push_back(to_string(f) + ": |Lambda| mismatch");
  }
  return r;
}

SuiteReport verify_associativity(const StructTable& t) {
  SuiteReport r{"assoc", 0, {}};
  const std::size_t m = t.shapes().size();
  std::vector<std::vector<std::string>> bad(m);
  parallel_for(m, [&](std::size_t i) {
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t k = 0; k < m; ++k) {
        const Expansion left = times(t, t.product(i, j), k);
        const Expansion jk = t.product(j, k);
        Expansion right;
        for (const auto& [x, c] : jk) {
          for (const auto& [y, d] : t.product(i, t.index(x))) right[y] += c * d;
        }
        if (left != right) bad[i].push_back(triple(t.shapes()[i], t.shapes()[j], t.shapes()[k]));
      }
    }
  });
  r.checked = m * m * m;
  for (auto& b : bad) r.failures.insert(r.failures.end(), b.begin(), b.end());
  return r;
}

SuiteReport verify_commutativity(const StructTable& t) {
  SuiteReport r{"commutativity", 0, {}};
  const std::size_t m = t.shapes().size();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      ++r.checked;
      if (t.product(i, j) != t.product(j, i)) {
        r.failures.push_back(format_shape(t.shapes()[i]) + " * " + format_shape(t.shapes()[j]));
      }
    }
  }
  return r;
}

SuiteReport verify_grading(const StructTable& t) {
  SuiteReport r{"grading", 0, {}};
  for (const auto& e : t.nonzero_entries()) {
    ++r.checked;
    if (e.nu.size() != e.lambda.size() + e.mu.size()) r.failures.push_back(triple(e.lambda, e.mu, e.nu));
  }
  return r;
}

SuiteReport verify_against_oracle(const StructTable& t) {
  SuiteReport r{"oracle", 0, {}};
  const StructTable o = StructTable::from_oracle(t.family());
  const std::size_t m = t.shapes().size();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      ++r.checked;
      if (t.product(i, j) == o.product(i, j)) continue;
      std::set<Shape> keys;
      for (const auto& [s, c] : t.product(i, j)) keys.insert(s);
      for (const auto& [s, c] : o.product(i, j)) keys.insert(s);
      for (const auto& s : keys) {
        const auto a = t.at(t.shapes()[i], t.shapes()[j], s);
        const auto b = o.at(t.shapes()[i], t.shapes()[j], s);
        if (a != b) {
          r.failures.push_back(triple(t.shapes()[i], t.shapes()[j], s) + ": rule " + std::to_string(a) + ", oracle " +
                               std::to_string(b));
        }
      }
    }
  }
  return r;
}

SuiteReport verify_monk(int n) {
  SuiteReport r{"monk", 0, {}};
  const Family f = Family::make(FamilyKind::Flag, n);
  const RootSystem rs = RootSystem::build(CartanType::A, n);
  std::map<std::vector<int>, Shape> by_roots;
  for (const auto& s : enumerate_shapes(f)) by_roots.emplace(shape_root_indices(s, rs), s);
  const Shape gens[2] = {make_shape(f, 1, 0, false), make_shape(f, 0, 1, false)};
  const int nodes[2] = {1, n - 1};
  for (const auto& s : enumerate_shapes(f)) {
    const WeylElement w = shape_to_coset(s);
    for (int g = 0; g < 2; ++g) {
      ++r.checked;
      Expansion monk;
      bool escaped = false;
      for (const auto& [v, c] : monk_multiply(w, nodes[g], n)) {
        auto it = by_roots.find(rs.inversion_set(v));
        if (it == by_roots.end()) {
          escaped = true;
          continue;
        }
        monk[it->second] += c;
      }
      if (escaped || monk != multiply(gens[g], s)) {
        r.failures.push_back(format_shape(gens[g]) + " * " + format_shape(s));
      }
    }
  }
  return r;
}

ValueReport verify_values(const StructTable& t) {
  ValueReport v;
  v.report.name = "values";
  switch (t.family().kind) {
    case FamilyKind::Flag:
    case FamilyKind::ChainC: v.allowed = {0, 1}; break;
    case FamilyKind::LG:
    case FamilyKind::ChainB:
    case FamilyKind::G2P1: v.allowed = {0, 1, 2}; break;
    case FamilyKind::G2P2: v.allowed = {0, 1, 2, 3}; break;
    case FamilyKind::OGodd:
    case FamilyKind::OGeven: v.allowed = {0, 1, 2, 4, 8}; break;
  }
  std::set<std::int64_t> seen;
  const std::size_t m = t.shapes().size();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      v.report.checked += m;
      if (t.product(i, j).size() < m) seen.insert(0);
      for (const auto& [s, c] : t.product(i, j)) {
        seen.insert(c);
        if (!std::binary_search(v.allowed.begin(), v.allowed.end(), c)) {
          v.report.failures.push_back(triple(t.shapes()[i], t.shapes()[j], s) + " = " + std::to_string(c));
        }
      }
    }
  }
  v.observed.assign(seen.begin(), seen.end());
  return v;
}

SuiteReport verify_coadjoint_relation(FamilyKind adjoint, FamilyKind coadjoint, int n) {
  SuiteReport r{"coadjoint", 0, {}};
  auto is_coadjoint = [](FamilyKind k) {
    return k == FamilyKind::LG || k == FamilyKind::ChainB || k == FamilyKind::G2P1;
  };
  if (is_coadjoint(adjoint) && !is_coadjoint(coadjoint)) std::swap(adjoint, coadjoint);
  int m = 0;
  if (adjoint == FamilyKind::OGodd && coadjoint == FamilyKind::LG) m = 2;
  if (adjoint == FamilyKind::ChainC && coadjoint == FamilyKind::ChainB) m = 2;
  if (adjoint == FamilyKind::G2P2 && coadjoint == FamilyKind::G2P1) m = 3;
  if (m == 0) throw ConfigError("not an adjoint/coadjoint pair");
  const StructTable a = StructTable::from_rules(Family::make(adjoint, n));
  const StructTable c = StructTable::from_rules(Family::make(coadjoint, n));
  auto pw = [m](int e) {
    std::int64_t p = 1;
    for (int i = 0; i < e; ++i) p *= m;
    return p;
  };
  auto partner = [&](const Shape& s) { return Shape{c.family(), s.r1, s.r2, s.on, s.charge}; };
  for (const auto& x : a.shapes()) {
    for (const auto& y : a.shapes()) {
      for (const auto& z : a.shapes()) {
        ++r.checked;
        // C_co * m^{sh z} == C_ad * m^{sh x + sh y}
        const std::int64_t lhs = c.at(partner(x), partner(y), partner(z)) * pw(sh(z));
        const std::int64_t rhs = a.at(x, y, z) * pw(sh(x) + sh(y));
        if (lhs != rhs) r.failures.push_back(triple(x, y, z));
      }
    }
  }
  return r;
}

}  // namespace ryd
