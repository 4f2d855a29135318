#include "ryd/poly.hpp"

#include <numeric>
#include <sstream>

namespace ryd {

RestrictionPoly RestrictionPoly::constant(int vars, const Rational& c) {
  RestrictionPoly p(vars);
  p.add_term(std::vector<int>(vars, 0), c);
  return p;
}

RestrictionPoly RestrictionPoly::linear(const std::vector<int>& coeffs) {
  const int r = static_cast<int>(coeffs.size());
  RestrictionPoly p(r);
  for (int i = 0; i < r; ++i) {
    std::vector<int> mono(r, 0);
    mono[i] = 1;
    p.add_term(mono, coeffs[i]);
  }
  return p;
}

void RestrictionPoly::add_term(const std::vector<int>& mono, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(mono, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool RestrictionPoly::is_homogeneous() const {
  int d = -1;
  for (const auto& [m, c] : terms_) {
    const int e = std::accumulate(m.begin(), m.end(), 0);
    if (d >= 0 && e != d) return false;
    d = e;
  }
  return true;
}

int RestrictionPoly::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, std::accumulate(m.begin(), m.end(), 0));
  return d;
}

RestrictionPoly RestrictionPoly::operator+(const RestrictionPoly& o) const {
  RestrictionPoly out = *this;
  out.vars_ = std::max(vars_, o.vars_);
  for (const auto& [m, c] : o.terms_) out.add_term(m, c);
  return out;
}

RestrictionPoly RestrictionPoly::operator*(const RestrictionPoly& o) const {
  RestrictionPoly out(std::max(vars_, o.vars_));
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : o.terms_) {
      std::vector<int> m(m1);
      for (std::size_t i = 0; i < m2.size(); ++i) m[i] += m2[i];
      out.add_term(m, c1 * c2);
    }
  }
  return out;
}

Rational RestrictionPoly::evaluate(const std::vector<Rational>& point) const {
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (int k = 0; k < m[i]; ++k) t *= point.at(i);
    }
    total += t;
  }
  return total;
}

std::string RestrictionPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] > 0) os << "*t" << (i + 1) << (m[i] > 1 ? "^" + std::to_string(m[i]) : "");
    }
  }
  return os.str();
}

}  // namespace ryd
