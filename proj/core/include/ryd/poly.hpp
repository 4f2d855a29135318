#pragma once

#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ryd {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Sparse polynomial in the simple-root variables t_1..t_r with rational coefficients.
class RestrictionPoly {
 public:
  explicit RestrictionPoly(int vars = 0) : vars_(vars) {}
  static RestrictionPoly constant(int vars, const Rational& c);
  static RestrictionPoly linear(const std::vector<int>& coeffs);  // sum coeffs[i] t_i

  int vars() const { return vars_; }
  const std::map<std::vector<int>, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_homogeneous() const;
  int degree() const;  // -1 for zero

  RestrictionPoly operator+(const RestrictionPoly& o) const;
  RestrictionPoly operator*(const RestrictionPoly& o) const;
  RestrictionPoly& operator+=(const RestrictionPoly& o) { return *this = *this + o; }
  bool operator==(const RestrictionPoly&) const = default;

  Rational evaluate(const std::vector<Rational>& point) const;
  std::string str() const;

 private:
  void add_term(const std::vector<int>& mono, const Rational& c);
  int vars_;
  std::map<std::vector<int>, Rational> terms_;
};

}  // namespace ryd
