#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ryd/combo.hpp"

namespace ryd {

// Product of two shapes of the same family, dispatched to its rule.
ClassCombo multiply_combo(const Shape& a, const Shape& b);
Expansion multiply(const Shape& a, const Shape& b);
std::int64_t structure_constant(const Shape& a, const Shape& b, const Shape& c);

// All products of a family, indexed by enumerate_shapes order.
class StructTable {
 public:
  static StructTable from_rules(const Family& f);
  static StructTable from_oracle(const Family& f);

  const Family& family() const { return family_; }
  const std::vector<Shape>& shapes() const { return shapes_; }
  std::size_t index(const Shape& s) const;
  const Expansion& product(std::size_t i, std::size_t j) const { return products_[i * shapes_.size() + j]; }
  std::int64_t at(const Shape& a, const Shape& b, const Shape& c) const;

  struct Entry {
    Shape lambda, mu, nu;
    std::int64_t coeff;
  };
  std::vector<Entry> nonzero_entries() const;  // ordered pairs, ascending
  std::string to_csv() const;                  // lambda,mu,nu,coeff

 private:
  Family family_;
  std::vector<Shape> shapes_;
  std::vector<Expansion> products_;
};

struct SuiteReport {
  std::string name;
  std::size_t checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

SuiteReport verify_counts(const Family& f);
SuiteReport verify_associativity(const StructTable& t);
SuiteReport verify_commutativity(const StructTable& t);
SuiteReport verify_grading(const StructTable& t);
SuiteReport verify_against_oracle(const StructTable& t);  // builds the oracle table
SuiteReport verify_monk(int n);                            // flag degree-one products

// Observed coefficients (zero included) and the family's permitted set.
struct ValueReport {
  std::vector<std::int64_t> observed;
  std::vector<std::int64_t> allowed;
  SuiteReport report;
};
ValueReport verify_values(const StructTable& t);

// C(coadjoint) = m^{sh(lambda)+sh(mu)-sh(nu)} C(adjoint).
SuiteReport verify_coadjoint_relation(FamilyKind adjoint, FamilyKind coadjoint, int n);

}  // namespace ryd
