#pragma once

#include <map>
#include <memory>
#include <vector>

#include "ryd/combo.hpp"
#include "ryd/poly.hpp"
#include "ryd/rootsys.hpp"
#include "ryd/shapes.hpp"

namespace ryd {

// Localization of the Schubert class of u at the fixed point w, via subwords of `word`
// (a reduced word of w; the lexicographically least one when omitted).
RestrictionPoly billey_restriction(const WeylElement& u, const WeylElement& w, const RootSystem& rs);
RestrictionPoly billey_restriction(const WeylElement& u, const WeylElement& w, const RootSystem& rs,
                                   const std::vector<int>& word);

// Restrictions of every class at w, evaluated where each simple root equals 1.
std::map<WeylElement, BigInt> billey_values(const WeylElement& w, const RootSystem& rs);

// Every reduced word of w (for independence checks; exponential).
std::vector<std::vector<int>> all_reduced_words(const WeylElement& w, const RootSystem& rs);

// Subword criterion.
bool bruhat_leq_weyl(const WeylElement& u, const WeylElement& w, const RootSystem& rs);

// Structure constants of H*(G/P) from localization.
class CosetOracle {
 public:
  CosetOracle(RootSystem rs, std::set<int> marked);

  const RootSystem& root_system() const { return rs_; }
  const std::vector<CosetRep>& cosets() const { return cosets_; }
  int index_of(const WeylElement& w) const;  // -1 if not a coset representative

  // sigma_u|_w at the evaluation point (zero unless u <= w).
  const BigInt& restriction(int u, int w) const { return values_[u][w]; }

  // Equivariant constant C_{u,v}^w at the evaluation point; ordinary constant when degrees match.
  Rational constant(int u, int v, int w) const;

  // Ordinary product: index -> coefficient.
  std::map<int, BigInt> product(int u, int v) const;

 private:
  std::vector<Rational> equivariant_row(int u, int v, int max_length) const;

  RootSystem rs_;
  std::set<int> marked_;
  std::vector<CosetRep> cosets_;
  std::map<WeylElement, int> index_;
  std::vector<std::vector<BigInt>> values_;
};

Rational oracle_constant(const WeylElement& u, const WeylElement& v, const WeylElement& w,
                         const CosetOracle& oracle);

// Oracle indexed by the shapes of a family.
class FamilyOracle {
 public:
  explicit FamilyOracle(const Family& f);

  const Family& family() const { return family_; }
  const std::vector<Shape>& shapes() const { return shapes_; }
  const CosetOracle& cosets() const { return *oracle_; }
  int coset_of(const Shape& s) const;

  Expansion product(const Shape& a, const Shape& b) const;

 private:
  Family family_;
  std::unique_ptr<CosetOracle> oracle_;
  std::vector<Shape> shapes_;
  std::map<Shape, int> coset_index_;
  std::vector<Shape> shape_of_coset_;
};

// Type A: sigma_{s_r} * sigma_w as a sum over transpositions.
std::map<WeylElement, int> monk_multiply(const WeylElement& w, int r, int n);

}  // namespace ryd
