#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ryd/shapes.hpp"
#include "ryd/table.hpp"

namespace ryd {

// (r1, r2, on) for planar families; (b1, b2, t1, t2, on) for OGeven.
std::vector<int> shape_vector(const Shape& s);

struct TripleVector {
  std::vector<int> lambda, mu, nu;
  std::vector<int> concat() const;
};

TripleVector triple_vector(const Shape& lambda, const Shape& mu, const Shape& nu);

// Shared Horn-type inequalities on (r1, r2, on) triples.
bool horn_inequalities(const std::vector<int>& l, const std::vector<int>& m, const std::vector<int>& n);

bool nonzero_predicate(const Shape& lambda, const Shape& mu, const Shape& nu);

// Predicate versus rule engine over all triples.
SuiteReport verify_polytope_description(const Family& f);
SuiteReport verify_polytope_description(const StructTable& t);

struct WitnessPoint {
  Shape nu;
  std::vector<int> vector;
  std::int64_t coeff = 0;
};

struct NonconvexityWitness {
  std::string label;
  Shape lambda, mu;
  std::vector<WitnessPoint> points;
  bool collinear = false;
  bool alternates = false;  // zero/nonzero labels switch at every step
  std::string pattern;      // e.g. "ZNZN"
};

// The collinear line through nu = (n-2, k, n-2-k, 0, 0), k = 0..3 (k = 0..2 when n = 4).
NonconvexityWitness find_nonconvexity_witness(int n);

// Second n = 4 witness and both OG(2,10) witnesses.
std::vector<NonconvexityWitness> example_witnesses();

// Column-height encoding: n-2 bottom columns, n-2 top columns, marker.
Shape shape_from_columns(int n, const std::vector<int>& cols);
// Flattened encoding (r1, r2, on, charge) with charge 1 = up, -1 = down.
Shape shape_from_flat_vector(int n, const std::vector<int>& v);
Shape shape_from_layers(int n, const std::vector<int>& v);  // (b1, b2, t1, t2, on)
std::vector<int> shape_columns(const Shape& s);
std::vector<int> shape_flat_vector(const Shape& s);

}  // namespace ryd
