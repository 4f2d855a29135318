#pragma once

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ryd/rootsys.hpp"

namespace ryd {

enum class FamilyKind { Flag, LG, OGodd, OGeven, ChainB, ChainC, G2P1, G2P2 };

std::string to_string(FamilyKind k);
FamilyKind parse_family_kind(const std::string& name);  // accepts aliases such as "D"

struct Family {
  FamilyKind kind = FamilyKind::LG;
  int n = 0;

  static Family make(FamilyKind kind, int n);  // validates n; G2 ignores n

  int lambda_size() const;  // N = |Lambda_{G/P}|
  int half() const { return (lambda_size() - 1) / 2; }
  int count() const;        // |Y_{G/P}|
  bool planar() const { return kind != FamilyKind::OGeven; }
  bool is_chain() const;    // ChainB, ChainC, G2P1, G2P2: single-row shapes

  auto operator<=>(const Family&) const = default;
};

std::string to_string(const Family& f);

enum class Charge { Neutral, Up, Down };

Charge opposite(Charge c);

// (r1, r2) are the rows of the non-adjoint part; chain and G2 shapes store their
// total size k as (k, 0) including the adjoint root when on.
struct Shape {
  Family family;
  int r1 = 0;
  int r2 = 0;
  bool on = false;
  Charge charge = Charge::Neutral;

  int size() const;  // number of roots, adjoint included

  auto operator<=>(const Shape&) const = default;
};

// Element of the planarized OG(2,2n) poset: a partition in 2 x (2n-4) with a marker.
struct FlatShape {
  int r1 = 0;
  int r2 = 0;
  bool on = false;

  int size() const { return r1 + r2 + (on ? 1 : 0); }
  auto operator<=>(const FlatShape&) const = default;
};

// Unflattened OG(2,2n) form: two layers, each a partition in 2 x (n-2).
struct TwoLayerShape {
  int b1 = 0, b2 = 0;
  int t1 = 0, t2 = 0;
  bool on = false;

  auto operator<=>(const TwoLayerShape&) const = default;
};

bool validate_shape(const Shape& s);
void require_valid(const Shape& s);  // throws ParseError

Shape make_shape(const Family& f, int r1, int r2, bool on, Charge charge = Charge::Neutral);

std::vector<Shape> enumerate_shapes(const Family& f);

// Text format "r1,r2|on|up"; parse also accepts "[b1,b2/t1,t2]|on" for OGeven.
std::string format_shape(const Shape& s);
Shape parse_shape(const Family& f, const std::string& text);

bool bruhat_leq(const Shape& a, const Shape& b);

int sh(const Shape& s);
int fsh(const FlatShape& f, int n);

FlatShape flatten(const Shape& s);
FlatShape flatten(const TwoLayerShape& t);
std::vector<Shape> unflatten(const FlatShape& f, int n);
bool is_ambiguous(const FlatShape& f, int n);
bool valid_flat(const FlatShape& f, int n);

TwoLayerShape to_two_layer(const Shape& s);
Shape from_two_layer(const TwoLayerShape& t, int n);  // throws ParseError if invalid

// Root-system realization of a family's shapes.
struct ShapeGeometry {
  CartanType type;
  int rank;
  std::set<int> marked;
};

// System whose Lambda indexes the family's shapes (the adjoint partner for LG, ChainB, G2P1).
ShapeGeometry indexing_geometry(const Family& f);
// System whose cohomology the family computes.
ShapeGeometry variety_geometry(const Family& f);

// Ambient coordinates of the roots used by s, inside the indexing system.
std::vector<std::vector<int>> shape_roots(const Shape& s);
// Root set of s as sorted positive-root indices of rs (the indexing system).
std::vector<int> shape_root_indices(const Shape& s, const RootSystem& rs);

// Minimal coset representative of the indexing system whose inversion set is s.
WeylElement shape_to_coset(const Shape& s);

}  // namespace ryd
