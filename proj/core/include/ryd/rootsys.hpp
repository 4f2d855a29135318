#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace ryd {

enum class CartanType { A, B, C, D, G2 };

std::string to_string(CartanType t);

enum class RootLength { Short, Long };

struct Root {
  std::vector<int> coeffs;   // simple-root basis
  std::vector<int> ambient;  // standard coordinates
  RootLength length = RootLength::Long;
};

// Signed permutation of the ambient coordinates: e_i -> sign(w[i]) e_{|w[i]|}.
class WeylElement {
 public:
  WeylElement() = default;
  explicit WeylElement(std::vector<int> window);
  static WeylElement identity(int dim);

  const std::vector<int>& window() const { return window_; }
  int dim() const { return static_cast<int>(window_.size()); }
  int sign_changes() const;

  std::vector<int> apply(const std::vector<int>& v) const;
  WeylElement operator*(const WeylElement& other) const;  // this after other
  WeylElement inverse() const;

  auto operator<=>(const WeylElement&) const = default;

 private:
  std::vector<int> window_;
};

class RootSystem {
 public:
  // A takes the flag convention: parameter n builds A_{n-1} on Z^n.
  static RootSystem build(CartanType type, int n);

  CartanType type() const { return type_; }
  int n() const { return n_; }
  int rank() const { return static_cast<int>(simple_.size()); }
  int ambient_dim() const { return dim_; }

  const std::vector<Root>& simple_roots() const { return simple_; }
  const std::vector<Root>& positive_roots() const { return positive_; }
  const std::vector<WeylElement>& simple_reflections() const { return reflections_; }

  // Index into positive_roots(), or nullopt if v is not a positive root.
  std::optional<int> positive_index(const std::vector<int>& ambient) const;
  bool is_positive(const std::vector<int>& ambient) const;
  bool is_root(const std::vector<int>& ambient) const;

  bool is_short(const Root& r) const;
  bool is_short(int positive_index) const;

  // Positive roots sent negative by w, as sorted indices.
  std::vector<int> inversion_set(const WeylElement& w) const;
  int length(const WeylElement& w) const;
  bool is_valid_element(const WeylElement& w) const;

  // Lexicographically least reduced word (1-based node labels).
  std::vector<int> reduced_word(const WeylElement& w) const;
  WeylElement from_word(const std::vector<int>& word) const;

 private:
  CartanType type_ = CartanType::A;
  int n_ = 0;
  int dim_ = 0;
  std::vector<Root> simple_;
  std::vector<Root> positive_;
  std::vector<WeylElement> reflections_;
  std::map<std::vector<int>, int> index_;
};

inline RootSystem build_root_system(CartanType type, int n) { return RootSystem::build(type, n); }

// Lambda_{G/P}: positive roots with positive coefficient on some marked node.
class RootPoset {
 public:
  RootPoset(const RootSystem& rs, std::set<int> marked);

  const std::vector<int>& ground() const { return ground_; }  // positive-root indices
  std::size_t size() const { return ground_.size(); }
  const std::set<int>& marked() const { return marked_; }
  bool leq(int a, int b) const;  // positive-root indices
  std::vector<int> maximal_elements() const;
  bool contains(int positive_index) const;

 private:
  std::vector<std::vector<int>> coeffs_;  // of every positive root
  std::set<int> marked_;
  std::vector<int> ground_;
};

RootPoset lambda_poset(const RootSystem& rs, const std::set<int>& marked_nodes);

struct CosetRep {
  WeylElement w;
  int length = 0;
  std::vector<int> inversions;  // positive-root indices
  std::vector<int> reduced_word;
};

// Minimal length representatives of W/W_P, sorted by (length, window).
std::vector<CosetRep> minimal_coset_reps(const RootSystem& rs, const std::set<int>& marked_nodes);

bool is_short(const RootSystem& rs, const Root& r);

}  // namespace ryd
