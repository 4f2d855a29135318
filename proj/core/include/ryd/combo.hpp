#pragma once

#include <cstdint>
#include <map>

#include "ryd/dyadic.hpp"
#include "ryd/shapes.hpp"

namespace ryd {

// Formal linear combination; zero coefficients are never stored.
template <class Key>
class Combo {
 public:
  void add(const Key& k, const Dyadic& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(k, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  void add(const Combo& other, const Dyadic& scale = Dyadic(1)) {
    for (const auto& [k, c] : other.terms_) add(k, c * scale);
  }
  Dyadic coeff(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Dyadic(0) : it->second;
  }
  const std::map<Key, Dyadic>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  bool operator==(const Combo&) const = default;

 private:
  std::map<Key, Dyadic> terms_;
};

using ClassCombo = Combo<Shape>;
using FlatCombo = Combo<FlatShape>;

// Integer expansion handed across the API boundary.
using Expansion = std::map<Shape, std::int64_t>;

// Checks that every coefficient is a nonnegative integer.
Expansion to_expansion(const ClassCombo& c);

}  // namespace ryd
