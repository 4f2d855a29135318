#pragma once

#include <initializer_list>
#include <string>
#include <utility>

#include "ryd/combo.hpp"
#include "ryd/shapes.hpp"

namespace ryd::test {

inline Family fam(FamilyKind k, int n) { return Family::make(k, n); }

inline Shape S(const Family& f, const std::string& text) { return parse_shape(f, text); }

inline Expansion expansion(const Family& f, std::initializer_list<std::pair<const char*, std::int64_t>> terms) {
  Expansion e;
  for (const auto& [s, c] : terms) e[parse_shape(f, s)] = c;
  return e;
}

}  // namespace ryd::test

namespace ryd::test {

struct FamilyParamName {
  template <class Info>
  std::string operator()(const Info& info) const {
    return to_string(info.param.first) + std::to_string(info.param.second);
  }
};

}  // namespace ryd::test
