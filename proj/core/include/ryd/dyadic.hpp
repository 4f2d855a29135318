#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace ryd {

// num / 2^exp, kept reduced (num odd whenever exp > 0).
class Dyadic {
 public:
  constexpr Dyadic() = default;
  Dyadic(std::int64_t value) : num_(value) {}  // NOLINT: implicit from integers
  static Dyadic make(std::int64_t num, int exp);

  std::int64_t numerator() const { return num_; }
  int exponent() const { return exp_; }
  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return exp_ == 0; }
  std::int64_t to_integer() const;  // throws InvariantViolation unless integral

  Dyadic scaled(int k) const;  // times 2^k, k may be negative

  Dyadic operator+(const Dyadic& o) const;
  Dyadic operator-(const Dyadic& o) const;
  Dyadic operator*(const Dyadic& o) const;
  Dyadic& operator+=(const Dyadic& o) { return *this = *this + o; }

  bool operator==(const Dyadic&) const = default;
  std::strong_ordering operator<=>(const Dyadic& o) const;

  std::string str() const;

 private:
  void normalize();
  std::int64_t num_ = 0;
  int exp_ = 0;
};

}  // namespace ryd
