#include "ryd/dyadic.hpp"

#include <algorithm>

#include "ryd/error.hpp"

namespace ryd {

namespace {

std::int64_t shift_up(std::int64_t v, int k) {
  std::int64_t out = 0;
  if (k >= 62 || __builtin_mul_overflow(v, std::int64_t{1} << k, &out)) {
    throw InvariantViolation("dyadic overflow");
  }
  return out;
}

}  // namespace

Dyadic Dyadic::make(std::int64_t num, int exp) {
  Dyadic d;
  if (exp >= 0) {
    d.num_ = num;
    d.exp_ = exp;
  } else {
    d.num_ = shift_up(num, -exp);
  }
  d.normalize();
  return d;
}

void Dyadic::normalize() {
  if (num_ == 0) {
    exp_ = 0;
    return;
  }
  while (exp_ > 0 && num_ % 2 == 0) {
    num_ /= 2;
    --exp_;
  }
}

std::int64_t Dyadic::to_integer() const {
  if (!is_integer()) throw InvariantViolation("non-integral coefficient " + str());
  return num_;
}

Dyadic Dyadic::scaled(int k) const { return make(num_, exp_ - k); }

Dyadic Dyadic::operator+(const Dyadic& o) const {
  const int e = std::max(exp_, o.exp_);
  std::int64_t sum = 0;
  if (__builtin_add_overflow(shift_up(num_, e - exp_), shift_up(o.num_, e - o.exp_), &sum)) {
    throw InvariantViolation("dyadic overflow");
  }
  return make(sum, e);
}

Dyadic Dyadic::operator-(const Dyadic& o) const { return *this + make(-o.num_, o.exp_); }

Dyadic Dyadic::operator*(const Dyadic& o) const {
  std::int64_t p = 0;
  if (__builtin_mul_overflow(num_, o.num_, &p)) throw InvariantViolation("dyadic overflow");
  return make(p, exp_ + o.exp_);
}

std::strong_ordering Dyadic::operator<=>(const Dyadic& o) const {
  const int e = std::max(exp_, o.exp_);
  return shift_up(num_, e - exp_) <=> shift_up(o.num_, e - o.exp_);
}

std::string Dyadic::str() const {
  if (exp_ == 0) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(std::int64_t{1} << exp_);
}

}  // namespace ryd
