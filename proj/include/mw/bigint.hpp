#pragma once

#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace mw {

using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const BigInt& x) { return x.str(); }

struct Overflow : std::overflow_error {
  Overflow() : std::overflow_error("64-bit overflow") {}
};

/// 64-bit integer that throws Overflow instead of wrapping.  Exact algorithms
/// run on it first and fall back to BigInt when it throws.
class CheckedInt {
 public:
  constexpr CheckedInt() = default;
  constexpr CheckedInt(std::int64_t v) : v_(v) {}

  constexpr std::int64_t value() const { return v_; }

  friend CheckedInt operator+(CheckedInt a, CheckedInt b) {
    std::int64_t r;
    if (__builtin_add_overflow(a.v_, b.v_, &r)) throw Overflow();
    return r;
  }
  friend CheckedInt operator-(CheckedInt a, CheckedInt b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a.v_, b.v_, &r)) throw Overflow();
    return r;
  }
  friend CheckedInt operator*(CheckedInt a, CheckedInt b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a.v_, b.v_, &r)) throw Overflow();
    return r;
  }
  friend CheckedInt operator/(CheckedInt a, CheckedInt b) {
    if (a.v_ == std::numeric_limits<std::int64_t>::min() && b.v_ == -1) throw Overflow();
    return a.v_ / b.v_;
  }
  friend CheckedInt operator%(CheckedInt a, CheckedInt b) {
    if (b.v_ == -1) return 0;
    return a.v_ % b.v_;
  }
  CheckedInt operator-() const {
    if (v_ == std::numeric_limits<std::int64_t>::min()) throw Overflow();
    return -v_;
  }
  CheckedInt& operator+=(CheckedInt o) { return *this = *this + o; }
  CheckedInt& operator-=(CheckedInt o) { return *this = *this - o; }
  CheckedInt& operator*=(CheckedInt o) { return *this = *this * o; }

  friend constexpr auto operator<=>(CheckedInt, CheckedInt) = default;
  friend std::ostream& operator<<(std::ostream& os, CheckedInt x) { return os << x.v_; }

 private:
  std::int64_t v_ = 0;
};

inline CheckedInt abs(CheckedInt x) { return x < 0 ? -x : x; }

inline BigInt to_big(CheckedInt x) { return BigInt(x.value()); }
inline BigInt to_big(const BigInt& x) { return x; }

}  // namespace mw
