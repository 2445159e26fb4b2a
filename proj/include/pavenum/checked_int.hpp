#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace pav {

// Signed 128-bit integer with overflow-checked arithmetic. Every count in
// the library flows through this type; wraparound is a hard error, never a
// silent wrap.
class CheckedInt {
 public:
  constexpr CheckedInt() : v_(0) {}
  constexpr CheckedInt(long long x) : v_(x) {}  // NOLINT: implicit from literals
  constexpr CheckedInt(int x) : v_(x) {}        // NOLINT

  CheckedInt operator+(CheckedInt o) const {
    __int128 r;
    if (__builtin_add_overflow(v_, o.v_, &r)) throw std::overflow_error("CheckedInt: addition overflow");
    return raw(r);
  }
  CheckedInt operator-(CheckedInt o) const {
    __int128 r;
    if (__builtin_sub_overflow(v_, o.v_, &r)) throw std::overflow_error("CheckedInt: subtraction overflow");
    return raw(r);
  }
  CheckedInt operator*(CheckedInt o) const {
    __int128 r;
    if (__builtin_mul_overflow(v_, o.v_, &r)) throw std::overflow_error("CheckedInt: multiplication overflow");
    return raw(r);
  }
  CheckedInt& operator+=(CheckedInt o) { return *this = *this + o; }
  CheckedInt& operator-=(CheckedInt o) { return *this = *this - o; }
  CheckedInt& operator*=(CheckedInt o) { return *this = *this * o; }
  CheckedInt operator-() const { return CheckedInt(0) - *this; }

  // Exact division: throws std::domain_error when o is zero or does not
  // divide *this evenly (a non-integer series coefficient is a bug).
  CheckedInt div_exact(CheckedInt o) const {
    if (o.v_ == 0) throw std::domain_error("CheckedInt: division by zero");
    if (v_ % o.v_ != 0) throw std::domain_error("CheckedInt: inexact division");
    return raw(v_ / o.v_);
  }

  friend bool operator==(CheckedInt a, CheckedInt b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(CheckedInt a, CheckedInt b) {
    if (a.v_ < b.v_) return std::strong_ordering::less;
    if (a.v_ > b.v_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  bool is_zero() const { return v_ == 0; }

  long long to_longlong() const {
    if (v_ > static_cast<__int128>(INT64_MAX) || v_ < static_cast<__int128>(INT64_MIN))
      throw std::overflow_error("CheckedInt: value exceeds 64-bit range");
    return static_cast<long long>(v_);
  }

  std::string str() const;

 private:
  static constexpr CheckedInt raw(__int128 x) {
    CheckedInt c;
    c.v_ = x;
    return c;
  }
  __int128 v_;
};

std::ostream& operator<<(std::ostream& os, CheckedInt v);

// Exact per-length counts, index n = permutation length (term 0 counts the
// empty permutation).
using CountSeries = std::vector<CheckedInt>;

// Number of leading terms on which two series agree.
int agreement_length(const CountSeries& a, const CountSeries& b);

}  // namespace pav
