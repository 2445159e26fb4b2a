#include "pavenum/checked_int.hpp"

#include <algorithm>
#include <ostream>

namespace pav {

std::string CheckedInt::str() const {
  __int128 x = v_;
  if (x == 0) return "0";
  bool neg = x < 0;
  std::string digits;
  // Negate digit by digit to survive the most negative value.
  while (x != 0) {
    int d = static_cast<int>(x % 10);
    x /= 10;
    if (d < 0) d = -d;
    digits.push_back(static_cast<char>('0' + d));
  }
  if (neg) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

std::ostream& operator<<(std::ostream& os, CheckedInt v) { return os << v.str(); }

int agreement_length(const CountSeries& a, const CountSeries& b) {
  size_t n = std::min(a.size(), b.size());
  size_t i = 0;
  while (i < n && a[i] == b[i]) ++i;
  return static_cast<int>(i);
}

}  // namespace pav
