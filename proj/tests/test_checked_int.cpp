#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "pavenum/checked_int.hpp"

using pav::CheckedInt;
using pav::CountSeries;

TEST_CASE("basic arithmetic") {
  CheckedInt a = 20;
  CheckedInt b = 3;
  CHECK(a + b == CheckedInt(23));
  CHECK(a - b == CheckedInt(17));
  CHECK(a * b == CheckedInt(60));
  CHECK(-a == CheckedInt(-20));
  CHECK(CheckedInt().is_zero());
  CHECK_FALSE(a.is_zero());
  CHECK(a > b);
  CHECK(b < a);
  CHECK(a == CheckedInt(20));
}

TEST_CASE("compound assignment") {
  CheckedInt a = 5;
  a += 7;
  CHECK(a == CheckedInt(12));
  a -= 2;
  CHECK(a == CheckedInt(10));
  a *= -3;
  CHECK(a == CheckedInt(-30));
}

TEST_CASE("exact division") {
  CHECK(CheckedInt(84).div_exact(7) == CheckedInt(12));
  CHECK(CheckedInt(-84).div_exact(7) == CheckedInt(-12));
  CHECK_THROWS_AS(CheckedInt(7).div_exact(0), std::domain_error);
  CHECK_THROWS_AS(CheckedInt(7).div_exact(2), std::domain_error);
}

TEST_CASE("values beyond 64 bits survive") {
  // 10^20 squared is ~1e40, past the 128-bit range, but 10^20 itself and
  // moderate products must be exact.
  CheckedInt big = 1'000'000'000'000'000'000LL;  // 10^18
  CheckedInt p = big * 100;                      // 10^20
  CHECK(p.str() == "100000000000000000000");
  CHECK_THROWS_AS(p.to_longlong(), std::overflow_error);
  CHECK(big.to_longlong() == 1'000'000'000'000'000'000LL);
}

TEST_CASE("overflow is an error, not a wrap") {
  CheckedInt x = 1'000'000'000'000'000'000LL;  // 10^18
  CheckedInt big = x * x;                      // 10^36, still fits
  CHECK_THROWS_AS(big * 1000, std::overflow_error);
  CHECK_THROWS_AS(big * big, std::overflow_error);
  CheckedInt neg = -big;
  CHECK_THROWS_AS(neg * 1000, std::overflow_error);
}

TEST_CASE("str and stream output") {
  CHECK(CheckedInt(0).str() == "0");
  CHECK(CheckedInt(42).str() == "42");
  CHECK(CheckedInt(-42).str() == "-42");
  std::ostringstream os;
  os << CheckedInt(7) << ' ' << CheckedInt(-19);
  CHECK(os.str() == "7 -19");
}

TEST_CASE("str survives the most negative value") {
  // -2^127: negation overflows, so str() must not rely on it.
  CheckedInt two = 2;
  CheckedInt p63 = 1;
  for (int i = 0; i < 63; ++i) p63 *= two;  // 2^63 as CheckedInt
  CheckedInt p126 = p63 * p63;              // 2^126
  CheckedInt most_negative = -p126 - p126;  // -2^127
  CHECK(most_negative.str() == "-170141183460469231731687303715884105728");
}

TEST_CASE("agreement_length") {
  CountSeries a = {1, 1, 2, 5, 14};
  CountSeries b = {1, 1, 2, 5, 13, 34};
  CHECK(pav::agreement_length(a, b) == 4);
  CHECK(pav::agreement_length(b, a) == 4);
  CHECK(pav::agreement_length(a, a) == 5);
  CHECK(pav::agreement_length(a, CountSeries{}) == 0);
  CHECK(pav::agreement_length(CountSeries{2}, CountSeries{1}) == 0);
}
