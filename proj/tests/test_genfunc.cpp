#include <stdexcept>
#include <string>

#include "doctest.h"
#include "pavenum/genfunc.hpp"

using pav::Chain;
using pav::CheckedInt;
using pav::CountSeries;
using pav::IntPolynomial;
using pav::RationalGF;

TEST_CASE("polynomial arithmetic and normalization") {
  const IntPolynomial a = {1, 1};   // 1 + x
  const IntPolynomial b = {1, -1};  // 1 - x
  CHECK(a * b == IntPolynomial{1, 0, -1});
  CHECK(a + b == IntPolynomial{2});
  CHECK(a - a == IntPolynomial{});
  CHECK((a - a).is_zero());
  CHECK((a - a).degree() == -1);
  CHECK(IntPolynomial({1, 2, 0, 0}) == IntPolynomial({1, 2}));
  CHECK(IntPolynomial({1, 2}).coeff(7) == CheckedInt(0));
  CHECK(IntPolynomial({1, 2}).coeff(1) == CheckedInt(2));
  CHECK(IntPolynomial({0, 0, 3}).degree() == 2);
}

TEST_CASE("polynomial rendering") {
  CHECK(IntPolynomial({1, -2, 0, 1}).str() == "1 - 2*x + x^3");
  CHECK(IntPolynomial({0, 1}).str() == "x");
  CHECK(IntPolynomial({0, -1, 0, 2}).str() == "-x + 2*x^3");
  CHECK(IntPolynomial({-1}).str() == "-1");
  CHECK(IntPolynomial{}.str() == "0");
  CHECK(pav::fib_gf().str() == "(1)/(1 - x - x^2)");
  CHECK(pav::t_gf().str() == "(1 - x)/(1 - 2*x)");
}

TEST_CASE("make_gf validates the denominator") {
  CHECK_THROWS_AS(pav::make_gf({1}, {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(pav::make_gf({1}, {}), std::invalid_argument);
  CHECK_NOTHROW(pav::make_gf({}, {1}));  // the zero series is fine
}

TEST_CASE("series expansion fixtures") {
  CHECK(pav::series(pav::t_gf(), 5) == CountSeries{1, 1, 2, 4, 8, 16});
  CHECK(pav::series(pav::fib_gf(), 8) == CountSeries{1, 1, 2, 3, 5, 8, 13, 21, 34});
  CHECK(pav::series(pav::fbar_gf(), 6) == CountSeries{1, 1, 2, 5, 13, 34, 89});
  CHECK(pav::series(pav::tk_gf(3), 6) == CountSeries{1, 1, 2, 4, 7, 13, 24});
  CHECK(pav::series(pav::fbark_gf(3), 6) == CountSeries{1, 1, 2, 5, 12, 29, 70});
  CHECK(pav::series(pav::fbark_gf(4), 8) == CountSeries{1, 1, 2, 5, 13, 33, 84, 214, 545});
  CHECK(pav::series(pav::convergent_chain(Chain::P, 4), 8) ==
        CountSeries{1, 1, 2, 5, 14, 41, 122, 365, 1094});
  CHECK(pav::series(pav::make_gf({}, {1}), 3) == CountSeries{0, 0, 0, 0});
}

TEST_CASE("generating-function identities") {
  CHECK(pav::gf_equal(pav::tk_gf(3), pav::make_gf({1}, {1, -1, -1, -1})));
  CHECK(pav::gf_equal(pav::tk_gf(2), pav::fib_gf()));
  CHECK(pav::gf_equal(pav::tk_gf(1), pav::make_gf({1}, {1, -1})));
  CHECK(pav::gf_equal(pav::fbark_gf(3), pav::make_gf({1, -1, -1}, {1, -2, -1})));
  CHECK(pav::gf_equal(pav::convergent_chain(Chain::P, 2), pav::t_gf()));
  CHECK(pav::gf_equal(pav::convergent_chain(Chain::P, 3), pav::fbar_gf()));
  CHECK(pav::gf_equal(pav::fib_gf(), pav::fib_gf()));
  CHECK_FALSE(pav::gf_equal(pav::fib_gf(), pav::t_gf()));
}

TEST_CASE("gf parameter ranges") {
  CHECK_THROWS_AS(pav::tk_gf(0), std::domain_error);
  CHECK_THROWS_AS(pav::fbark_gf(2), std::domain_error);
  CHECK_THROWS_AS(pav::convergent_chain(Chain::P, 0), std::domain_error);
  CHECK_THROWS_AS(pav::convergent_chain(Chain::M, 2), std::domain_error);
  CHECK_NOTHROW(pav::convergent_chain(Chain::M, 3));
}

TEST_CASE("the two convergent chains coincide from k = 3 on") {
  // Both chains iterate f -> 1/(1 - x*f); the M base equals the P chain's
  // third convergent, so the functions are identical for k >= 3.
  CHECK(pav::gf_equal(pav::convergent_chain(Chain::M, 3), pav::fbar_gf()));
  for (int k = 3; k <= 8; ++k) {
    CAPTURE(k);
    CHECK(pav::gf_equal(pav::convergent_chain(Chain::P, k), pav::convergent_chain(Chain::M, k)));
  }
}

TEST_CASE("agreement lengths against the limit series") {
  const CountSeries t_terms = pav::series(pav::t_gf(), 12);
  const CountSeries fbar_terms = pav::series(pav::fbar_gf(), 12);
  const CountSeries catalan = pav::catalan_terms(12);
  for (int k = 2; k <= 8; ++k) {
    CAPTURE(k);
    CHECK(pav::agreement_length(pav::series(pav::tk_gf(k), 12), t_terms) == k + 1);
    CHECK(pav::agreement_length(pav::series(pav::convergent_chain(Chain::P, k), 12), catalan) ==
          k + 1);
  }
  for (int k = 3; k <= 8; ++k) {
    CAPTURE(k);
    CHECK(pav::agreement_length(pav::series(pav::fbark_gf(k), 12), fbar_terms) == k + 1);
    CHECK(pav::agreement_length(pav::series(pav::convergent_chain(Chain::M, k), 12), catalan) ==
          k + 1);
  }
}

TEST_CASE("catalan oracle consistency") {
  const CountSeries conv = pav::catalan_terms(30);
  const CountSeries closed = pav::catalan_closed_form(30);
  CHECK(conv == closed);
  CHECK(conv[0] == CheckedInt(1));
  CHECK(conv[7] == CheckedInt(429));
  CHECK(conv[10] == CheckedInt(16796));
  CHECK(conv[30].str() == "3814986502092304");
  CHECK(pav::catalan_terms(0) == CountSeries{1});
}

TEST_CASE("series coefficients stay nonnegative for every catalog gf") {
  for (const auto* id : {"fib", "t", "fbar", "tk:5", "fbark:5", "convergentP:6",
                         "convergentM:6", "catalan"}) {
    CAPTURE(id);
    for (const CheckedInt& c : pav::series_by_id(id, std::nullopt, 20))
      CHECK(c >= CheckedInt(0));
  }
}

TEST_CASE("lookup by id") {
  REQUIRE(pav::gf_by_id("fib").has_value());
  CHECK(pav::gf_equal(*pav::gf_by_id("fib"), pav::fib_gf()));
  CHECK(pav::gf_equal(*pav::gf_by_id("tk:3"), pav::tk_gf(3)));
  CHECK(pav::gf_equal(*pav::gf_by_id("tk", 3), pav::tk_gf(3)));
  CHECK_FALSE(pav::gf_by_id("catalan").has_value());
  CHECK_THROWS_AS(pav::gf_by_id("tk"), std::domain_error);        // needs k
  CHECK_THROWS_AS(pav::gf_by_id("fib", 2), std::domain_error);    // takes no k
  CHECK_THROWS_AS(pav::gf_by_id("nope"), std::invalid_argument);  // unknown id
  CHECK(pav::series_by_id("catalan", std::nullopt, 6) == pav::catalan_terms(6));
  CHECK(pav::series_by_id("fbark", 3, 6) == CountSeries{1, 1, 2, 5, 12, 29, 70});
}

TEST_CASE("overflow in series extraction is reported") {
  // 2^(n-1) overflows 128 bits near n = 128.
  CHECK_THROWS_AS(pav::series(pav::t_gf(), 200), std::overflow_error);
}
