#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "pavenum/production_matrix.hpp"
#include "pavenum/succession_engine.hpp"

using pav::CheckedInt;
using pav::CountSeries;
using pav::Label;
using pav::Matrix;
using pav::ProductionMatrix;
using pav::TruncationSpec;

TEST_CASE("matrix basics") {
  Matrix m{{0, 1}, {1, 1}};
  CHECK(m.size() == 2);
  CHECK(m.at(0, 1) == CheckedInt(1));
  CHECK(m == Matrix{{0, 1}, {1, 1}});
  CHECK_FALSE(m == Matrix{{0, 1}, {1, 2}});
  CHECK_THROWS_AS((Matrix{{0, 1}, {1}}), std::invalid_argument);

  const std::vector<CheckedInt> row = {2, 3};
  const std::vector<CheckedInt> expect = {3, 5};
  CHECK(pav::apply(row, m) == expect);
  CHECK_THROWS_AS(pav::apply({1, 2, 3}, m), std::invalid_argument);
}

TEST_CASE("window_equal") {
  Matrix a{{1, 2, 9}, {3, 4, 9}, {9, 9, 9}};
  Matrix b{{1, 2}, {3, 4}};
  CHECK(pav::window_equal(a, b, 2));
  CHECK_FALSE(pav::window_equal(a, Matrix{{1, 2}, {3, 5}}, 2));
  CHECK_THROWS_AS(pav::window_equal(a, b, 3), std::invalid_argument);
}

TEST_CASE("truncation spec invariants") {
  CHECK_THROWS_AS(pav::from_rule(pav::rscat_rule(), TruncationSpec{0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(pav::from_rule(pav::rscat_rule(), TruncationSpec{4, -1}), std::invalid_argument);
  // size must be at least guarantee_level + 2
  CHECK_THROWS_AS(pav::from_rule(pav::rscat_rule(), TruncationSpec{4, 3}), std::invalid_argument);
}

TEST_CASE("from_rule on the Fibonacci rule is exact and tiny") {
  const ProductionMatrix pm = pav::from_rule(pav::rsfibo_rule(), TruncationSpec{2, 0});
  CHECK(pm.m == Matrix{{0, 1}, {1, 1}});
  CHECK(pm.exact);
  CHECK(pm.axiom_index == 0);
  REQUIRE(pm.labels.size() == 2);
  CHECK(pm.labels[0] == Label{1, std::nullopt});
  CHECK(pm.labels[1] == Label{2, std::nullopt});
  // Exact window: counting past the guarantee level is allowed.
  CHECK(pav::matrix_counts(pm, 10) ==
        CountSeries{1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89});
}

TEST_CASE("from_rule reproduces the small even-Fibonacci matrix") {
  const ProductionMatrix pm = pav::from_rule(pav::evf2_rule(3), TruncationSpec{3, 1});
  CHECK(pm.m == Matrix{{0, 1, 0}, {0, 1, 1}, {0, 2, 1}});
  CHECK(pm.exact);
  CHECK(pav::matrix_counts(pm, 8) == CountSeries{1, 1, 2, 5, 12, 29, 70, 169, 408});
}

TEST_CASE("the unbounded-label matrix window") {
  // omega(3) sends (h) to (2)^(h-1)(h+1): row h has h-1 in column (2) and a
  // single 1 in column (h+1).
  const ProductionMatrix pm = pav::from_rule(pav::omega_rule(3), TruncationSpec{12, 9});
  REQUIRE(pm.m.size() == 11);  // labels (1)..(11)
  CHECK_FALSE(pm.exact);       // label (11) produces (12), outside the window
  CHECK(pm.guarantee_level == 9);
  for (int i = 0; i < pm.m.size(); ++i) {
    for (int j = 0; j < pm.m.size(); ++j) {
      CheckedInt expect = 0;
      if (j == 1) expect += i;               // (2)-column multiplicity h-1
      if (j == i + 1) expect += 1;           // the (h+1) son
      CHECK(pm.m.at(i, j) == expect);
    }
  }
  CHECK(pav::matrix_counts(pm, 9) ==
        CountSeries{1, 1, 2, 5, 13, 34, 89, 233, 610, 1597});
  // Beyond the guarantee the truncated window must refuse.
  CHECK_THROWS_AS(pav::matrix_counts(pm, 10), std::invalid_argument);
}

TEST_CASE("from_rule reports the needed window size") {
  // evf1(8) reaches labels (1),(2),(3_0..3_5): eight labels, so size 7 is
  // too small even though it satisfies the guarantee-level invariant.
  bool threw = false;
  try {
    pav::from_rule(pav::evf1_rule(8), TruncationSpec{7, 5});
  } catch (const std::invalid_argument& e) {
    threw = true;
    CHECK(std::string(e.what()).find("need at least 8") != std::string::npos);
  }
  CHECK(threw);
  CHECK_NOTHROW(pav::from_rule(pav::evf1_rule(8), TruncationSpec{8, 5}));
}

TEST_CASE("subscripted labels count correctly through the matrix") {
  const ProductionMatrix gfib = pav::from_rule(pav::gfib_rule(3), TruncationSpec{10, 8});
  CHECK(pav::matrix_counts(gfib, 8) == CountSeries{1, 1, 2, 4, 7, 13, 24, 44, 81});
  const ProductionMatrix evf1 = pav::from_rule(pav::evf1_rule(4), TruncationSpec{12, 8});
  CHECK(pav::matrix_counts(evf1, 8) == CountSeries{1, 1, 2, 5, 13, 33, 84, 214, 545});
}

TEST_CASE("matrix counts equal rule level counts") {
  for (const auto* rule_id : {"rscat", "pow2", "cat1:4", "omega:5", "direct:4", "evf2:4"}) {
    CAPTURE(rule_id);
    const auto rule = pav::rule_by_id(rule_id);
    const ProductionMatrix pm = pav::from_rule(rule, TruncationSpec{14, 10});
    CHECK(pav::matrix_counts(pm, 10) == pav::level_counts(rule, 10));
  }
}

TEST_CASE("truncation safety: a larger window never changes guaranteed counts") {
  for (const auto* rule_id : {"rscat", "pow2", "omega:4", "evf1:4"}) {
    CAPTURE(rule_id);
    const auto rule = pav::rule_by_id(rule_id);
    const ProductionMatrix small = pav::from_rule(rule, TruncationSpec{10, 6});
    const ProductionMatrix padded = pav::from_rule(rule, TruncationSpec{15, 6});
    const ProductionMatrix deeper = pav::from_rule(rule, TruncationSpec{15, 11});
    CHECK(pav::matrix_counts(small, 6) == pav::matrix_counts(padded, 6));
    CHECK(pav::matrix_counts(small, 6) == pav::matrix_counts(deeper, 6));
  }
}

TEST_CASE("P block recursion") {
  CHECK(pav::pk_block_recursion(2).m == Matrix{{0, 1}, {0, 2}});
  CHECK(pav::pk_block_recursion(3).m == Matrix{{0, 1, 0}, {0, 1, 1}, {0, 1, 2}});
  CHECK_THROWS_AS(pav::pk_block_recursion(1), std::domain_error);
  for (int k = 2; k <= 6; ++k) {
    CAPTURE(k);
    const ProductionMatrix pk = pav::pk_block_recursion(k);
    CHECK(pk.exact);
    CHECK(pk.m.size() == k);
    const ProductionMatrix fr = pav::from_rule(pav::cat1_rule(k), TruncationSpec{k, k - 2});
    CHECK(pk.m == fr.m);
    CHECK(pk.labels == fr.labels);
  }
}

TEST_CASE("M block recursion matches the omega rule") {
  CHECK_THROWS_AS(pav::mk_block_recursion(3, TruncationSpec{10, 8}), std::domain_error);
  // The base matrix must keep at least two rows after carving out blocks.
  CHECK_THROWS_AS(pav::mk_block_recursion(6, TruncationSpec{3, 1}), std::invalid_argument);
  for (int k = 4; k <= 6; ++k) {
    CAPTURE(k);
    const TruncationSpec spec{11, 9};
    const ProductionMatrix mk = pav::mk_block_recursion(k, spec);
    const ProductionMatrix fr = pav::from_rule(pav::omega_rule(k), spec);
    CHECK(mk.m == fr.m);
    CHECK(pav::matrix_counts(mk, 9) == pav::level_counts(pav::omega_rule(k), 9));
  }
}

TEST_CASE("a one-label closed rule counts all ones") {
  ProductionMatrix pm;
  pm.m = Matrix{{1}};
  pm.labels = {Label{1, std::nullopt}};
  pm.exact = true;
  CHECK(pav::matrix_counts(pm, 5) == CountSeries{1, 1, 1, 1, 1, 1});
}

TEST_CASE("matrix str renders an aligned grid") {
  const std::string s = Matrix{{0, 10}, {1, 1}}.str();
  CHECK(s.find("10") != std::string::npos);
  CHECK(s.find('\n') != std::string::npos);
}
