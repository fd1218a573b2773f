#include <limits>

#include "doctest.h"
#include "powerdiam/bounds.hpp"
#include "powerdiam/diameter.hpp"

using namespace powerdiam;

TEST_SUITE("bounds") {

TEST_CASE("checked arithmetic") {
  CHECK(checked_add(2, 3) == 5);
  CHECK(checked_mul(-4, 5) == -20);
  const auto big = std::numeric_limits<std::int64_t>::max();
  CHECK_THROWS_AS(checked_add(big, 1), OverflowError);
  CHECK_THROWS_AS(checked_mul(big / 2, 3), OverflowError);
}

TEST_CASE("order minus rank") {
  CHECK(general_upper_bound(24, 2) == 22);
  CHECK(general_upper_bound(1, 0) == 1 - 0);
  CHECK_THROWS_AS(general_upper_bound(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(general_upper_bound(6, -1), std::invalid_argument);
  CHECK_THROWS_AS(general_upper_bound(6, 7), std::invalid_argument);
}

TEST_CASE("abelian diameter formula") {
  CHECK(abelian_diameter(AbelianType({6})) == 5);
  CHECK(abelian_diameter(AbelianType({12, 2})) == 12);
  CHECK(abelian_diameter(AbelianType({})) == 0);

  // agrees with the exhaustive search on a small product group
  auto z2z4 = PermGroup::closure({parse_cycles("(1 2)", 6), parse_cycles("(3 4 5 6)", 6)});
  auto type = abelian_invariants(*z2z4);
  CHECK(abelian_diameter(type) == 4);
  CHECK(max_diameter_exhaustive(*z2z4).value == 4);
}

TEST_CASE("conjectured power bound") {
  CHECK(strong_conjecture_bound(24, 2, 2) == 44);
  CHECK(strong_conjecture_bound(6, 2, 3) == 12);
  CHECK_THROWS_AS(strong_conjecture_bound(6, 2, 0), std::invalid_argument);
}

TEST_CASE("product of slot cost and coordinate diameters") {
  std::vector<std::int64_t> diams{11, 11};
  CHECK(product_bound(6, diams) == 132);
  std::vector<std::int64_t> one{7};
  CHECK(product_bound(4, one) == 28);
  CHECK_THROWS_AS(product_bound(4, std::vector<std::int64_t>{}), std::invalid_argument);
  CHECK_THROWS_AS(product_bound(-1, one), std::invalid_argument);
  CHECK_THROWS_AS(product_bound(4, std::vector<std::int64_t>{-2}), std::invalid_argument);
}

TEST_CASE("symmetric group word ceilings") {
  CHECK(sn_diameter_bound(5, SnGensetKind::full_cycle) == 4 * 7 * 6);
  CHECK(sn_diameter_bound(4, SnGensetKind::short_cycle) == 3 * 5 * 9);
  CHECK(sn_diameter_bound(6, SnGensetKind::short_cycle) == 5 * 9 * 13);
  CHECK(sn_diameter_bound(3, SnGensetKind::full_cycle) == 2 * 3 * 4);
  CHECK_THROWS_AS(sn_diameter_bound(2, SnGensetKind::full_cycle), std::invalid_argument);
}

TEST_CASE("replicated diameter ceiling") {
  CHECK(canonical_bound(7, 2) == 14);
  CHECK(canonical_bound(0, 5) == 0);
  CHECK_THROWS_AS(canonical_bound(-1, 2), std::invalid_argument);
  CHECK_THROWS_AS(canonical_bound(3, 0), std::invalid_argument);
}

TEST_CASE("replication thresholds match their definitions") {
  for (std::int64_t alpha = 1; alpha <= 10; ++alpha) {
    for (std::int64_t beta = 1; beta <= alpha; ++beta) {
      std::int64_t n = 1;
      while (n * beta < alpha) ++n;
      CHECK(wiegold_threshold(alpha, beta, WiegoldCase::solvable) == n);
      if (beta >= 2) {
        std::int64_t m = 1;
        while (m * (beta - 1) < alpha - 1) ++m;
        CHECK(wiegold_threshold(alpha, beta, WiegoldCase::imperfect) == m);
      }
    }
  }
  CHECK(wiegold_threshold(2, 1, WiegoldCase::solvable) == 2);
  CHECK(wiegold_threshold(3, 2, WiegoldCase::imperfect) == 2);
  CHECK_THROWS_AS(wiegold_threshold(3, 1, WiegoldCase::imperfect), std::invalid_argument);
  CHECK_THROWS_AS(wiegold_threshold(1, 2, WiegoldCase::solvable), std::invalid_argument);
  CHECK_THROWS_AS(wiegold_threshold(1, 0, WiegoldCase::solvable), std::invalid_argument);
}

TEST_CASE("reports serialize with sorted keys") {
  auto r = report_canonical_bound(7, 2);
  CHECK(to_json(r) ==
        "{\"citation\":\"diam(G^n, C^n(A)) <= n * diam(G, A)\","
        "\"inputs\":{\"diam\":7,\"n\":2},\"name\":\"canonical-bound\",\"value\":14}");

  auto g = report_general_upper_bound(24, 2);
  CHECK(g.value == 22);
  CHECK(g.name == "general-upper-bound");

  std::vector<BoundReport> rs{report_canonical_bound(1, 1)};
  CHECK(to_json(rs).front() == '[');

  auto w = report_wiegold_threshold(5, 2, WiegoldCase::imperfect);
  CHECK(w.value == 4);
  auto a = report_abelian_diameter(AbelianType({6, 2}));
  CHECK(a.value == 6);
  CHECK(a.inputs == std::vector<std::pair<std::string, std::int64_t>>{{"m1", 6}, {"m2", 2}});
}

}  // TEST_SUITE
