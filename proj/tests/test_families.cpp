#include <numeric>

#include "doctest.h"
#include "powerdiam/families.hpp"

using namespace powerdiam;

TEST_SUITE("families") {

TEST_CASE("symmetric group generator pairs") {
  auto a5 = sn_generators(5);
  CHECK(a5.group().size() == 120);
  CHECK(a5.name() == "A");
  CHECK(a5.label(0) == "a");
  CHECK(a5.label(1) == "b");
  CHECK(a5.group().order_of(a5.member(0)) == 5);
  CHECK(a5.group().order_of(a5.member(1)) == 2);

  auto a4 = sn_generators(4);
  CHECK(a4.group().size() == 24);
  CHECK(a4.name() == "A'");
  CHECK(a4.label(0) == "a'");
  CHECK(a4.group().order_of(a4.member(0)) == 3);

  // explicit kind overrides the parity default
  auto short3 = sn_generators(3, SnGensetKind::short_cycle);
  CHECK(short3.group().size() == 6);
  CHECK(short3.group().order_of(short3.member(0)) == 2);

  CHECK_THROWS_AS(sn_generators(2), std::invalid_argument);
}

TEST_CASE("dihedral generator pairs") {
  for (int n : {3, 4, 5, 7}) {
    auto d = dn_generators(n);
    CHECK(d.group().size() == 2 * static_cast<std::size_t>(n));
    const auto* pg = dynamic_cast<const PermGroup*>(&d.group());
    REQUIRE(pg);
    CHECK(d.group().order_of(d.member(0)) == static_cast<std::uint64_t>(n));
    CHECK(d.group().order_of(d.member(1)) == 2);
    CHECK(pg->element(d.member(1))[0] == 0);  // the reflection fixes point 1
  }
  CHECK_THROWS_AS(dn_generators(2), std::invalid_argument);
}

TEST_CASE("every symmetric group element gets a word within the ceiling") {
  struct Probe {
    int n;
    SnGensetKind kind;
  };
  for (auto [n, kind] : {Probe{4, SnGensetKind::full_cycle}, Probe{4, SnGensetKind::short_cycle},
                         Probe{5, SnGensetKind::full_cycle}, Probe{5, SnGensetKind::short_cycle}}) {
    auto a = sn_generators(n, kind);
    const auto* pg = dynamic_cast<const PermGroup*>(&a.group());
    REQUIRE(pg);
    const auto ceiling = sn_diameter_bound(n, kind);
    for (ElementIndex x = 0; x < pg->size(); ++x) {
      Word w = sn_express(a, pg->element(x));
      CHECK(evaluate(a, w) == x);
      CHECK(static_cast<std::int64_t>(w.length()) <= ceiling);
    }
  }
}

TEST_CASE("expression handles identity and single swaps directly") {
  auto a = sn_generators(5, SnGensetKind::full_cycle);
  CHECK(sn_express(a, Permutation(5)).length() == 0);
  Word w = sn_express(a, parse_cycles("(1 2)", 5));
  CHECK(w.letters == std::vector<std::int32_t>{1});

  CHECK_THROWS_AS(sn_express(a, Permutation(4)), std::invalid_argument);
}

TEST_CASE("staircase rewriter covers the whole power") {
  struct Probe {
    int n;
    int k;
  };
  for (auto [n, k] : {Probe{3, 2}, Probe{3, 3}, Probe{5, 2}, Probe{5, 3}, Probe{3, 4}}) {
    CAPTURE(n);
    CAPTURE(k);
    DihedralPowerExpress ctx(n, k);
    const auto& g = ctx.group();
    std::size_t expected = 1;
    for (int t = 0; t < k; ++t) expected *= static_cast<std::size_t>(2 * n);
    CHECK(g.size() == expected);
    CHECK(ctx.length_target() == static_cast<std::int64_t>(k) * (2 * n - 2));

    auto lt = length_table(ctx.genset());
    CHECK(lt.diameter() <= ctx.length_target());
    for (ElementIndex x = 0; x < g.size(); ++x) {
      Word w = ctx.express(x);
      CHECK(evaluate(ctx.genset(), w) == x);
      CHECK(static_cast<std::int64_t>(w.length()) <= ctx.length_target());
      CHECK(lt.length(x) <= static_cast<std::int32_t>(w.length()));
    }
  }
}

TEST_CASE("normal forms are exponent vectors of the staircase") {
  DihedralPowerExpress ctx(3, 3);
  const auto& g = ctx.group();
  CHECK(ctx.normal_form(FiniteGroup::identity) == std::vector<int>{0, 0, 0});
  CHECK(ctx.normal_form(ctx.genset().member(0)) == std::vector<int>{1, 0, 0});
  auto x = g.mul(ctx.genset().member(0),
                 g.mul(ctx.genset().member(1), ctx.genset().member(1)));
  CHECK(ctx.normal_form(x) == std::vector<int>{1, 2, 0});
  CHECK_THROWS_AS(ctx.normal_form(g.size()), std::invalid_argument);

  CHECK_THROWS_AS(DihedralPowerExpress(4, 2), std::invalid_argument);
  CHECK_THROWS_AS(DihedralPowerExpress(3, 1), std::invalid_argument);
}

TEST_CASE("rewriter identities hold by direct multiplication") {
  DihedralPowerExpress two(3, 2);
  auto pair = check_pair_swap(two);
  CHECK(pair.checked == 25);
  CHECK(pair.violations == 0);
  CHECK(check_adjacent_swap(two).checked == 0);
  CHECK(check_top_power_swap(two).checked == 0);
  auto circle2 = check_full_circle(two);
  CHECK(circle2.checked == 2);
  CHECK(circle2.violations == 0);

  for (auto& ctx : {DihedralPowerExpress(3, 3), DihedralPowerExpress(5, 3)}) {
    CAPTURE(ctx.n());
    CHECK(check_pair_swap(ctx).checked == 0);
    auto adj = check_adjacent_swap(ctx);
    CHECK(adj.checked == 2 * 3 * (2 * ctx.n() - 1) * (2 * ctx.n() - 1));
    CHECK(adj.violations == 0);
    CHECK(check_distant_commute(ctx).checked == 0);
    auto runs = check_run_collapse(ctx);
    CHECK(runs.checked == 3);
    CHECK(runs.violations == 0);
    auto circle = check_full_circle(ctx);
    CHECK(circle.checked == 3);
    CHECK(circle.violations == 0);
    auto tops = check_top_power_swap(ctx);
    CHECK(tops.checked == 3 * (2 * ctx.n() - 1));
    CHECK(tops.violations == 0);
  }

  DihedralPowerExpress four(3, 4);
  auto distant = check_distant_commute(four);
  CHECK(distant.checked == 2 * 25);
  CHECK(distant.violations == 0);
  auto runs4 = check_run_collapse(four);
  CHECK(runs4.checked == 8);
  CHECK(runs4.violations == 0);
}

TEST_CASE("a full circle of top powers collapses to singles only") {
  DihedralPowerExpress ctx(3, 3);
  const auto& g = ctx.group();
  auto pow = [&](int j, int e) { return g.power(ctx.genset().member(j), e); };
  auto lhs = g.mul(pow(0, 5), g.mul(pow(1, 5), pow(2, 5)));
  auto singles = g.mul(pow(2, 1), g.mul(pow(1, 1), pow(0, 1)));
  // keeping the top power on the innermost factor, as the partial-run rule
  // would, is wrong once the run wraps the entire circle
  auto partial_form = g.mul(pow(2, 1), g.mul(pow(1, 1), pow(0, 5)));
  CHECK(lhs == singles);
  CHECK(lhs != partial_form);
}

}  // TEST_SUITE
