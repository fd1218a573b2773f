#include <random>

#include "doctest.h"
#include "powerdiam/perm.hpp"

using namespace powerdiam;

namespace {

Permutation random_perm(std::mt19937_64& rng, int degree) {
  std::vector<std::uint16_t> img(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) img[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(i);
  for (std::size_t i = img.size(); i > 1; --i)
    std::swap(img[i - 1], img[rng() % i]);
  return Permutation(std::move(img));
}

}  // namespace

TEST_SUITE("perm") {

TEST_CASE("identity") {
  Permutation e(5);
  CHECK(e.is_identity());
  CHECK(e.degree() == 5);
  CHECK(e.order() == 1);
  CHECK(format_cycles(e) == "()");
}

TEST_CASE("composition applies the left factor first") {
  auto p = parse_cycles("(1 2)", 3);
  auto q = parse_cycles("(2 3)", 3);
  CHECK(p * q == parse_cycles("(1 3 2)", 3));
  CHECK(q * p == parse_cycles("(1 2 3)", 3));
}

TEST_CASE("inverse composes to identity") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 50; ++t) {
    auto p = random_perm(rng, 8);
    CHECK((p * p.inverse()).is_identity());
    CHECK((p.inverse() * p).is_identity());
  }
}

TEST_CASE("order matches repeated composition") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    auto p = random_perm(rng, 1 + static_cast<int>(rng() % 10));
    std::uint64_t k = 1;
    Permutation q = p;
    while (!q.is_identity()) {
      q = q * p;
      ++k;
    }
    CHECK(p.order() == k);
  }
}

TEST_CASE("round trip through cycle notation") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 1000; ++t) {
    auto p = random_perm(rng, 1 + static_cast<int>(rng() % 12));
    CHECK(parse_cycles(format_cycles(p), p.degree()) == p);
  }
}

TEST_CASE("canonical format") {
  CHECK(format_cycles(parse_cycles("(4 3)(2 1)", 4)) == "(1 2)(3 4)");
  CHECK(format_cycles(parse_cycles("(3 1 2)", 3)) == "(1 2 3)");
  CHECK(format_cycles(parse_cycles("(5 6)", 8)) == "(5 6)");
  CHECK(parse_cycles("()", 4).is_identity());
}

TEST_CASE("whitespace is free-form") {
  CHECK(parse_cycles(" ( 1   2 )\t(4 5) ", 5) == parse_cycles("(1 2)(4 5)", 5));
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_cycles("", 3), ParseError);
  CHECK_THROWS_AS(parse_cycles("   ", 3), ParseError);
  CHECK_THROWS_AS(parse_cycles("(1 2", 3), ParseError);
  CHECK_THROWS_AS(parse_cycles("1 2)", 3), ParseError);
  CHECK_THROWS_AS(parse_cycles("(0)", 3), ParseError);
  CHECK_THROWS_AS(parse_cycles("(4)", 3), ParseError);
  CHECK_THROWS_AS(parse_cycles("(1 2)(2 3)", 3), ParseError);
  try {
    parse_cycles("(1 2)(2 3)", 3);
  } catch (const ParseError& e) {
    CHECK(e.position() == 6);
    CHECK(std::string(e.what()).find("repeated") != std::string::npos);
  }
  try {
    parse_cycles("(1 x)", 3);
  } catch (const ParseError& e) {
    CHECK(e.position() == 3);
  }
}

TEST_CASE("rotating cycle and short cycle with flip") {
  // with a = (1 2 ... n), a' = (2 3 ... n) and b = (1 2): a' followed by b is a
  for (int n : {3, 4, 5, 6, 9}) {
    std::string a_text = "(";
    std::string ap_text = "(";
    for (int i = 1; i <= n; ++i) a_text += (i > 1 ? " " : "") + std::to_string(i);
    for (int i = 2; i <= n; ++i) ap_text += (i > 2 ? " " : "") + std::to_string(i);
    a_text += ")";
    ap_text += ")";
    auto a = parse_cycles(a_text, n);
    auto ap = parse_cycles(ap_text, n);
    auto b = parse_cycles("(1 2)", n);
    CHECK(a.order() == static_cast<std::uint64_t>(n));
    CHECK(ap.order() == static_cast<std::uint64_t>(n - 1));
    CHECK(b.order() == 2);
    CHECK(ap * b == a);
  }
}

TEST_CASE("rejects malformed image vectors") {
  CHECK_THROWS_AS(Permutation(std::vector<std::uint16_t>{0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation(std::vector<std::uint16_t>{2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation(2) * Permutation(3), std::invalid_argument);
}

}  // TEST_SUITE
