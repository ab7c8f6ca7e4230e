#include "doctest.h"

#include <random>

#include "clustertilt/exact.hpp"

using namespace clustertilt;

TEST_CASE("rank and nullspace of small matrices") {
  auto m = RationalMatrix::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  CHECK(rank(m) == 2);
  auto ns = nullspace(m);
  REQUIRE(ns.cols() == 1);
  CHECK((m * ns).is_zero());
  CHECK(rank(RationalMatrix(3, 4)) == 0);
  CHECK(rank(RationalMatrix::identity(5)) == 5);
}

TEST_CASE("solve recovers a planted solution and rejects inconsistent systems") {
  auto m = RationalMatrix::from_rows({{2, 1}, {1, 3}});
  auto x = solve(m, {Rational(5), Rational(10)});
  REQUIRE(x);
  CHECK((*x)[0] == 1);
  CHECK((*x)[1] == 3);
  auto singular = RationalMatrix::from_rows({{1, 1}, {1, 1}});
  CHECK_FALSE(solve(singular, {Rational(1), Rational(2)}));
}

TEST_CASE("random integer matrices: rank + nullity = columns, kernel is annihilated") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> entry(-2, 2);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
    RationalMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = entry(rng);
    auto ns = nullspace(m);
    CHECK(rank(m) + ns.cols() == c);
    CHECK((m * ns).is_zero());
    CHECK(rank(m) == rank(m.transpose()));
  }
}

TEST_CASE("proportionality and span rank") {
  std::vector<Rational> a{1, 0, 2}, b{Rational(1, 2), 0, 1}, z{0, 0, 0};
  CHECK(proportional_nonzero(a, b));
  CHECK_FALSE(proportional_nonzero(a, z));
  CHECK_FALSE(proportional_nonzero(a, {1, 1, 2}));
  CHECK(span_rank({a, b}, 3) == 1);
  CHECK(span_rank({a, {0, 1, 0}}, 3) == 2);
}
