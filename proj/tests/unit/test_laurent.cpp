#include "doctest.h"

#include <random>

#include "clustertilt/laurent.hpp"

using namespace clustertilt;

namespace {

LaurentPolynomial random_poly(std::mt19937& rng, int n, int terms, int lo, int hi) {
  LaurentPolynomial p(n);
  std::uniform_int_distribution<int> ex(lo, hi), co(-3, 3);
  for (int t = 0; t < terms; ++t) {
    Exponents e(static_cast<std::size_t>(n));
    for (auto& x : e) x = ex(rng);
    p.add_term(e, co(rng));
  }
  return p;
}

// Oracle: evaluate at an integer point with rational arithmetic.
Rational evaluate(const LaurentPolynomial& p, const std::vector<Rational>& at) {
  Rational v = 0;
  for (const auto& [e, c] : p.terms()) {
    Rational m = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      Rational f = 1;
      for (int k = 0; k < std::abs(e[i]); ++k) f *= at[i];
      m *= e[i] >= 0 ? f : 1 / f;
    }
    v += m;
  }
  return v;
}

}  // namespace

TEST_CASE("arithmetic basics") {
  const auto x1 = LaurentPolynomial::variable(2, 0), x2 = LaurentPolynomial::variable(2, 1);
  const auto one = LaurentPolynomial::constant(2, 1);
  CHECK((x1 - x1).is_zero());
  CHECK((x1 + x2) * (x1 - x2) == x1 * x1 - x2 * x2);
  CHECK(pow(x1 + one, 2) == x1 * x1 + LaurentPolynomial::constant(2, 2) * x1 + one);
}

TEST_CASE("exact division: products divide back, random quotients") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 3);
    auto a = random_poly(rng, n, 1 + static_cast<int>(rng() % 4), -2, 2);
    auto b = random_poly(rng, n, 1 + static_cast<int>(rng() % 3), -2, 2);
    if (a.is_zero() || b.is_zero()) continue;
    auto q = (a * b).divide_exact(b);
    REQUIRE(q);
    CHECK(*q == a);
  }
}

TEST_CASE("non-exact division is rejected") {
  const auto x1 = LaurentPolynomial::variable(2, 0), x2 = LaurentPolynomial::variable(2, 1);
  const auto one = LaurentPolynomial::constant(2, 1);
  CHECK_FALSE((x2 + one).divide_exact(x1 + one));
  CHECK_FALSE((x1 * x1 + one).divide_exact(x1 + one));
  CHECK_FALSE(LaurentPolynomial::constant(2, 3).divide_exact(LaurentPolynomial::constant(2, 2)));
  CHECK((x2 + one).divide_exact(x1) == (x2 + one) * LaurentPolynomial::monomial(2, {-1, 0}));
}

TEST_CASE("division agrees with evaluation") {
  std::mt19937 rng(9);
  const std::vector<Rational> at{Rational(2), Rational(-3), Rational(5, 7)};
  for (int trial = 0; trial < 100; ++trial) {
    auto a = random_poly(rng, 3, 3, -1, 2), b = random_poly(rng, 3, 2, -1, 1);
    if (a.is_zero() || b.is_zero() || evaluate(b, at) == 0) continue;
    auto q = (a * b).divide_exact(b);
    REQUIRE(q);
    CHECK(evaluate(*q, at) == evaluate(a * b, at) / evaluate(b, at));
  }
}

TEST_CASE("denominator vectors and rendering") {
  const auto x1 = LaurentPolynomial::variable(2, 0), x2 = LaurentPolynomial::variable(2, 1);
  const auto one = LaurentPolynomial::constant(2, 1);
  const auto v = *(x2 + one).divide_exact(x1);
  CHECK(v.denominator_vector() == std::vector<int>{1, 0});
  CHECK(x1.denominator_vector() == std::vector<int>{-1, 0});
  CHECK(v.to_string() == "(x2 + 1)/x1");
  CHECK(v.numerator_prime_to_variables());
  const auto w = *(x1 + x2 + one).divide_exact(x1 * x2);
  CHECK(w.to_string() == "(x1 + x2 + 1)/(x1*x2)");
  CHECK(x1.to_string() == "x1");
}
