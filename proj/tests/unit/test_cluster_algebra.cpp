#include "doctest.h"

#include <set>

#include "clustertilt/cluster_algebra.hpp"
#include "clustertilt/error.hpp"

using namespace clustertilt;

namespace {

LaurentPolynomial x(int n, int i) { return LaurentPolynomial::variable(n, i - 1); }
LaurentPolynomial c(int n, long v) { return LaurentPolynomial::constant(n, v); }

}  // namespace

TEST_CASE("initial seeds") {
  RootSystem a3(DynkinType(Series::A, 3));
  const Seed s = initial_seed(a3);
  CHECK(s.quiver.arrows() == std::vector<std::pair<int, int>>{{0, 1}, {2, 1}});
  CHECK(s.vars == std::vector<LaurentPolynomial>{x(3, 1), x(3, 2), x(3, 3)});
  RootSystem a2(DynkinType(Series::A, 2));
  CHECK(initial_seed(a2).quiver.arrows().size() == 1);
}

TEST_CASE("A2 mutation and pentagon") {
  RootSystem a2(DynkinType(Series::A, 2));
  const Seed s0 = initial_seed(a2);
  const Seed s1 = mutate_seed(s0, 0);
  CHECK(s1.vars[0] == *(x(2, 2) + c(2, 1)).divide_exact(x(2, 1)));
  CHECK(mutate_seed(s1, 0) == s0);

  // Alternate 1,2,1,2,1: five distinct clusters then back to the start (up to
  // a swap of the two slots).
  std::set<std::set<LaurentPolynomial>> seen;
  Seed s = s0;
  for (int step = 0; step < 5; ++step) {
    seen.insert({s.vars[0], s.vars[1]});
    s = mutate_seed(s, step % 2);
  }
  CHECK(seen.size() == 5);
  CHECK(std::set<LaurentPolynomial>{s.vars[0], s.vars[1]} == std::set<LaurentPolynomial>{x(2, 1), x(2, 2)});
}

TEST_CASE("exchange monomials") {
  RootSystem a2(DynkinType(Series::A, 2));
  const auto m = exchange_monomials(initial_seed(a2), 0);
  CHECK(m.incoming == Exponents{0, 0});
  CHECK(m.outgoing == Exponents{0, 1});
  Seed iso{Quiver(2), {x(2, 1), x(2, 2)}};
  const auto e = exchange_monomials(iso, 1);
  CHECK(evaluate_monomial(iso, e.incoming) == c(2, 1));
  CHECK(evaluate_monomial(iso, e.outgoing) == c(2, 1));
}

TEST_CASE("atlas counts and regularity") {
  struct Case {
    DynkinType t;
    std::size_t clusters;
  };
  for (const auto& [t, count] : {Case{DynkinType(Series::A, 1), 2}, Case{DynkinType(Series::A, 2), 5},
                                 Case{DynkinType(Series::A, 3), 14}, Case{DynkinType(Series::A, 4), 42},
                                 Case{DynkinType(Series::D, 4), 50}}) {
    CAPTURE(t.name());
    RootSystem rs(t);
    const auto atlas = explore(rs);
    CHECK(atlas.clusters().size() == count);
    CHECK(atlas.variables().size() == rs.almost_positive_roots().size());
    CHECK(atlas.edge_count() * 2 == count * static_cast<std::size_t>(rs.rank()));
    std::set<Root> roots(atlas.roots().begin(), atlas.roots().end());
    CHECK(roots.size() == atlas.variables().size());
    for (const auto& cl : atlas.clusters()) {
      std::set<std::size_t> distinct(cl.neighbors.begin(), cl.neighbors.end());
      CHECK(distinct.size() == static_cast<std::size_t>(rs.rank()));
    }
    for (std::size_t v = 0; v < atlas.variables().size(); ++v)
      if (atlas.roots()[v].is_positive()) CHECK(atlas.variables()[v].numerator_prime_to_variables());
  }
}

TEST_CASE("A2 denominators are the positive roots") {
  RootSystem rs(DynkinType(Series::A, 2));
  const auto atlas = explore(rs);
  std::set<Root> positives;
  for (const auto& r : atlas.roots())
    if (r.is_positive()) positives.insert(r);
  CHECK(positives == std::set<Root>{Root({1, 0}), Root({0, 1}), Root({1, 1})});
  CHECK(root_of(rs, x(2, 2)) == Root({0, -1}));
}

TEST_CASE("atlas cap") {
  RootSystem rs(DynkinType(Series::A, 3));
  CHECK_THROWS_AS(explore(rs, 10), CapExceeded);
}

TEST_CASE("re-expansion in another cluster") {
  RootSystem rs(DynkinType(Series::A, 3));
  const auto atlas = explore(rs);
  for (std::size_t ref : {std::size_t{0}, std::size_t{5}, std::size_t{13}}) {
    const auto expr = reexpress(atlas, ref);
    const auto& cl = atlas.clusters()[ref];
    for (int i = 0; i < 3; ++i) CHECK(expr[cl.vars[i]] == LaurentPolynomial::variable(3, i));
    if (ref == 0)
      for (std::size_t v = 0; v < expr.size(); ++v) CHECK(expr[v] == atlas.variables()[v]);
    // Laurent phenomenon in every reference cluster.
    for (const auto& e : expr)
      for (int d : e.denominator_vector()) CHECK(d >= -1);
  }
}
