#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "clustertilt/error.hpp"
#include "clustertilt/tilting.hpp"

using namespace clustertilt;

namespace {

struct Fixture {
  explicit Fixture(DynkinType t) : rs(t), cc(rs), atlas(explore(rs)) {}
  RootSystem rs;
  ClusterCategory cc;
  ExchangeGraphAtlas atlas;
};

std::set<std::pair<int, int>> undirected_edges(const Quiver& q) {
  std::set<std::pair<int, int>> out;
  for (auto [a, b] : q.arrows()) out.insert({std::min(a, b), std::max(a, b)});
  return out;
}

}  // namespace

TEST_CASE("initial cluster gives the shifted projectives") {
  Fixture f(DynkinType(Series::D, 5));
  const TiltingObject t = tilting_from_cluster(f.cc, f.atlas, 0);
  for (std::size_t i = 0; i < t.summands.size(); ++i) CHECK(t.summands[i] == i);
  const EndPresentation e = quiver_QT(f.cc, t);
  const auto edges = f.rs.type().edges();
  const std::set<std::pair<int, int>> dynkin(edges.begin(), edges.end());
  CHECK(undirected_edges(e.quiver) == dynkin);
}

TEST_CASE("every A3 cluster is tilting and non-complements are rejected") {
  Fixture f(DynkinType(Series::A, 3));
  std::mt19937 rng(3);
  for (std::size_t c = 0; c < f.atlas.clusters().size(); ++c) {
    const TiltingObject t = tilting_from_cluster(f.cc, f.atlas, c);
    CHECK(is_tilting(f.cc, t.summands));
    for (std::size_t slot = 0; slot < 3; ++slot) {
      std::vector<std::size_t> tbar = t.summands;
      tbar.erase(tbar.begin() + static_cast<long>(slot));
      const auto [a, b] = complements(f.cc, tbar);
      CHECK((a == t.summands[slot] || b == t.summands[slot]));
      // The other complement is the new variable of the neighbouring cluster.
      const std::size_t other = a == t.summands[slot] ? b : a;
      const auto& nb = f.atlas.clusters()[f.atlas.clusters()[c].neighbors[slot]];
      std::set<std::size_t> objs;
      for (std::size_t v : nb.vars) objs.insert(f.cc.object_of(f.atlas.roots()[v]));
      CHECK(objs.count(other) == 1);
      std::vector<std::size_t> bad;
      for (std::size_t x = 0; x < f.cc.object_count(); ++x)
        if (x != a && x != b && std::find(tbar.begin(), tbar.end(), x) == tbar.end()) bad.push_back(x);
      std::vector<std::size_t> swapped = t.summands;
      swapped[slot] = bad[std::uniform_int_distribution<std::size_t>(0, bad.size() - 1)(rng)];
      CHECK_FALSE(is_tilting(f.cc, swapped));
    }
  }
}

TEST_CASE("oriented three-cycle in A3") {
  // T_j = P_1 (vertex 1 is a leaf), T_k = I_1, T_i = P_3[1].
  Fixture f(DynkinType(Series::A, 3));
  const std::size_t tj = f.cc.object_of(f.rs.projective_dims(0));
  const std::size_t tk = f.cc.object_of(f.rs.injective_dims(0));
  const std::size_t ti = 2;
  TiltingObject t{{ti, tk, tj}, std::nullopt};
  REQUIRE(is_tilting(f.cc, t.summands));
  CHECK(f.cc.hom(tj, ti) == 0);
  const EndPresentation e = quiver_QT(f.cc, t);
  CHECK(e.quiver.arrows().size() == 3);
  const auto cycles = chordless_cycles(e.quiver);
  REQUIRE(cycles.size() == 1);
  CHECK(cycles[0].oriented);
  const RelationReport r = relations_check(f.cc, t, e);
  REQUIRE(r.shortest.size() == 3);
  for (const auto& v : r.shortest) {
    CHECK(v.kind == RelationKind::Zero);
    CHECK(v.passed);
  }
  for (const auto& w : shortest_cycle_windings(f.cc, e)) CHECK(w.winding == 1);
  CHECK(winding_number(f.cc, e, Path{{1}}) == 0);
  // Removing T_i leaves P_3[1] and the module at the exchange position.
  const auto [a, b] = complements(f.cc, {tk, tj});
  CHECK(a == ti);
  CHECK_FALSE(f.cc.is_shifted_projective(b));
  // Right approximation of T_i is the single middle term T_k.
  const ExchangeData x = exchange_data(f.cc, t, e, 0);
  REQUIRE(x.right.has_value());
  CHECK(*x.right == std::vector<int>{1});
}

TEST_CASE("Q_T equals the seed quiver and the flip is pinned on A2") {
  {
    Fixture f(DynkinType(Series::A, 2));
    for (std::size_t c = 0; c < f.atlas.clusters().size(); ++c) {
      const EndPresentation e = quiver_QT(f.cc, tilting_from_cluster(f.cc, f.atlas, c));
      CHECK(matches_seed_quiver(e, f.atlas.clusters()[c].quiver, false));
      CHECK_FALSE(matches_seed_quiver(e, f.atlas.clusters()[c].quiver, true));
    }
  }
  for (const auto& type : {DynkinType(Series::A, 3), DynkinType(Series::A, 4), DynkinType(Series::D, 4)}) {
    CAPTURE(type.name());
    Fixture f(type);
    for (std::size_t c = 0; c < f.atlas.clusters().size(); ++c) {
      const TiltingObject t = tilting_from_cluster(f.cc, f.atlas, c);
      CHECK(max_summand_hom(f.cc, t) <= 1);
      CHECK(matches_seed_quiver(quiver_QT(f.cc, t), f.atlas.clusters()[c].quiver, false));
    }
  }
}

TEST_CASE("relations of Q_T") {
  bool saw_commutativity = false;
  for (const auto& type : {DynkinType(Series::A, 3), DynkinType(Series::A, 4), DynkinType(Series::D, 4)}) {
    CAPTURE(type.name());
    Fixture f(type);
    for (std::size_t c = 0; c < f.atlas.clusters().size(); ++c) {
      const TiltingObject t = tilting_from_cluster(f.cc, f.atlas, c);
      const EndPresentation e = quiver_QT(f.cc, t);
      const RelationReport r = relations_check(f.cc, t, e);
      CHECK(r.passed());
      for (const auto& v : r.shortest)
        if (v.kind == RelationKind::Commutativity) {
          saw_commutativity = true;
          CHECK(type.series() == Series::D);
        }
      for (const auto& w : shortest_cycle_windings(f.cc, e)) CHECK(w.winding >= 1);
    }
  }
  CHECK(saw_commutativity);
}

TEST_CASE("approximations follow the arrows of Q_T") {
  for (const auto& type : {DynkinType(Series::A, 3), DynkinType(Series::D, 4)}) {
    CAPTURE(type.name());
    Fixture f(type);
    std::size_t identities = 0;
    for (std::size_t c = 0; c < f.atlas.clusters().size(); ++c) {
      const TiltingObject t = tilting_from_cluster(f.cc, f.atlas, c);
      const EndPresentation e = quiver_QT(f.cc, t);
      for (std::size_t s = 0; s < t.summands.size(); ++s) {
        const ExchangeData x = exchange_data(f.cc, t, e, s);
        CHECK(x.right_matches);
        CHECK(x.left_matches);
        CHECK(x.degenerate_consistent);
        if (auto d = dimension_identities(f.cc, t, x)) {
          ++identities;
          CHECK(d->passed());
        }
      }
    }
    CHECK(identities > 0);
  }
}

TEST_CASE("exchange relations from triangles") {
  {
    Fixture f(DynkinType(Series::A, 2));
    const ExchangeVerdict v = exchange_check(f.cc, f.atlas, 0, 0);
    CHECK(v.identity);
    CHECK(v.matches_seed);
  }
  Fixture f(DynkinType(Series::A, 3));
  for (std::size_t c = 0; c < f.atlas.clusters().size(); ++c)
    for (std::size_t s = 0; s < 3; ++s) {
      const ExchangeVerdict v = exchange_check(f.cc, f.atlas, c, s);
      CHECK_MESSAGE(v.identity, v.detail);
      CHECK_MESSAGE(v.matches_seed, v.detail);
    }
}

TEST_CASE("denominators are Ext dimensions in A3") {
  Fixture f(DynkinType(Series::A, 3));
  for (std::size_t c = 0; c < f.atlas.clusters().size(); ++c) {
    const DenominatorVerdict v = denominator_check(f.cc, f.atlas, c);
    CHECK(v.checked == 9);
    CHECK(v.passed());
  }
}

TEST_CASE("d-vectors count the indecomposables") {
  for (const auto& [type, nu] : {std::pair{DynkinType(Series::A, 3), 6}, std::pair{DynkinType(Series::D, 4), 12}}) {
    Fixture f(type);
    for (std::size_t c = 0; c < f.atlas.clusters().size(); ++c) {
      const ModuleCountVerdict v = module_count_check(f.cc, tilting_from_cluster(f.cc, f.atlas, c));
      CHECK(v.expected == static_cast<std::size_t>(nu));
      CHECK(v.passed());
    }
  }
}

TEST_CASE("arrow criterion through exchange signs") {
  Fixture f(DynkinType(Series::D, 4));
  for (std::size_t c = 0; c < f.atlas.clusters().size(); ++c) {
    const TiltingObject t = tilting_from_cluster(f.cc, f.atlas, c);
    const EndPresentation e = quiver_QT(f.cc, t);
    std::vector<Root> roots;
    for (std::size_t s : t.summands) roots.push_back(f.cc.object_root(s));
    for (std::size_t s = 0; s < 4; ++s) {
      const ExchangeData x = exchange_data(f.cc, t, e, s);
      CHECK(predicted_arrows_in(f.rs, roots, s, f.cc.object_root(x.m_prime)) == x.arrows_in);
    }
  }
}
