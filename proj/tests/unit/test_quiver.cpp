#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "clustertilt/error.hpp"
#include "clustertilt/quiver.hpp"

using namespace clustertilt;

namespace {

Quiver from_arrows(int n, const std::vector<std::pair<int, int>>& arrows) {
  Quiver q(n);
  for (auto [a, b] : arrows) q.set_arrows(a - 1, b - 1, 1);
  return q;
}

// Brute-force oracle: isomorphic iff some permutation maps one onto the other.
bool brute_isomorphic(const Quiver& a, const Quiver& b) {
  std::vector<int> p(static_cast<std::size_t>(a.size()));
  std::iota(p.begin(), p.end(), 0);
  do {
    if (a.relabeled(p) == b) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

Quiver random_quiver(std::mt19937& rng, int n) {
  Quiver q(n);
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) q.set_arrows(x, y, static_cast<int>(rng() % 3) - 1);
  return q;
}

Quiver linear_a(int n) {
  Quiver q(n);
  for (int i = 0; i + 1 < n; ++i) q.set_arrows(i, i + 1, 1);
  return q;
}

}  // namespace

TEST_CASE("from_matrix validation") {
  CHECK_THROWS_AS(Quiver::from_matrix({{0, 1}, {1, 0}}), InvalidArgument);
  CHECK_THROWS_AS(Quiver::from_matrix({{1, 0}, {0, 0}}), InvalidArgument);
  CHECK_THROWS_AS(Quiver::from_matrix({{0, 1}}), InvalidArgument);
  CHECK(Quiver::from_matrix({{0, 1}, {-1, 0}}).arrows() == std::vector<std::pair<int, int>>{{0, 1}});
}

TEST_CASE("mutation is an involution on random quivers") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const Quiver q = random_quiver(rng, 2 + static_cast<int>(rng() % 6));
    for (int k = 0; k < q.size(); ++k) CHECK(q.mutate(k).mutate(k) == q);
  }
}

TEST_CASE("mutation of A3 at the middle of a linear orientation gives an oriented triangle") {
  const Quiver q = linear_a(3).mutate(1);
  CHECK(q(0, 1) == -1);
  CHECK(q(1, 2) == -1);
  CHECK(q(2, 0) == -1);
  const auto cycles = chordless_cycles(q);
  REQUIRE(cycles.size() == 1);
  CHECK(cycles[0].oriented);
}

TEST_CASE("canonical form agrees with brute-force isomorphism") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const Quiver a = random_quiver(rng, n);
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    const Quiver b = trial % 2 ? a.relabeled(p) : random_quiver(rng, n);
    const bool same = canonical_form(a).code == canonical_form(b).code;
    CHECK(same == brute_isomorphic(a, b));
    auto iso = find_isomorphism(a, b);
    CHECK(iso.has_value() == same);
    if (iso) CHECK(a.relabeled(*iso) == b);
  }
}

TEST_CASE("mutation class sizes") {
  CHECK(mutation_class(linear_a(2)).size() == 1);
  CHECK(mutation_class(linear_a(3)).size() == 4);
  Quiver kronecker(2);
  kronecker.set_arrows(0, 1, 2);
  CHECK_THROWS_AS(mutation_class(kronecker), NotFiniteType);
  Quiver affine_a(3);  // acyclic triangle: affine type
  affine_a.set_arrows(0, 1, 1);
  affine_a.set_arrows(1, 2, 1);
  affine_a.set_arrows(0, 2, 1);
  CHECK_THROWS_AS(mutation_class(affine_a), NotFiniteType);
  CHECK_THROWS_AS(mutation_class(linear_a(5), 3), CapExceeded);
}

TEST_CASE("mutation class members are closed under mutation") {
  const auto cls = mutation_class(linear_a(4));
  std::set<std::vector<int>> codes;
  for (const auto& q : cls) codes.insert(canonical_form(q).code);
  for (const auto& q : cls)
    for (int k = 0; k < q.size(); ++k) CHECK(codes.count(canonical_form(q.mutate(k)).code) == 1);
}

TEST_CASE("shortest paths") {
  const Quiver tri = from_arrows(3, {{1, 2}, {2, 3}, {3, 1}});
  const auto paths = shortest_paths(tri, 0, 1);
  REQUIRE(paths.size() == 1);
  CHECK(paths[0].vertices == std::vector<int>{1, 2, 0});
  for (auto [i, j] : linear_a(5).arrows()) CHECK(shortest_paths(linear_a(5), i, j).empty());
  CHECK_THROWS_AS(shortest_paths(tri, 1, 0), InvalidArgument);

  // Two oriented triangles glued along 1 -> 2 give two paths... only if
  // each closes an induced cycle through 1 -> 2; here a square with a
  // diagonal: 1 -> 2, 2 -> 3 -> 1 and 2 -> 4 -> 1.
  const Quiver two = from_arrows(4, {{1, 2}, {2, 3}, {3, 1}, {2, 4}, {4, 1}});
  CHECK(shortest_paths(two, 0, 1).size() == 2);
  const auto rel = relations_IC(two);
  CHECK(rel.count(RelationKind::Commutativity) == 1);
  CHECK(rel.count(RelationKind::Zero) == 4);

  // A chorded path is not shortest: oriented 4-cycle with a chord.
  const Quiver chord = from_arrows(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}, {1, 3}});
  for (const auto& p : shortest_paths(chord, 0, 1)) CHECK(p.length() == 2);
}

TEST_CASE("oriented 3-cycle has three zero relations") {
  const auto rel = relations_IC(from_arrows(3, {{1, 2}, {2, 3}, {3, 1}}));
  CHECK(rel.entries.size() == 3);
  CHECK(rel.count(RelationKind::Zero) == 3);
  CHECK(relations_IC(linear_a(4)).count(RelationKind::None) == 3);
}

TEST_CASE("links") {
  CHECK(link(linear_a(4), 0).components == std::vector<int>{1});
  CHECK(link(linear_a(4), 1).components == std::vector<int>{1, 1});
  const Quiver d4 = from_arrows(4, {{1, 2}, {3, 2}, {4, 2}});
  const LinkProfile hub = link(d4, 1);
  CHECK(hub.components == std::vector<int>{1, 1, 1});
  CHECK(hub.alternating);
  CHECK(hub.linear);
  const Quiver tri = from_arrows(3, {{1, 2}, {2, 3}, {3, 1}});
  CHECK(link(tri, 0).components == std::vector<int>{2});
  // A directed path of length 2 in a link is not alternating.
  const Quiver fan = from_arrows(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {3, 4}});
  CHECK_FALSE(link(fan, 0).alternating);
}

TEST_CASE("link tables") {
  CHECK(allowed_link_profiles().size() == 16);
  CHECK(link_transition_allowed({2}, {1, 1}));
  CHECK(link_transition_allowed({1, 1, 2}, {1, 3}));
  CHECK(link_transition_allowed({2, 3}, {2, 3}));
  CHECK_FALSE(link_transition_allowed({2}, {3}));
}

TEST_CASE("chordless cycles") {
  CHECK(chordless_cycles(linear_a(6)).empty());
  const Quiver square = from_arrows(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
  const auto c = chordless_cycles(square);
  REQUIRE(c.size() == 1);
  CHECK_FALSE(c[0].oriented);
}

TEST_CASE("DOT export") {
  const std::string dot = to_dot(linear_a(3), "A3");
  CHECK(dot.find("digraph A3") == 0);
  CHECK(dot.find("1 -> 2;") != std::string::npos);
  CHECK(std::count(dot.begin(), dot.end(), '>') == 2);
}

TEST_CASE("appendix census on A4 and D4") {
  for (const auto& q : {linear_a(4), from_arrows(4, {{1, 2}, {3, 2}, {4, 2}})}) {
    const auto c = appendix_census(q, "t");
    CHECK(c.passed());
    CHECK(c.max_shortest_paths <= 2);
    CHECK(c.unoriented_cycles == 0);
  }
}
