#pragma once

// Seeds with exact cluster variables, seed mutation, exchange-graph
// exploration and the variable <-> almost-positive-root bijection.

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "clustertilt/laurent.hpp"
#include "clustertilt/quiver.hpp"
#include "clustertilt/root_system.hpp"

namespace clustertilt {

struct Seed {
  Quiver quiver;
  std::vector<LaurentPolynomial> vars;

  int rank() const { return quiver.size(); }
  friend bool operator==(const Seed&, const Seed&) = default;
};

// Alternating orientation of the Dynkin diagram: source i -> sink j.
Quiver alternating_quiver(const RootSystem& rs);

Seed initial_seed(const Quiver& q);
Seed initial_seed(const RootSystem& rs);

// Throws InternalError if the exchange division is not exact.
Seed mutate_seed(const Seed& s, int k);

// Exponents over the seed's cluster slots of the two products in the
// exchange relation at k: arrows into k, and arrows out of k.
struct ExchangeMonomials {
  Exponents incoming;  // x^{b_xk} for b_xk > 0
  Exponents outgoing;  // x^{-b_xk} for b_xk < 0
};

ExchangeMonomials exchange_monomials(const Seed& s, int k);
// Product of the seed's variables raised to the slot exponents.
LaurentPolynomial evaluate_monomial(const Seed& s, const Exponents& slot_exponents);

struct AtlasCluster {
  std::vector<std::size_t> vars;        // variable ids, ascending; slot order
  Quiver quiver;                        // exchange quiver in slot order
  std::vector<std::size_t> neighbors;   // cluster reached by mutating each slot
};

class ExchangeGraphAtlas {
 public:
  int rank() const { return rank_; }
  const std::vector<LaurentPolynomial>& variables() const { return variables_; }
  const std::vector<AtlasCluster>& clusters() const { return clusters_; }
  // Empty unless built from a root system.
  const std::vector<Root>& roots() const { return roots_; }
  bool has_roots() const { return !roots_.empty(); }

  std::optional<std::size_t> variable_id(const LaurentPolynomial& v) const;
  std::optional<std::size_t> variable_of_root(const Root& r) const;
  std::optional<std::size_t> find_cluster(std::vector<std::size_t> var_ids) const;
  Seed seed(std::size_t cluster) const;
  std::size_t edge_count() const;

  friend ExchangeGraphAtlas explore(const Quiver& initial, std::size_t cap);
  friend ExchangeGraphAtlas explore(const RootSystem& rs, std::size_t cap);

 private:
  int rank_ = 0;
  std::vector<LaurentPolynomial> variables_;
  std::map<LaurentPolynomial, std::size_t> variable_index_;
  std::vector<Root> roots_;
  std::map<Root, std::size_t> root_index_;
  std::vector<AtlasCluster> clusters_;
  std::map<std::vector<std::size_t>, std::size_t> cluster_index_;
};

constexpr std::size_t kDefaultAtlasCap = 100'000;

// BFS over all mutations; cluster 0 is the initial seed. Throws CapExceeded
// past `cap` clusters and InternalError if a revisited cluster carries a
// different exchange matrix.
ExchangeGraphAtlas explore(const Quiver& initial, std::size_t cap = kDefaultAtlasCap);
// From the alternating seed, with rootOf assigned by denominator vectors.
ExchangeGraphAtlas explore(const RootSystem& rs, std::size_t cap = kDefaultAtlasCap);

// x_i -> -alpha_i; any other variable -> its denominator vector, which must
// be a positive root (InternalError otherwise).
Root root_of(const RootSystem& rs, const LaurentPolynomial& v);

// Every atlas variable written in the variables of `reference` (as new
// initial variables y_1..y_n in that cluster's slot order), indexed by
// variable id.
std::vector<LaurentPolynomial> reexpress(const ExchangeGraphAtlas& atlas, std::size_t reference);

}  // namespace clustertilt
