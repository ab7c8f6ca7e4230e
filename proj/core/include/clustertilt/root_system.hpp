#pragma once

// Simply-laced root systems and the almost-positive-root calculus: the
// piecewise-linear involutions tau_+ / tau_-, the second exchange sum
// (uplus), the exchange sign, cluster expansions and compatibility degrees.

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "clustertilt/exact.hpp"

namespace clustertilt {

enum class Series : char { A = 'A', D = 'D', E = 'E' };

// A_n (n >= 1), D_n (n >= 4), E_n (n in 6..8). Vertices are 1..n in text
// and 0..n-1 in code. D_n: chain 1..n-2 with leaves n-1 and n on n-2.
// E_n: chain 1..n-1 with vertex n attached to vertex 3.
class DynkinType {
 public:
  DynkinType(Series series, int rank);

  // Parses "A3", "D4", "E6" (case-insensitive series letter).
  static DynkinType parse(std::string_view text);

  Series series() const { return series_; }
  int rank() const { return rank_; }
  std::string name() const;

  // Undirected Dynkin edges (i, j) with i < j, 0-based.
  std::vector<std::pair<int, int>> edges() const;
  int coxeter_number() const;
  // Closed-form positive root count.
  int expected_positive_roots() const;

  friend bool operator==(const DynkinType&, const DynkinType&) = default;
  friend auto operator<=>(const DynkinType&, const DynkinType&) = default;

 private:
  Series series_;
  int rank_;
};

// Integer vector in simple-root coordinates.
class Root {
 public:
  Root() = default;
  explicit Root(std::vector<int> coeffs) : c_(std::move(coeffs)) {}
  static Root zero(int rank) { return Root(std::vector<int>(static_cast<std::size_t>(rank), 0)); }
  static Root simple(int rank, int i);

  int rank() const { return static_cast<int>(c_.size()); }
  int operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  int& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_positive() const;  // all >= 0, some > 0
  // Index i when this is -alpha_i.
  std::optional<int> negative_simple_index() const;
  int height() const;

  Root operator+(const Root& o) const;
  Root operator-(const Root& o) const;
  Root operator-() const;

  std::string to_string() const;

  friend bool operator==(const Root&, const Root&) = default;
  friend auto operator<=>(const Root&, const Root&) = default;

 private:
  std::vector<int> c_;
};

enum class Sign { Plus = 1, Minus = -1 };

inline Sign opposite(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }
inline int sign_value(Sign s) { return static_cast<int>(s); }

// I_+ = sinks of the alternating quiver, I_- = sources. Vertex 1 is always a
// source.
struct BipartiteSigns {
  std::vector<Sign> of_vertex;

  bool is_sink(int i) const { return of_vertex[static_cast<std::size_t>(i)] == Sign::Plus; }
  bool is_source(int i) const { return !is_sink(i); }
  std::vector<int> vertices(Sign s) const;
};

// Result of writing a lattice vector in a cluster's roots.
struct ClusterExpansion {
  std::vector<Rational> coefficients;  // one per cluster root, in input order
  std::vector<int> components;         // positions with nonzero coefficient
  bool nonnegative_integral = false;
};

class RootSystem {
 public:
  explicit RootSystem(DynkinType type);

  const DynkinType& type() const { return type_; }
  int rank() const { return type_.rank(); }
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  const std::vector<std::vector<int>>& neighbors() const { return neighbors_; }
  const BipartiteSigns& signs() const { return signs_; }

  // Positive roots sorted lexicographically by coefficient vector.
  const std::vector<Root>& positive_roots() const { return positives_; }
  // -alpha_1..-alpha_n followed by the positive roots; this order is the
  // object numbering used by the cluster category.
  const std::vector<Root>& almost_positive_roots() const { return almost_positive_; }
  std::optional<std::size_t> index_of(const Root& almost_positive) const;
  bool is_almost_positive(const Root& r) const { return index_of(r).has_value(); }
  bool is_positive_root(const Root& r) const { return r.is_positive() && is_almost_positive(r); }

  Root simple_reflection(int i, const Root& gamma) const;

  // Piecewise definition on almost positive roots.
  Root tau(Sign s, const Root& alpha) const;
  // Tropical extension of tau to the whole root lattice; agrees with tau()
  // on almost positive roots.
  Root tau_lattice(Sign s, const Root& gamma) const;
  // True when tau_s fixes alpha, i.e. alpha = -alpha_i with i in I_{-s}.
  bool tau_fixes(Sign s, const Root& alpha) const;

  // Coxeter transformation tau_- o tau_+ (matches AR translation on
  // dimension vectors of non-projective modules of the alternating quiver).
  Root coxeter(const Root& gamma) const;
  Root coxeter_inverse(const Root& gamma) const;

  // The element of {sigma^-1(sigma b + sigma b')} that differs from b + b'.
  // Throws NotExchangeable when the orbit set does not have two elements.
  Root uplus(const Root& beta, const Root& beta_prime) const;
  // The full orbit set, for diagnostics.
  std::vector<Root> uplus_orbit_set(const Root& beta, const Root& beta_prime) const;

  int sign_eps(const Root& beta, const Root& beta_prime) const;
  int vertex_sign(int i) const { return sign_value(signs_.of_vertex[static_cast<std::size_t>(i)]); }

  ClusterExpansion cluster_expand(const Root& gamma, const std::vector<Root>& cluster_roots) const;

  int compatibility_degree(const Root& alpha, const Root& beta) const;

  // Euler form of the alternating quiver: sum a_i b_i - sum_{i->j} a_i b_j.
  int euler_form(const Root& a, const Root& b) const;
  // Dimension vectors of indecomposable projective / injective modules.
  Root projective_dims(int i) const;
  Root injective_dims(int i) const;

 private:
  // Walks (a, b) under alternating tau starting with `first`, stopping when
  // `a` becomes a negative simple. Returns (steps, a, b) or nullopt when
  // blocked by the fixed-point condition.
  struct WalkEnd {
    int steps;
    Root a;
    Root b;
  };
  std::optional<WalkEnd> walk_to_negative_simple(Sign first, Root a, Root b, bool respect_fixed) const;
  std::optional<int> sign_eps_directed(const Root& beta, const Root& beta_prime) const;
  int orbit_period(const Root& beta, const Root& beta_prime) const;

  DynkinType type_;
  std::vector<std::vector<int>> cartan_;
  std::vector<std::vector<int>> neighbors_;
  BipartiteSigns signs_;
  std::vector<Root> positives_;
  std::vector<Root> almost_positive_;
  std::map<Root, std::size_t> index_;
};

}  // namespace clustertilt
