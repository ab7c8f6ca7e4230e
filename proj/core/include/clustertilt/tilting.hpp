#pragma once

// Tilting objects of the cluster category, the quiver Q_T of End_C(T)^op
// with explicit arrow witnesses, its relations, minimal approximations and
// the checks that compare all of this with the cluster-algebra side.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "clustertilt/cluster_algebra.hpp"
#include "clustertilt/quiver.hpp"
#include "clustertilt/repcat.hpp"

namespace clustertilt {

struct TiltingObject {
  std::vector<std::size_t> summands;  // cluster-category objects, one per slot
  std::optional<std::size_t> cluster;
};

// n pairwise distinct, pairwise Ext-orthogonal indecomposables.
bool is_tilting(const ClusterCategory& cc, const std::vector<std::size_t>& objects);
// Throws InternalError if the result is not tilting.
TiltingObject tilting_from_cluster(const ClusterCategory& cc, const ExchangeGraphAtlas& atlas, std::size_t cluster);

// Largest hom_C(T_i, T_j) over distinct summands.
std::size_t max_summand_hom(const ClusterCategory& cc, const TiltingObject& t);

struct EndPresentation {
  // In slot order; b(j, i) = 1 for an arrow T_j -> T_i.
  Quiver quiver;
  // Arrow (j, i) -> generator of Hom_C(T_i, T_j).
  std::map<std::pair<int, int>, CMorphism> witnesses;
};

// Arrow T_j -> T_i iff Hom_C(T_i, T_j) is one-dimensional and its generator
// does not factor through any other summand. Throws StructuralViolation if
// two distinct summands have a Hom space of dimension >= 2.
EndPresentation quiver_QT(const ClusterCategory& cc, const TiltingObject& t);

// Q_T against the seed quiver in the same slot order, optionally reversed.
bool matches_seed_quiver(const EndPresentation& e, const Quiver& seed_quiver, bool flip);

// Composite in Hom_C(T_last, T_first) of the witnesses along a path of Q_T.
CMorphism path_composite(const ClusterCategory& cc, const TiltingObject& t, const EndPresentation& e, const Path& p);

// Sum of lift degrees along a closed path of Q_T.
int winding_number(const ClusterCategory& cc, const EndPresentation& e, const Path& closed);

struct RelationVerdict {
  int from = 0;
  int to = 0;
  std::vector<Path> paths;
  RelationKind kind = RelationKind::None;
  bool passed = true;
  std::string detail;
};

struct RelationReport {
  std::vector<RelationVerdict> shortest;
  std::size_t long_paths_checked = 0;
  std::vector<Path> nonzero_long_paths;

  bool passed() const;
};

// Shortest paths give zero / proportional composites; every other path back
// along an arrow (no arrow repeated) composes to zero.
RelationReport relations_check(const ClusterCategory& cc, const TiltingObject& t, const EndPresentation& e);

struct WindingFinding {
  int from = 0;
  int to = 0;
  Path path;  // closed: from -> to -> ... -> from
  int winding = 0;
};

// Winding numbers of every arrow followed by each of its shortest paths.
std::vector<WindingFinding> shortest_cycle_windings(const ClusterCategory& cc, const EndPresentation& e);

enum class Side { Right, Left };

// The two objects completing `tbar` to a tilting object, ascending. Throws
// StructuralViolation unless there are exactly two.
std::pair<std::size_t, std::size_t> complements(const ClusterCategory& cc, const std::vector<std::size_t>& tbar);

// Minimal add(tbar)-approximation of m: the smallest (then lexicographically
// first) set of positions into tbar such that composing with it reaches all
// of Hom_C(X, m) (right) or Hom_C(m, X) (left) for every X in tbar. nullopt
// when the minimal approximating object is zero.
std::optional<std::vector<int>> minimal_approximation(const ClusterCategory& cc, const std::vector<std::size_t>& tbar,
                                                      std::size_t m, Side side);

// Everything about one exchange of slot `slot` of a tilting object.
struct ExchangeData {
  std::size_t slot = 0;
  std::size_t m = 0;        // T_slot
  std::size_t m_prime = 0;  // other complement
  std::optional<std::vector<int>> right;  // slots in B (triangle M' -> B -> M)
  std::optional<std::vector<int>> left;   // slots in B' (triangle M -> B' -> M')
  std::vector<int> arrows_out;            // I: arrows M -> T_i in Q_T
  std::vector<int> arrows_in;             // I': arrows T_i -> M in Q_T
  bool right_matches = false;             // B = sum over I, absent iff I empty
  bool left_matches = false;
  bool degenerate_consistent = false;     // B absent iff M' = tau^-1 M, B' absent iff M' = tau M
};

ExchangeData exchange_data(const ClusterCategory& cc, const TiltingObject& t, const EndPresentation& e, std::size_t slot);

// The dimension identities at an exchange with M' = P_l[1] and M a module
// other than P_l, I_l. nullopt when that situation does not apply.
struct DimensionIdentities {
  int l = 0;
  bool l_is_sink = false;
  bool right_sum = false;  // sum over I, against beta - dim I_l or beta - alpha_l
  bool left_sum = false;   // sum over I', against beta - alpha_l or beta - dim P_l
  bool right_uplus = false;  // the same sums written with uplus and +
  bool left_uplus = false;

  bool passed() const { return right_sum && left_sum && right_uplus && left_uplus; }
};

std::optional<DimensionIdentities> dimension_identities(const ClusterCategory& cc, const TiltingObject& t,
                                                        const ExchangeData& x);

// Arrows into T_slot predicted from the exchange sign and cluster
// components of beta + beta' or beta uplus beta'.
std::vector<int> predicted_arrows_in(const RootSystem& rs, const std::vector<Root>& cluster_roots, std::size_t slot,
                                     const Root& beta_prime);

struct ExchangeVerdict {
  std::size_t cluster = 0;
  std::size_t slot = 0;
  bool identity = false;       // z z' = prod_I x + prod_I' x
  bool matches_seed = false;   // {I, I'} = the seed's exchange monomials
  std::string detail;
};

ExchangeVerdict exchange_check(const ClusterCategory& cc, const ExchangeGraphAtlas& atlas, std::size_t cluster,
                               std::size_t slot);

struct DenominatorVerdict {
  std::size_t cluster = 0;
  std::size_t checked = 0;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

// Every variable written in this cluster's variables has d-vector
// (ext_C(T_i, M))_i and a numerator prime to each variable; summands come
// back as the variables themselves.
DenominatorVerdict denominator_check(const ClusterCategory& cc, const ExchangeGraphAtlas& atlas, std::size_t cluster);
DenominatorVerdict denominator_check(const ClusterCategory& cc, const ExchangeGraphAtlas& atlas, std::size_t cluster,
                                     const std::vector<LaurentPolynomial>& reexpressed);

struct ModuleCountVerdict {
  std::size_t distinct = 0;
  std::size_t expected = 0;
  bool injective = true;
  bool nonzero = true;

  bool passed() const { return injective && nonzero && distinct == expected; }
};

// d-vectors (ext_C(T_i, M))_i over indecomposables M outside add T.
ModuleCountVerdict module_count_check(const ClusterCategory& cc, const TiltingObject& t);

}  // namespace clustertilt
