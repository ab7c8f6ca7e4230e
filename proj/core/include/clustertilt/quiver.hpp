#pragma once

// Quivers as skew-symmetric exchange matrices: matrix mutation, canonical
// forms up to relabelling, mutation classes, shortest paths and the relation
// set they generate, vertex links and chordless cycles.

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace clustertilt {

class Quiver {
 public:
  Quiver() = default;
  explicit Quiver(int n);
  // Validates squareness, zero diagonal and skew-symmetry.
  static Quiver from_matrix(const std::vector<std::vector<int>>& b);

  int size() const { return n_; }
  // b_xy > 0 means b_xy arrows x -> y.
  int operator()(int x, int y) const { return b_[index(x, y)]; }
  void set_arrows(int x, int y, int multiplicity);

  std::vector<std::vector<int>> matrix() const;
  bool adjacent(int x, int y) const { return (*this)(x, y) != 0; }
  // Pairs (x, y) with b_xy > 0, row-major.
  std::vector<std::pair<int, int>> arrows() const;
  std::vector<int> neighbors(int v) const;
  int max_abs_entry() const;
  bool is_connected() const;

  Quiver mutate(int k) const;
  // Vertex v of this quiver becomes vertex position[v] of the result.
  Quiver relabeled(const std::vector<int>& position) const;
  Quiver opposite() const;

  friend bool operator==(const Quiver&, const Quiver&) = default;
  friend auto operator<=>(const Quiver&, const Quiver&) = default;

 private:
  std::size_t index(int x, int y) const { return static_cast<std::size_t>(x * n_ + y); }

  int n_ = 0;
  std::vector<int> b_;
};

// Oriented path as a vertex sequence; consecutive vertices are arrows.
struct Path {
  std::vector<int> vertices;

  int length() const { return static_cast<int>(vertices.size()) - 1; }
  friend bool operator==(const Path&, const Path&) = default;
  friend auto operator<=>(const Path&, const Path&) = default;
};

enum class RelationKind { None, Zero, Commutativity };

const char* to_string(RelationKind k);

// One entry per arrow i -> j: the shortest paths from j back to i.
struct RelationEntry {
  int from = 0;
  int to = 0;
  std::vector<Path> paths;
  RelationKind kind = RelationKind::None;
};

struct RelationSet {
  std::vector<RelationEntry> entries;

  std::size_t count(RelationKind k) const;
};

struct LinkProfile {
  std::vector<int> components;  // sizes of link components, ascending
  bool alternating = true;      // every link vertex is a sink or a source in the link
  bool linear = true;           // every component is a path
  // Orientation of the link together with its edges to the centre, up to
  // reversal of components and a global change of orientation.
  std::string orientation_class;
};

struct ChordlessCycle {
  std::vector<int> vertices;  // in cyclic order starting at the smallest vertex
  bool oriented = false;
};

struct CanonicalForm {
  std::vector<int> code;      // row-major exchange matrix after relabelling
  std::vector<int> position;  // original vertex -> canonical position

  Quiver quiver(int n) const;
};

CanonicalForm canonical_form(const Quiver& q);
// A relabelling `position` with b == a.relabeled(position), if one exists.
std::optional<std::vector<int>> find_isomorphism(const Quiver& a, const Quiver& b);

constexpr std::size_t kDefaultClassCap = 1'000'000;

// Canonical representatives of the mutation class, sorted by canonical code.
// Throws NotFiniteType if an entry of absolute value > 1 appears and
// CapExceeded past `cap` classes.
std::vector<Quiver> mutation_class(const Quiver& q, std::size_t cap = kDefaultClassCap);

// For an arrow i -> j: all oriented paths j -> ... -> i whose vertex set
// induces a cycle in the underlying graph.
std::vector<Path> shortest_paths(const Quiver& q, int i, int j);

// Throws StructuralViolation if some arrow has more than two shortest paths.
RelationSet relations_IC(const Quiver& q);

LinkProfile link(const Quiver& q, int v);

std::vector<ChordlessCycle> chordless_cycles(const Quiver& q);

std::string to_dot(const Quiver& q, const std::string& name = "Q");

// Link profiles that occur in simply-laced finite type, and ones that cannot.
const std::vector<std::vector<int>>& allowed_link_profiles();
const std::vector<std::vector<int>>& forbidden_link_profiles();
// Whether mutating at the centre may turn link profile `before` into `after`.
bool link_transition_allowed(const std::vector<int>& before, const std::vector<int>& after);

// Structural census of one mutation class (the appendix statements).
struct AppendixCensus {
  std::string label;
  std::size_t class_size = 0;
  std::size_t arrows_checked = 0;
  std::size_t max_shortest_paths = 0;
  std::size_t chordless_cycles = 0;
  std::size_t unoriented_cycles = 0;
  std::size_t links_checked = 0;
  std::map<std::vector<int>, std::size_t> profile_counts;
  std::map<std::vector<int>, std::set<std::string>> orientation_classes;
  std::set<std::pair<std::vector<int>, std::vector<int>>> shape_changes;
  std::vector<std::string> violations;

  bool passed() const { return violations.empty(); }
};

AppendixCensus appendix_census(const Quiver& seed, const std::string& label, std::size_t cap = kDefaultClassCap);

std::string profile_to_string(const std::vector<int>& profile);

}  // namespace clustertilt
