#pragma once

// The mesh category of Z(Dynkin) with the bipartite levelling: vertices
// (label, level) with sinks on even levels and sources on odd levels, arrows
// (x, t) -> (y, t + 1) for neighbours x, y, and tau(x, t) = (x, t - 2).
// Hom(a, -) is built level by level as a cokernel of the mesh map; every
// basis element has one representative path, which makes composition and
// transport along automorphisms of the translation quiver explicit.

#include <compare>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "clustertilt/exact.hpp"
#include "clustertilt/root_system.hpp"

namespace clustertilt {

struct MeshVertex {
  int label = 0;
  int level = 0;

  friend bool operator==(const MeshVertex&, const MeshVertex&) = default;
  friend auto operator<=>(const MeshVertex&, const MeshVertex&) = default;
};

using Vector = std::vector<Rational>;

// Automorphism (x, t) -> (relabel[x], t + shift) of the translation quiver.
struct MeshAutomorphism {
  std::vector<int> relabel;
  int shift = 0;

  MeshVertex operator()(const MeshVertex& v) const { return {relabel[static_cast<std::size_t>(v.label)], v.level + shift}; }
};

class MeshCategory {
 public:
  // Hom tables are built for every source vertex with level in
  // [min_source_level, max_source_level].
  MeshCategory(const RootSystem& rs, int min_source_level, int max_source_level);

  int rank() const { return static_cast<int>(neighbors_.size()); }
  bool is_vertex(const MeshVertex& v) const;
  MeshVertex tau(const MeshVertex& v) const { return {v.label, v.level - 2}; }
  MeshVertex tau_inverse(const MeshVertex& v) const { return {v.label, v.level + 2}; }
  const std::vector<int>& neighbors(int label) const { return neighbors_[static_cast<std::size_t>(label)]; }
  bool is_automorphism(const MeshAutomorphism& phi) const;

  std::size_t hom_dim(const MeshVertex& a, const MeshVertex& z) const;
  Vector identity() const { return {Rational(1)}; }
  // g o f for f in Hom(a, b), g in Hom(b, c).
  Vector compose(const MeshVertex& a, const MeshVertex& b, const MeshVertex& c, const Vector& f, const Vector& g) const;
  // phi(g) in Hom(phi b, phi c) for g in Hom(b, c).
  Vector transport(const MeshVertex& b, const MeshVertex& c, const Vector& g, const MeshAutomorphism& phi) const;
  // Sum of the dimensions at each level of Hom(a, -) is zero beyond this.
  int support_end(const MeshVertex& a) const;

 private:
  struct Node {
    std::size_t dim = 0;
    // Basis element k is origin[k] = (predecessor label, basis index there)
    // followed by the arrow into this node; (-1, 0) marks the identity.
    std::vector<std::pair<int, std::size_t>> origin;
    std::map<int, RationalMatrix> in;  // predecessor label -> dim x dim(pred)
  };
  struct SourceTable {
    MeshVertex source;
    std::map<MeshVertex, Node> nodes;  // nonzero nodes only
    int end_level = 0;
  };

  SourceTable build(const MeshVertex& a) const;
  const SourceTable& table(const MeshVertex& a) const;
  // Image of basis element k of Hom(path_table.source, z) under the path map
  // phi, applied to `start` in the target table.
  Vector push(const SourceTable& path_table, const MeshVertex& z, std::size_t k, const SourceTable& target,
              const MeshAutomorphism* phi, const Vector& start, std::map<std::pair<MeshVertex, std::size_t>, Vector>& memo) const;
  Vector evaluate(const SourceTable& path_table, const MeshVertex& c, const Vector& g, const SourceTable& target,
                  const MeshAutomorphism* phi, const Vector& start) const;

  std::vector<std::vector<int>> neighbors_;
  std::vector<int> parity_;  // 0 for sinks, 1 for sources
  std::map<MeshVertex, SourceTable> tables_;
};

}  // namespace clustertilt
