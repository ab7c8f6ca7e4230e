#pragma once

// Explicit representations of the alternating quiver over Q: indecomposables
// built with reflection functors, Hom spaces as intertwiner solution spaces,
// Ext through the Euler form.

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "clustertilt/exact.hpp"
#include "clustertilt/quiver.hpp"
#include "clustertilt/root_system.hpp"

namespace clustertilt {

// A representation of a quiver whose arrows all have multiplicity one.
struct Representation {
  std::vector<int> dims;
  std::map<std::pair<int, int>, RationalMatrix> maps;  // arrow (a, b): dims[b] x dims[a]

  Root dimension_vector() const { return Root(dims); }
  bool is_zero() const;
};

// Reflection functor at a source i of `orientation`: the new space at i is
// the cokernel of V_i -> sum V_j; `orientation` is mutated to make i a sink.
Representation reflect_at_source(const Representation& rep, Quiver& orientation, int i);

struct HomBasis {
  std::size_t dim = 0;
  std::vector<std::vector<RationalMatrix>> basis;  // per basis element, one matrix per vertex
};

// All intertwiners M -> N for representations of `q`.
HomBasis hom_representations(const Quiver& q, const Representation& m, const Representation& n);

class ModuleCategory {
 public:
  explicit ModuleCategory(const RootSystem& rs);

  const RootSystem& roots() const { return rs_; }
  const Quiver& quiver() const { return quiver_; }

  // Indecomposables in positive_roots() order.
  const std::vector<Representation>& indecomposables() const { return reps_; }
  const Representation& indecomposable(const Root& beta) const;
  std::size_t index_of(const Root& beta) const;

  const Representation& projective(int x) const;
  const Representation& injective(int x) const;
  std::size_t projective_index(int x) const;
  std::size_t injective_index(int x) const;
  // tau^{-1} of a non-injective indecomposable, as an index.
  std::size_t tau_inverse(std::size_t m) const;
  // tau of a non-projective indecomposable, as an index.
  std::size_t tau(std::size_t m) const;
  bool is_projective(std::size_t m) const;
  bool is_injective(std::size_t m) const;

  // Dimension tables over indecomposable indices.
  int hom(std::size_t m, std::size_t n) const { return hom_[m][n]; }
  int ext(std::size_t m, std::size_t n) const { return ext_[m][n]; }
  HomBasis hom_basis(std::size_t m, std::size_t n) const;

 private:
  RootSystem rs_;
  Quiver quiver_;
  std::vector<Representation> reps_;
  std::vector<std::size_t> projective_, injective_;
  std::vector<std::optional<std::size_t>> tau_inverse_, tau_;
  std::vector<std::vector<int>> hom_, ext_;
};

Representation indecomposable_rep(const ModuleCategory& mc, const Root& beta);
int hom_mod(const ModuleCategory& mc, const Representation& m, const Representation& n);
int ext_mod(const ModuleCategory& mc, const Representation& m, const Representation& n);

}  // namespace clustertilt
