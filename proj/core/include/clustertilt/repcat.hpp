#pragma once

// The cluster category C = D / F with F = tau^{-1}[1], where D is the
// bounded derived category of the alternating quiver. Indecomposable objects
// are numbered like the almost positive roots: object k < n is P_k[1], the
// rest are the indecomposable modules in positive-root order.
//
// Morphisms live on the mesh category of Z(Dynkin): a morphism X -> Y in C
// has a component in Hom_D(X, Y) (degree 0) and one in Hom_D(X, FY)
// (degree 1); every other degree vanishes for fundamental-domain objects.

#include <cstddef>
#include <optional>
#include <vector>

#include "clustertilt/mesh.hpp"
#include "clustertilt/representation.hpp"
#include "clustertilt/root_system.hpp"

namespace clustertilt {

struct CMorphism {
  std::size_t from = 0;
  std::size_t to = 0;
  Vector deg0;  // in Hom_D(X, Y)
  Vector deg1;  // in Hom_D(X, FY)

  bool is_zero() const { return clustertilt::is_zero(deg0) && clustertilt::is_zero(deg1); }
  // deg0 followed by deg1.
  Vector coordinates() const;
};

CMorphism operator+(const CMorphism& a, const CMorphism& b);
CMorphism operator*(const Rational& c, const CMorphism& f);

// An object of D as (module index, shift): M[s].
struct DObject {
  std::size_t module = 0;
  int shift = 0;

  friend bool operator==(const DObject&, const DObject&) = default;
};

class ClusterCategory {
 public:
  explicit ClusterCategory(const RootSystem& rs);

  const RootSystem& roots() const { return modules_.roots(); }
  const ModuleCategory& modules() const { return modules_; }
  const MeshCategory& mesh() const { return *mesh_; }

  int rank() const { return roots().rank(); }
  std::size_t object_count() const { return positions_.size(); }
  const Root& object_root(std::size_t k) const { return roots().almost_positive_roots()[k]; }
  std::size_t object_of(const Root& almost_positive) const;
  bool is_shifted_projective(std::size_t k) const { return k < static_cast<std::size_t>(rank()); }
  // Module index of a module object.
  std::size_t module_of(std::size_t k) const;

  MeshVertex position(std::size_t k) const { return positions_[k]; }
  // Level distance of the shift [1] on the mesh.
  int shift_span() const { return shift_.shift; }
  const MeshAutomorphism& shift() const { return shift_; }
  const MeshAutomorphism& fundamental() const { return fundamental_; }
  // (object, power) with v = F^power(position(object)).
  std::pair<std::size_t, int> locate(const MeshVertex& v) const;

  // AR translation in C (equal to [1]).
  std::size_t tau(std::size_t k) const { return tau_[k]; }
  std::size_t tau_inverse(std::size_t k) const { return tau_inverse_[k]; }

  // dim Hom_D(X, F^power Y).
  std::size_t hom_D(std::size_t x, std::size_t y, int power = 0) const;
  std::size_t hom(std::size_t x, std::size_t y) const { return hom_[x][y]; }
  std::size_t ext(std::size_t x, std::size_t y) const { return ext_[x][y]; }
  // Degree of the nonzero part of Hom_C(X, Y); nullopt if Hom_C(X, Y) = 0.
  std::optional<int> hom_degree(std::size_t x, std::size_t y) const;

  // The same dimensions computed from module Hom/Ext and the shift ledger.
  DObject as_d_object(std::size_t k) const;
  DObject apply_F(const DObject& d, int power) const;
  std::size_t hom_D_ledger(const DObject& x, const DObject& y) const;
  std::size_t hom_via_modules(std::size_t x, std::size_t y) const;
  std::size_t ext_via_modules(std::size_t x, std::size_t y) const;

  CMorphism zero(std::size_t x, std::size_t y) const;
  CMorphism identity(std::size_t x) const;
  std::vector<CMorphism> hom_basis(std::size_t x, std::size_t y) const;
  // g o f.
  CMorphism compose(const CMorphism& f, const CMorphism& g) const;
  // Degree of a nonzero morphism; nullopt for zero.
  std::optional<int> lift_degree(const CMorphism& f) const;

 private:
  MeshVertex F_power(const MeshVertex& v, int power) const;
  // Highest level over all fundamental-domain positions.
  int fundamental_top() const;

  ModuleCategory modules_;
  std::vector<MeshVertex> positions_;
  std::vector<std::size_t> module_position_;  // object -> module index, for modules
  MeshAutomorphism shift_;
  MeshAutomorphism fundamental_;
  std::vector<int> inverse_relabel_;
  std::optional<MeshCategory> mesh_;
  std::vector<std::size_t> tau_, tau_inverse_;
  std::vector<std::vector<std::size_t>> hom_, ext_;
};

}  // namespace clustertilt
