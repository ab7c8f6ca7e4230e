#include "clustertilt/repcat.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "clustertilt/error.hpp"

namespace clustertilt {

Vector CMorphism::coordinates() const {
  Vector v = deg0;
  v.insert(v.end(), deg1.begin(), deg1.end());
  return v;
}

namespace {

Vector add(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw InternalError("morphism components of different length");
  Vector c = a;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b[i];
  return c;
}

Vector scale(const Rational& s, const Vector& a) {
  Vector c = a;
  for (auto& x : c) x *= s;
  return c;
}

}  // namespace

CMorphism operator+(const CMorphism& a, const CMorphism& b) {
  if (a.from != b.from || a.to != b.to) throw InvalidArgument("adding morphisms between different objects");
  return {a.from, a.to, add(a.deg0, b.deg0), add(a.deg1, b.deg1)};
}

CMorphism operator*(const Rational& c, const CMorphism& f) { return {f.from, f.to, scale(c, f.deg0), scale(c, f.deg1)}; }

ClusterCategory::ClusterCategory(const RootSystem& rs) : modules_(rs) {
  const int n = rs.rank();
  const auto& signs = rs.signs();
  const std::size_t nu = rs.positive_roots().size();
  const std::size_t count = static_cast<std::size_t>(n) + nu;

  // Modules: tau^{-1} orbits of the projectives.
  std::vector<std::optional<MeshVertex>> module_pos(nu);
  for (int x = 0; x < n; ++x) {
    std::size_t m = modules_.projective_index(x);
    MeshVertex v{x, signs.is_sink(x) ? 0 : 1};
    for (;;) {
      if (module_pos[m]) throw InternalError("two mesh positions for one module");
      module_pos[m] = v;
      if (modules_.is_injective(m)) break;
      m = modules_.tau_inverse(m);
      v.level += 2;
    }
  }
  positions_.resize(count);
  module_position_.assign(count, 0);
  for (std::size_t j = 0; j < nu; ++j) {
    if (!module_pos[j]) throw InternalError("module outside every projective orbit");
    const std::size_t k = static_cast<std::size_t>(n) + j;
    positions_[k] = *module_pos[j];
    module_position_[k] = j;
  }

  // P_x[1] sits one step after I_x; this fixes the shift.
  shift_.relabel.assign(static_cast<std::size_t>(n), 0);
  std::optional<int> span;
  for (int x = 0; x < n; ++x) {
    const MeshVertex inj = positions_[static_cast<std::size_t>(n) + modules_.injective_index(x)];
    const MeshVertex shifted{inj.label, inj.level + 2};
    positions_[static_cast<std::size_t>(x)] = shifted;
    shift_.relabel[static_cast<std::size_t>(x)] = shifted.label;
    const int s = shifted.level - (signs.is_sink(x) ? 0 : 1);
    if (span && *span != s) throw InternalError("shift is not a constant level translation");
    span = s;
  }
  shift_.shift = *span;
  fundamental_ = {shift_.relabel, shift_.shift + 2};
  inverse_relabel_.assign(static_cast<std::size_t>(n), 0);
  for (int x = 0; x < n; ++x) inverse_relabel_[static_cast<std::size_t>(shift_.relabel[x])] = x;

  mesh_.emplace(rs, 0, fundamental_top() + fundamental_.shift);
  if (!mesh_->is_automorphism(shift_)) throw InternalError("shift is not an automorphism of the mesh");
  {
    std::map<MeshVertex, std::size_t> seen;
    for (std::size_t k = 0; k < count; ++k)
      if (!seen.emplace(positions_[k], k).second) throw InternalError("fundamental domain positions collide");
  }

  tau_.assign(count, 0);
  tau_inverse_.assign(count, 0);
  for (std::size_t k = 0; k < count; ++k) {
    const auto [t, tp] = locate(mesh_->tau(positions_[k]));
    const auto [u, up] = locate(mesh_->tau_inverse(positions_[k]));
    tau_[k] = t;
    tau_inverse_[k] = u;
    (void)tp;
    (void)up;
  }
  for (std::size_t k = 0; k < count; ++k)
    if (tau_inverse_[tau_[k]] != k) throw InternalError("tau is not invertible on objects");

  hom_.assign(count, std::vector<std::size_t>(count, 0));
  ext_.assign(count, std::vector<std::size_t>(count, 0));
  for (std::size_t x = 0; x < count; ++x)
    for (std::size_t y = 0; y < count; ++y) {
      for (int p : {-1, 2})
        if (hom_D(x, y, p) != 0) throw InternalError("Hom_D(X, F^p Y) nonzero outside degrees 0 and 1");
      for (int p = -1; p <= 2; ++p)
        if (hom_D(x, y, p) != hom_D_ledger(as_d_object(x), apply_F(as_d_object(y), p)))
          throw InternalError("mesh and module Hom dimensions disagree");
      if (hom_D(x, y, 0) != 0 && hom_D(x, y, 1) != 0) throw InternalError("Hom_C(X, Y) lives in two degrees");
      hom_[x][y] = hom_D(x, y, 0) + hom_D(x, y, 1);
    }
  for (std::size_t x = 0; x < count; ++x)
    for (std::size_t y = 0; y < count; ++y) {
      ext_[x][y] = hom_[x][tau_[y]];
      if (ext_[x][y] != ext_via_modules(x, y)) throw InternalError("mesh and module Ext dimensions disagree");
    }
}

int ClusterCategory::fundamental_top() const {
  int top = 0;
  for (const auto& v : positions_) top = std::max(top, v.level);
  return top;
}

MeshVertex ClusterCategory::F_power(const MeshVertex& v, int power) const {
  MeshVertex w = v;
  for (; power > 0; --power) w = fundamental_(w);
  for (; power < 0; ++power) w = {inverse_relabel_[static_cast<std::size_t>(w.label)], w.level - fundamental_.shift};
  return w;
}

std::pair<std::size_t, int> ClusterCategory::locate(const MeshVertex& v) const {
  const int top = fundamental_top();
  // Step into the window [0, top], then search nearby powers.
  int power = 0;
  MeshVertex w = v;
  while (w.level > top) {
    w = F_power(w, -1);
    ++power;
  }
  while (w.level < 0) {
    w = F_power(w, 1);
    --power;
  }
  for (int d : {0, -1, 1}) {
    const MeshVertex u = F_power(w, d);
    for (std::size_t k = 0; k < positions_.size(); ++k)
      if (positions_[k] == u) return {k, power - d};
  }
  throw InternalError("mesh vertex outside every F-orbit of the fundamental domain");
}

std::size_t ClusterCategory::object_of(const Root& almost_positive) const {
  auto idx = roots().index_of(almost_positive);
  if (!idx) throw InvalidArgument("not an almost positive root: " + almost_positive.to_string());
  return *idx;
}

std::size_t ClusterCategory::module_of(std::size_t k) const {
  if (is_shifted_projective(k)) throw InvalidArgument("object is a shifted projective");
  return module_position_[k];
}

std::size_t ClusterCategory::hom_D(std::size_t x, std::size_t y, int power) const {
  return mesh_->hom_dim(positions_[x], F_power(positions_[y], power));
}

std::optional<int> ClusterCategory::hom_degree(std::size_t x, std::size_t y) const {
  if (hom_D(x, y, 0) != 0) return 0;
  if (hom_D(x, y, 1) != 0) return 1;
  return std::nullopt;
}

DObject ClusterCategory::as_d_object(std::size_t k) const {
  if (is_shifted_projective(k)) return {modules_.projective_index(static_cast<int>(k)), 1};
  return {module_position_[k], 0};
}

DObject ClusterCategory::apply_F(const DObject& d, int power) const {
  DObject out = d;
  for (; power > 0; --power) {
    if (modules_.is_injective(out.module)) {
      int x = 0;
      while (modules_.injective_index(x) != out.module) ++x;
      out = {modules_.projective_index(x), out.shift + 2};
    } else {
      out = {modules_.tau_inverse(out.module), out.shift + 1};
    }
  }
  for (; power < 0; ++power) {
    if (modules_.is_projective(out.module)) {
      int x = 0;
      while (modules_.projective_index(x) != out.module) ++x;
      out = {modules_.injective_index(x), out.shift - 2};
    } else {
      out = {modules_.tau(out.module), out.shift - 1};
    }
  }
  return out;
}

std::size_t ClusterCategory::hom_D_ledger(const DObject& x, const DObject& y) const {
  if (y.shift == x.shift) return static_cast<std::size_t>(modules_.hom(x.module, y.module));
  if (y.shift == x.shift + 1) return static_cast<std::size_t>(modules_.ext(x.module, y.module));
  return 0;
}

std::size_t ClusterCategory::hom_via_modules(std::size_t x, std::size_t y) const {
  std::size_t total = 0;
  for (int p = -1; p <= 2; ++p) total += hom_D_ledger(as_d_object(x), apply_F(as_d_object(y), p));
  return total;
}

std::size_t ClusterCategory::ext_via_modules(std::size_t x, std::size_t y) const {
  DObject y1 = as_d_object(y);
  y1.shift += 1;
  std::size_t total = 0;
  for (int p = -1; p <= 1; ++p) total += hom_D_ledger(as_d_object(x), apply_F(y1, p));
  // Ext_C(X, Y) = Ext_D(X, Y) + D Ext_D(Y, X) on the fundamental domain.
  DObject x1 = as_d_object(x);
  x1.shift += 1;
  const std::size_t split = hom_D_ledger(as_d_object(x), y1) + hom_D_ledger(as_d_object(y), x1);
  if (split != total) throw InternalError("Ext_C does not split into the two derived Ext groups");
  return total;
}

CMorphism ClusterCategory::zero(std::size_t x, std::size_t y) const {
  return {x, y, Vector(hom_D(x, y, 0), Rational(0)), Vector(hom_D(x, y, 1), Rational(0))};
}

CMorphism ClusterCategory::identity(std::size_t x) const {
  CMorphism id = zero(x, x);
  if (id.deg0.size() != 1) throw InternalError("endomorphism ring of an indecomposable is not the field");
  id.deg0[0] = 1;
  return id;
}

std::vector<CMorphism> ClusterCategory::hom_basis(std::size_t x, std::size_t y) const {
  std::vector<CMorphism> out;
  const CMorphism z = zero(x, y);
  for (std::size_t i = 0; i < z.deg0.size(); ++i) {
    CMorphism e = z;
    e.deg0[i] = 1;
    out.push_back(std::move(e));
  }
  for (std::size_t i = 0; i < z.deg1.size(); ++i) {
    CMorphism e = z;
    e.deg1[i] = 1;
    out.push_back(std::move(e));
  }
  return out;
}

CMorphism ClusterCategory::compose(const CMorphism& f, const CMorphism& g) const {
  if (f.to != g.from) throw InvalidArgument("composing morphisms that do not meet");
  const MeshVertex px = positions_[f.from];
  const MeshVertex py = positions_[f.to];
  const MeshVertex pz = positions_[g.to];
  const MeshVertex fy = fundamental_(py);
  const MeshVertex fz = fundamental_(pz);
  CMorphism out = zero(f.from, g.to);
  if (!out.deg0.empty()) out.deg0 = mesh_->compose(px, py, pz, f.deg0, g.deg0);
  if (!out.deg1.empty()) {
    out.deg1 = mesh_->compose(px, py, fz, f.deg0, g.deg1);
    if (!f.deg1.empty() && !g.deg0.empty()) {
      const Vector fg0 = mesh_->transport(py, pz, g.deg0, fundamental_);
      out.deg1 = add(out.deg1, mesh_->compose(px, fy, fz, f.deg1, fg0));
    }
  }
  return out;
}

std::optional<int> ClusterCategory::lift_degree(const CMorphism& f) const {
  const bool z0 = clustertilt::is_zero(f.deg0);
  const bool z1 = clustertilt::is_zero(f.deg1);
  if (!z0 && !z1) throw InternalError("morphism has components in two degrees");
  if (!z0) return 0;
  if (!z1) return 1;
  return std::nullopt;
}

}  // namespace clustertilt
