#include "clustertilt/mesh.hpp"

#include <algorithm>
#include <string>

#include "clustertilt/error.hpp"

namespace clustertilt {

MeshCategory::MeshCategory(const RootSystem& rs, int min_source_level, int max_source_level)
    : neighbors_(rs.neighbors()) {
  for (int x = 0; x < rs.rank(); ++x) parity_.push_back(rs.signs().is_sink(x) ? 0 : 1);
  for (int t = min_source_level; t <= max_source_level; ++t)
    for (int x = 0; x < rs.rank(); ++x) {
      const MeshVertex v{x, t};
      if (is_vertex(v)) tables_.emplace(v, build(v));
    }
}

bool MeshCategory::is_vertex(const MeshVertex& v) const {
  if (v.label < 0 || v.label >= rank()) return false;
  return ((v.level % 2) + 2) % 2 == parity_[static_cast<std::size_t>(v.label)];
}

bool MeshCategory::is_automorphism(const MeshAutomorphism& phi) const {
  const int n = rank();
  if (static_cast<int>(phi.relabel.size()) != n) return false;
  std::vector<bool> hit(static_cast<std::size_t>(n), false);
  for (int x = 0; x < n; ++x) {
    const int y = phi.relabel[x];
    if (y < 0 || y >= n || hit[y]) return false;
    hit[y] = true;
    if (!is_vertex(phi({x, parity_[x]}))) return false;
    for (int z : neighbors_[x]) {
      const auto& ny = neighbors_[y];
      if (std::find(ny.begin(), ny.end(), phi.relabel[z]) == ny.end()) return false;
    }
  }
  return true;
}

MeshCategory::SourceTable MeshCategory::build(const MeshVertex& a) const {
  SourceTable tab;
  tab.source = a;
  Node id;
  id.dim = 1;
  id.origin.emplace_back(-1, 0);
  tab.nodes.emplace(a, std::move(id));
  int t = a.level + 1;
  for (;; ++t) {
    bool any = false;
    for (int z = 0; z < rank(); ++z) {
      const MeshVertex zv{z, t};
      if (!is_vertex(zv)) continue;
      // Direct sum of the predecessors' spaces.
      std::vector<std::pair<int, std::size_t>> slots;  // (pred label, basis index)
      std::map<int, std::size_t> offset;
      for (int y : neighbors_[z]) {
        auto it = tab.nodes.find({y, t - 1});
        if (it == tab.nodes.end()) continue;
        offset[y] = slots.size();
        for (std::size_t k = 0; k < it->second.dim; ++k) slots.emplace_back(y, k);
      }
      if (slots.empty()) continue;
      const std::size_t total = slots.size();
      // Image of the mesh map from tau z.
      std::vector<Vector> spanning;
      auto tz = tab.nodes.find(tau(zv));
      if (tz != tab.nodes.end()) {
        for (std::size_t k = 0; k < tz->second.dim; ++k) {
          Vector col(total, Rational(0));
          for (const auto& [y, off] : offset) {
            const Node& ny = tab.nodes.at({y, t - 1});
            auto m = ny.in.find(z);
            if (m == ny.in.end()) continue;
            for (std::size_t r = 0; r < ny.dim; ++r) col[off + r] = m->second(r, k);
          }
          spanning.push_back(std::move(col));
        }
      }
      // Independent part of the image, then greedy standard complement.
      std::vector<Vector> basis;
      for (auto& v : spanning) {
        basis.push_back(v);
        if (span_rank(basis, total) < basis.size()) basis.pop_back();
      }
      const std::size_t image_rank = basis.size();
      std::vector<std::size_t> chosen;
      for (std::size_t s = 0; s < total && basis.size() < total; ++s) {
        Vector e(total, Rational(0));
        e[s] = 1;
        basis.push_back(e);
        if (span_rank(basis, total) < basis.size()) basis.pop_back();
        else chosen.push_back(s);
      }
      if (chosen.empty()) continue;
      any = true;
      RationalMatrix bm(total, total);
      for (std::size_t c = 0; c < total; ++c)
        for (std::size_t r = 0; r < total; ++r) bm(r, c) = basis[c][r];
      // Coordinates of each standard vector in the basis; the rows past the
      // image part are the quotient coordinates.
      RationalMatrix aug(total, 2 * total);
      for (std::size_t r = 0; r < total; ++r) {
        for (std::size_t c = 0; c < total; ++c) aug(r, c) = bm(r, c);
        aug(r, total + r) = 1;
      }
      const RowEchelon e = row_reduce(aug);
      Node node;
      node.dim = chosen.size();
      for (std::size_t s : chosen) node.origin.push_back(slots[s]);
      for (const auto& [y, off] : offset) {
        const std::size_t dy = tab.nodes.at({y, t - 1}).dim;
        RationalMatrix m(node.dim, dy);
        for (std::size_t r = 0; r < node.dim; ++r)
          for (std::size_t c = 0; c < dy; ++c) m(r, c) = e.reduced(image_rank + r, total + off + c);
        node.in.emplace(y, std::move(m));
      }
      tab.nodes.emplace(zv, std::move(node));
    }
    if (!any) break;
  }
  tab.end_level = t;
  return tab;
}

const MeshCategory::SourceTable& MeshCategory::table(const MeshVertex& a) const {
  auto it = tables_.find(a);
  if (it == tables_.end())
    throw InternalError("no Hom table for mesh vertex (" + std::to_string(a.label + 1) + ", " + std::to_string(a.level) + ")");
  return it->second;
}

std::size_t MeshCategory::hom_dim(const MeshVertex& a, const MeshVertex& z) const {
  const SourceTable& tab = table(a);
  auto it = tab.nodes.find(z);
  return it == tab.nodes.end() ? 0 : it->second.dim;
}

int MeshCategory::support_end(const MeshVertex& a) const { return table(a).end_level; }

Vector MeshCategory::push(const SourceTable& path_table, const MeshVertex& z, std::size_t k, const SourceTable& target,
                          const MeshAutomorphism* phi, const Vector& start,
                          std::map<std::pair<MeshVertex, std::size_t>, Vector>& memo) const {
  auto key = std::make_pair(z, k);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  const Node& node = path_table.nodes.at(z);
  const auto [pred, pk] = node.origin[k];
  Vector out;
  if (pred < 0) {
    out = start;
  } else {
    const MeshVertex y{pred, z.level - 1};
    const Vector prev = push(path_table, y, pk, target, phi, start, memo);
    const MeshVertex ty = phi ? (*phi)(y) : y;
    const MeshVertex tz = phi ? (*phi)(z) : z;
    auto nz = target.nodes.find(tz);
    if (nz == target.nodes.end() || is_zero(prev)) {
      out.assign(nz == target.nodes.end() ? 0 : nz->second.dim, Rational(0));
    } else {
      auto m = nz->second.in.find(ty.label);
      out.assign(nz->second.dim, Rational(0));
      if (m != nz->second.in.end()) out = m->second.apply(prev);
    }
  }
  memo.emplace(key, out);
  return out;
}

Vector MeshCategory::evaluate(const SourceTable& path_table, const MeshVertex& c, const Vector& g, const SourceTable& target,
                              const MeshAutomorphism* phi, const Vector& start) const {
  const MeshVertex tc = phi ? (*phi)(c) : c;
  auto nt = target.nodes.find(tc);
  Vector out(nt == target.nodes.end() ? 0 : nt->second.dim, Rational(0));
  auto nc = path_table.nodes.find(c);
  if (nc == path_table.nodes.end()) {
    if (!is_zero(g)) throw InvalidArgument("morphism vector for a zero Hom space");
    return out;
  }
  if (g.size() != nc->second.dim) throw InvalidArgument("morphism vector has the wrong length");
  if (out.empty()) return out;
  std::map<std::pair<MeshVertex, std::size_t>, Vector> memo;
  for (std::size_t k = 0; k < g.size(); ++k) {
    if (sgn(g[k]) == 0) continue;
    const Vector img = push(path_table, c, k, target, phi, start, memo);
    for (std::size_t r = 0; r < out.size(); ++r) out[r] += g[k] * img[r];
  }
  return out;
}

Vector MeshCategory::compose(const MeshVertex& a, const MeshVertex& b, const MeshVertex& c, const Vector& f,
                             const Vector& g) const {
  const SourceTable& ta = table(a);
  if (hom_dim(a, b) != f.size()) throw InvalidArgument("first morphism has the wrong length");
  if (ta.nodes.find(c) == ta.nodes.end()) return {};
  if (f.empty() || g.empty()) return Vector(hom_dim(a, c), Rational(0));
  return evaluate(table(b), c, g, ta, nullptr, f);
}

Vector MeshCategory::transport(const MeshVertex& b, const MeshVertex& c, const Vector& g, const MeshAutomorphism& phi) const {
  if (g.empty()) return Vector(hom_dim(phi(b), phi(c)), Rational(0));
  return evaluate(table(b), c, g, table(phi(b)), &phi, identity());
}

}  // namespace clustertilt
