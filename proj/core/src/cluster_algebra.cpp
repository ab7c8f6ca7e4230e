#include "clustertilt/cluster_algebra.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "clustertilt/error.hpp"

namespace clustertilt {

Quiver alternating_quiver(const RootSystem& rs) {
  Quiver q(rs.rank());
  for (auto [a, b] : rs.type().edges()) {
    if (rs.signs().is_source(a)) q.set_arrows(a, b, 1);
    else q.set_arrows(b, a, 1);
  }
  return q;
}

Seed initial_seed(const Quiver& q) {
  Seed s{q, {}};
  for (int i = 0; i < q.size(); ++i) s.vars.push_back(LaurentPolynomial::variable(q.size(), i));
  return s;
}

Seed initial_seed(const RootSystem& rs) { return initial_seed(alternating_quiver(rs)); }

ExchangeMonomials exchange_monomials(const Seed& s, int k) {
  const int n = s.rank();
  if (k < 0 || k >= n) throw InvalidArgument("mutation vertex out of range");
  ExchangeMonomials m{Exponents(static_cast<std::size_t>(n), 0), Exponents(static_cast<std::size_t>(n), 0)};
  for (int x = 0; x < n; ++x) {
    const int b = s.quiver(x, k);
    if (b > 0) m.incoming[x] = b;
    if (b < 0) m.outgoing[x] = -b;
  }
  return m;
}

LaurentPolynomial evaluate_monomial(const Seed& s, const Exponents& slot_exponents) {
  const int nvars = s.vars.empty() ? 0 : s.vars.front().nvars();
  LaurentPolynomial out = LaurentPolynomial::constant(nvars, 1);
  for (std::size_t i = 0; i < slot_exponents.size(); ++i)
    if (slot_exponents[i] > 0) out = out * pow(s.vars[i], slot_exponents[i]);
  return out;
}

Seed mutate_seed(const Seed& s, int k) {
  const ExchangeMonomials m = exchange_monomials(s, k);
  const LaurentPolynomial sum = evaluate_monomial(s, m.incoming) + evaluate_monomial(s, m.outgoing);
  auto z = sum.divide_exact(s.vars[static_cast<std::size_t>(k)]);
  if (!z) throw InternalError("exchange relation at vertex " + std::to_string(k + 1) + " is not an exact division");
  Seed out{s.quiver.mutate(k), s.vars};
  out.vars[static_cast<std::size_t>(k)] = std::move(*z);
  return out;
}

Root root_of(const RootSystem& rs, const LaurentPolynomial& v) {
  const int n = rs.rank();
  for (int i = 0; i < n; ++i)
    if (v == LaurentPolynomial::variable(n, i)) return -Root::simple(n, i);
  Root d(v.denominator_vector());
  if (!rs.is_positive_root(d))
    throw InternalError("denominator vector " + d.to_string() + " of " + v.to_string() + " is not a positive root");
  return d;
}

// ---------------------------------------------------------------------------
// Atlas

std::optional<std::size_t> ExchangeGraphAtlas::variable_id(const LaurentPolynomial& v) const {
  auto it = variable_index_.find(v);
  if (it == variable_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> ExchangeGraphAtlas::variable_of_root(const Root& r) const {
  auto it = root_index_.find(r);
  if (it == root_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> ExchangeGraphAtlas::find_cluster(std::vector<std::size_t> var_ids) const {
  std::sort(var_ids.begin(), var_ids.end());
  auto it = cluster_index_.find(var_ids);
  if (it == cluster_index_.end()) return std::nullopt;
  return it->second;
}

Seed ExchangeGraphAtlas::seed(std::size_t cluster) const {
  const AtlasCluster& c = clusters_.at(cluster);
  Seed s{c.quiver, {}};
  for (auto id : c.vars) s.vars.push_back(variables_[id]);
  return s;
}

std::size_t ExchangeGraphAtlas::edge_count() const {
  std::size_t e = 0;
  for (const auto& c : clusters_) e += c.neighbors.size();
  return e / 2;
}

namespace {

// Reorders a seed so that its variable ids ascend.
struct Normalized {
  std::vector<std::size_t> ids;
  Quiver quiver;
  std::vector<int> position;  // old slot -> new slot
};

}  // namespace

ExchangeGraphAtlas explore(const Quiver& initial, std::size_t cap) {
  ExchangeGraphAtlas atlas;
  const int n = initial.size();
  atlas.rank_ = n;

  auto intern = [&](const LaurentPolynomial& v) {
    auto [it, inserted] = atlas.variable_index_.try_emplace(v, atlas.variables_.size());
    if (inserted) atlas.variables_.push_back(v);
    return it->second;
  };
  auto normalize = [&](const Seed& s) {
    Normalized out;
    std::vector<std::pair<std::size_t, int>> keyed;
    for (int i = 0; i < n; ++i) keyed.emplace_back(intern(s.vars[static_cast<std::size_t>(i)]), i);
    std::sort(keyed.begin(), keyed.end());
    out.position.assign(static_cast<std::size_t>(n), 0);
    for (int p = 0; p < n; ++p) {
      out.ids.push_back(keyed[p].first);
      out.position[keyed[p].second] = p;
    }
    out.quiver = s.quiver.relabeled(out.position);
    return out;
  };
  auto add_cluster = [&](Normalized&& nz) {
    const std::size_t id = atlas.clusters_.size();
    if (id >= cap) throw CapExceeded("exchange graph exceeds cap of " + std::to_string(cap) + " clusters");
    atlas.cluster_index_.emplace(nz.ids, id);
    atlas.clusters_.push_back(AtlasCluster{std::move(nz.ids), std::move(nz.quiver), {}});
    return id;
  };

  add_cluster(normalize(initial_seed(initial)));
  for (std::size_t c = 0; c < atlas.clusters_.size(); ++c) {
    const Seed s = atlas.seed(c);
    std::vector<std::size_t> nbrs(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
      Normalized nz = normalize(mutate_seed(s, k));
      auto it = atlas.cluster_index_.find(nz.ids);
      if (it != atlas.cluster_index_.end()) {
        if (atlas.clusters_[it->second].quiver != nz.quiver)
          throw InternalError("cluster reached with two different exchange matrices");
        nbrs[k] = it->second;
      } else {
        nbrs[k] = add_cluster(std::move(nz));
      }
    }
    atlas.clusters_[c].neighbors = std::move(nbrs);
  }
  return atlas;
}

ExchangeGraphAtlas explore(const RootSystem& rs, std::size_t cap) {
  ExchangeGraphAtlas atlas = explore(alternating_quiver(rs), cap);
  for (std::size_t v = 0; v < atlas.variables_.size(); ++v) {
    Root r = root_of(rs, atlas.variables_[v]);
    if (!atlas.root_index_.emplace(r, v).second)
      throw InternalError("two cluster variables share the root " + r.to_string());
    atlas.roots_.push_back(std::move(r));
  }
  if (atlas.roots_.size() != rs.almost_positive_roots().size())
    throw InternalError("variable count differs from the number of almost positive roots");
  return atlas;
}

std::vector<LaurentPolynomial> reexpress(const ExchangeGraphAtlas& atlas, std::size_t reference) {
  const int n = atlas.rank();
  const auto& clusters = atlas.clusters();
  std::vector<std::optional<LaurentPolynomial>> expr(atlas.variables().size());
  std::vector<std::optional<Seed>> seeds(clusters.size());
  Seed start = initial_seed(clusters.at(reference).quiver);
  for (int i = 0; i < n; ++i) expr[clusters[reference].vars[i]] = start.vars[static_cast<std::size_t>(i)];
  seeds[reference] = std::move(start);
  std::deque<std::size_t> queue{reference};
  while (!queue.empty()) {
    const std::size_t c = queue.front();
    queue.pop_front();
    const Seed& s = *seeds[c];
    for (int k = 0; k < n; ++k) {
      const std::size_t d = clusters[c].neighbors[k];
      if (seeds[d]) continue;
      const Seed m = mutate_seed(s, k);
      // Align slot order with cluster d.
      Seed aligned{clusters[d].quiver, std::vector<LaurentPolynomial>(static_cast<std::size_t>(n))};
      std::vector<int> position(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) {
        std::size_t id = clusters[c].vars[i];
        if (i == k) {
          for (auto v : clusters[d].vars)
            if (std::find(clusters[c].vars.begin(), clusters[c].vars.end(), v) == clusters[c].vars.end()) id = v;
        }
        const auto pos = std::find(clusters[d].vars.begin(), clusters[d].vars.end(), id) - clusters[d].vars.begin();
        position[i] = static_cast<int>(pos);
        aligned.vars[static_cast<std::size_t>(pos)] = m.vars[static_cast<std::size_t>(i)];
      }
      if (m.quiver.relabeled(position) != aligned.quiver)
        throw InternalError("re-expansion walked into a different exchange matrix");
      for (int p = 0; p < n; ++p) {
        const std::size_t id = clusters[d].vars[p];
        if (expr[id] && *expr[id] != aligned.vars[p])
          throw InternalError("re-expansion produced two expressions for one variable");
        expr[id] = aligned.vars[p];
      }
      seeds[d] = std::move(aligned);
      queue.push_back(d);
    }
  }
  std::vector<LaurentPolynomial> out;
  for (auto& e : expr) {
    if (!e) throw InternalError("exchange graph is not connected");
    out.push_back(std::move(*e));
  }
  return out;
}

}  // namespace clustertilt
