#include "clustertilt/quiver.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <functional>
#include <sstream>

#include "clustertilt/error.hpp"

namespace clustertilt {

Quiver::Quiver(int n) : n_(n), b_(static_cast<std::size_t>(n * n), 0) {
  if (n < 0) throw InvalidArgument("negative quiver size");
}

Quiver Quiver::from_matrix(const std::vector<std::vector<int>>& b) {
  const int n = static_cast<int>(b.size());
  Quiver q(n);
  for (int x = 0; x < n; ++x) {
    if (static_cast<int>(b[x].size()) != n) throw InvalidArgument("exchange matrix is not square");
    if (b[x][x] != 0) throw InvalidArgument("exchange matrix has a loop at vertex " + std::to_string(x + 1));
    for (int y = 0; y < n; ++y) {
      if (b[x][y] != -b[y][x]) throw InvalidArgument("exchange matrix is not skew-symmetric");
      q.b_[q.index(x, y)] = b[x][y];
    }
  }
  return q;
}

void Quiver::set_arrows(int x, int y, int multiplicity) {
  if (x == y) throw InvalidArgument("loops are not allowed");
  b_[index(x, y)] = multiplicity;
  b_[index(y, x)] = -multiplicity;
}

std::vector<std::vector<int>> Quiver::matrix() const {
  std::vector<std::vector<int>> m(static_cast<std::size_t>(n_), std::vector<int>(static_cast<std::size_t>(n_)));
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y) m[x][y] = (*this)(x, y);
  return m;
}

std::vector<std::pair<int, int>> Quiver::arrows() const {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y)
      if ((*this)(x, y) > 0) out.emplace_back(x, y);
  return out;
}

std::vector<int> Quiver::neighbors(int v) const {
  std::vector<int> out;
  for (int w = 0; w < n_; ++w)
    if (adjacent(v, w)) out.push_back(w);
  return out;
}

int Quiver::max_abs_entry() const {
  int m = 0;
  for (int x : b_) m = std::max(m, std::abs(x));
  return m;
}

bool Quiver::is_connected() const {
  if (n_ == 0) return true;
  std::vector<bool> seen(static_cast<std::size_t>(n_), false);
  std::deque<int> queue{0};
  seen[0] = true;
  int count = 1;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int w : neighbors(v))
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        queue.push_back(w);
      }
  }
  return count == n_;
}

Quiver Quiver::mutate(int k) const {
  if (k < 0 || k >= n_) throw InvalidArgument("mutation vertex out of range");
  Quiver out(n_);
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y) {
      const int bxy = (*this)(x, y);
      if (x == k || y == k) {
        out.b_[index(x, y)] = -bxy;
      } else {
        const int bxk = (*this)(x, k);
        const int bky = (*this)(k, y);
        out.b_[index(x, y)] = bxy + (std::abs(bxk) * bky + bxk * std::abs(bky)) / 2;
      }
    }
  return out;
}

Quiver Quiver::relabeled(const std::vector<int>& position) const {
  if (static_cast<int>(position.size()) != n_) throw InvalidArgument("relabelling has wrong length");
  Quiver out(n_);
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y) out.b_[out.index(position[x], position[y])] = (*this)(x, y);
  return out;
}

Quiver Quiver::opposite() const {
  Quiver out = *this;
  for (auto& x : out.b_) x = -x;
  return out;
}

const char* to_string(RelationKind k) {
  switch (k) {
    case RelationKind::None: return "none";
    case RelationKind::Zero: return "zero";
    case RelationKind::Commutativity: return "commutativity";
  }
  return "?";
}

std::size_t RelationSet::count(RelationKind k) const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [k](const RelationEntry& e) { return e.kind == k; }));
}

// ---------------------------------------------------------------------------
// Canonical forms

Quiver CanonicalForm::quiver(int n) const {
  Quiver q(n);
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) q.set_arrows(x, y, code[static_cast<std::size_t>(x * n + y)]);
  return q;
}

CanonicalForm canonical_form(const Quiver& q) {
  const int n = q.size();
  // Vertices are ordered by (out-degree, in-degree); only orderings that
  // respect this invariant are searched.
  std::vector<std::pair<std::pair<int, int>, int>> keyed;
  for (int v = 0; v < n; ++v) {
    int out = 0, in = 0;
    for (int w = 0; w < n; ++w) {
      if (q(v, w) > 0) out += q(v, w);
      if (q(w, v) > 0) in += q(w, v);
    }
    keyed.push_back({{out, in}, v});
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<std::vector<int>> blocks;
  for (std::size_t i = 0; i < keyed.size(); ++i) {
    if (i == 0 || keyed[i].first != keyed[i - 1].first) blocks.emplace_back();
    blocks.back().push_back(keyed[i].second);
  }

  std::vector<int> best_code;
  std::vector<int> best_order;
  std::vector<int> order;
  std::vector<int> code(static_cast<std::size_t>(n * n));
  std::function<void(std::size_t)> search = [&](std::size_t b) {
    if (b == blocks.size()) {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) code[static_cast<std::size_t>(i * n + j)] = q(order[i], order[j]);
      if (best_code.empty() || code < best_code) {
        best_code = code;
        best_order = order;
      }
      return;
    }
    std::vector<int> perm = blocks[b];
    do {
      order.insert(order.end(), perm.begin(), perm.end());
      search(b + 1);
      order.resize(order.size() - perm.size());
    } while (std::next_permutation(perm.begin(), perm.end()));
  };
  search(0);

  CanonicalForm cf;
  cf.code = std::move(best_code);
  cf.position.assign(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) cf.position[best_order[i]] = i;
  return cf;
}

std::optional<std::vector<int>> find_isomorphism(const Quiver& a, const Quiver& b) {
  if (a.size() != b.size()) return std::nullopt;
  const CanonicalForm ca = canonical_form(a);
  const CanonicalForm cb = canonical_form(b);
  if (ca.code != cb.code) return std::nullopt;
  const int n = a.size();
  std::vector<int> inverse_b(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) inverse_b[cb.position[v]] = v;
  std::vector<int> position(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) position[v] = inverse_b[ca.position[v]];
  return position;
}

std::vector<Quiver> mutation_class(const Quiver& q, std::size_t cap) {
  if (q.max_abs_entry() > 1) throw NotFiniteType("quiver has a multiple arrow");
  const int n = q.size();
  std::map<std::vector<int>, Quiver> seen;
  std::deque<Quiver> queue;
  const CanonicalForm start = canonical_form(q);
  seen.emplace(start.code, start.quiver(n));
  queue.push_back(start.quiver(n));
  while (!queue.empty()) {
    const Quiver cur = queue.front();
    queue.pop_front();
    for (int k = 0; k < n; ++k) {
      const Quiver m = cur.mutate(k);
      if (m.max_abs_entry() > 1) throw NotFiniteType("mutation produced a multiple arrow");
      CanonicalForm cf = canonical_form(m);
      if (seen.count(cf.code)) continue;
      if (seen.size() >= cap) throw CapExceeded("mutation class exceeds cap of " + std::to_string(cap) + " (not finite type or cap too low)");
      Quiver rep = cf.quiver(n);
      seen.emplace(std::move(cf.code), rep);
      queue.push_back(std::move(rep));
    }
  }
  std::vector<Quiver> out;
  out.reserve(seen.size());
  for (auto& [code, rep] : seen) out.push_back(rep);
  return out;
}

// ---------------------------------------------------------------------------
// Shortest paths and relations

std::vector<Path> shortest_paths(const Quiver& q, int i, int j) {
  if (q(i, j) <= 0) throw InvalidArgument("shortest_paths needs an arrow i -> j");
  std::vector<Path> out;
  std::vector<int> path{j};
  std::vector<bool> on_path(static_cast<std::size_t>(q.size()), false);
  on_path[j] = true;

  std::function<void()> extend = [&]() {
    const int last = path.back();
    for (int w = 0; w < q.size(); ++w) {
      if (q(last, w) <= 0 || on_path[w]) continue;
      if (w == i) {
        if (path.size() < 2) continue;
        // Induced-cycle test on the closed vertex sequence path + i.
        std::vector<int> cyc = path;
        cyc.push_back(i);
        const std::size_t m = cyc.size();
        bool induced = true;
        for (std::size_t a = 0; a < m && induced; ++a)
          for (std::size_t b = a + 1; b < m && induced; ++b) {
            const bool consecutive = b == a + 1 || (a == 0 && b == m - 1);
            if (!consecutive && q.adjacent(cyc[a], cyc[b])) induced = false;
          }
        if (induced) out.push_back(Path{std::move(cyc)});
        continue;
      }
      // An intermediate vertex may only touch its predecessor among the
      // vertices already on the path.
      bool chord = false;
      for (std::size_t a = 0; a + 1 < path.size(); ++a)
        if (q.adjacent(path[a], w)) chord = true;
      if (chord) continue;
      on_path[w] = true;
      path.push_back(w);
      extend();
      path.pop_back();
      on_path[w] = false;
    }
  };
  extend();
  std::sort(out.begin(), out.end());
  return out;
}

RelationSet relations_IC(const Quiver& q) {
  RelationSet rs;
  for (auto [i, j] : q.arrows()) {
    RelationEntry e;
    e.from = i;
    e.to = j;
    e.paths = shortest_paths(q, i, j);
    if (e.paths.size() > 2)
      throw StructuralViolation("arrow " + std::to_string(i + 1) + "->" + std::to_string(j + 1) + " has " +
                                std::to_string(e.paths.size()) + " shortest paths");
    e.kind = e.paths.empty() ? RelationKind::None
             : e.paths.size() == 1 ? RelationKind::Zero
                                   : RelationKind::Commutativity;
    rs.entries.push_back(std::move(e));
  }
  return rs;
}

// ---------------------------------------------------------------------------
// Links

namespace {

std::string flip_orientation(std::string s) {
  for (char& c : s) {
    switch (c) {
      case 'o': c = 'i'; break;
      case 'i': c = 'o'; break;
      case '>': c = '<'; break;
      case '<': c = '>'; break;
      default: break;
    }
  }
  return s;
}

std::string reverse_component(const std::string& s) {
  std::string r(s.rbegin(), s.rend());
  for (char& c : r) {
    if (c == '>') c = '<';
    else if (c == '<') c = '>';
  }
  return r;
}

}  // namespace

LinkProfile link(const Quiver& q, int v) {
  LinkProfile lp;
  const std::vector<int> nb = q.neighbors(v);
  std::vector<bool> done(nb.size(), false);
  std::vector<std::string> comp_sigs;
  for (std::size_t s = 0; s < nb.size(); ++s) {
    if (done[s]) continue;
    std::vector<std::size_t> comp{s};
    done[s] = true;
    for (std::size_t h = 0; h < comp.size(); ++h)
      for (std::size_t t = 0; t < nb.size(); ++t)
        if (!done[t] && q.adjacent(nb[comp[h]], nb[t])) {
          done[t] = true;
          comp.push_back(t);
        }
    lp.components.push_back(static_cast<int>(comp.size()));

    std::size_t edges = 0;
    std::vector<int> degree(comp.size(), 0);
    for (std::size_t a = 0; a < comp.size(); ++a) {
      bool has_in = false, has_out = false;
      for (std::size_t b = 0; b < comp.size(); ++b) {
        if (a == b) continue;
        const int e = q(nb[comp[a]], nb[comp[b]]);
        if (e != 0) ++degree[a];
        if (e > 0) has_out = true;
        if (e < 0) has_in = true;
        if (a < b && e != 0) ++edges;
      }
      if (has_in && has_out) lp.alternating = false;
    }
    const bool path_shaped = edges + 1 == comp.size() &&
                             std::all_of(degree.begin(), degree.end(), [](int d) { return d <= 2; });
    if (!path_shaped) {
      lp.linear = false;
      comp_sigs.push_back("*");
      continue;
    }
    // Walk the path from an end.
    std::size_t start = 0;
    for (std::size_t a = 0; a < comp.size(); ++a)
      if (degree[a] <= 1) {
        start = a;
        break;
      }
    std::vector<int> walk{nb[comp[start]]};
    std::vector<bool> used(comp.size(), false);
    used[start] = true;
    while (walk.size() < comp.size()) {
      for (std::size_t b = 0; b < comp.size(); ++b)
        if (!used[b] && q.adjacent(walk.back(), nb[comp[b]])) {
          used[b] = true;
          walk.push_back(nb[comp[b]]);
          break;
        }
    }
    std::string sig;
    for (std::size_t t = 0; t < walk.size(); ++t) {
      sig += q(v, walk[t]) > 0 ? 'o' : 'i';
      if (t + 1 < walk.size()) sig += q(walk[t], walk[t + 1]) > 0 ? '>' : '<';
    }
    comp_sigs.push_back(std::min(sig, reverse_component(sig)));
  }
  std::sort(lp.components.begin(), lp.components.end());

  auto joined = [](std::vector<std::string> sigs) {
    std::sort(sigs.begin(), sigs.end(), [](const std::string& a, const std::string& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    std::string out;
    for (const auto& s : sigs) out += (out.empty() ? "" : "|") + s;
    return out;
  };
  std::vector<std::string> flipped;
  for (const auto& s : comp_sigs) {
    const std::string f = flip_orientation(s);
    flipped.push_back(s == "*" ? s : std::min(f, reverse_component(f)));
  }
  lp.orientation_class = std::min(joined(comp_sigs), joined(flipped));
  return lp;
}

std::vector<ChordlessCycle> chordless_cycles(const Quiver& q) {
  const int n = q.size();
  if (n > 20) throw InvalidArgument("chordless cycle enumeration is limited to 20 vertices");
  std::vector<ChordlessCycle> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) < 3) continue;
    std::vector<int> verts;
    for (int v = 0; v < n; ++v)
      if (mask & (1u << v)) verts.push_back(v);
    bool all_degree_two = true;
    for (int v : verts) {
      int d = 0;
      for (int w : verts)
        if (q.adjacent(v, w)) ++d;
      if (d != 2) all_degree_two = false;
    }
    if (!all_degree_two) continue;
    // Walk the cycle; degree two everywhere plus connectivity means a cycle.
    std::vector<int> cyc{verts.front()};
    int prev = -1;
    while (true) {
      int next = -1;
      for (int w : verts)
        if (w != prev && w != cyc.back() && q.adjacent(cyc.back(), w)) {
          next = w;
          break;
        }
      if (next == cyc.front() || next < 0) break;
      prev = cyc.back();
      cyc.push_back(next);
      if (cyc.size() > verts.size()) break;
    }
    if (cyc.size() != verts.size()) continue;
    bool forward = true, backward = true;
    for (std::size_t t = 0; t < cyc.size(); ++t) {
      const int a = cyc[t], b = cyc[(t + 1) % cyc.size()];
      if (q(a, b) <= 0) forward = false;
      if (q(b, a) <= 0) backward = false;
    }
    out.push_back(ChordlessCycle{std::move(cyc), forward || backward});
  }
  return out;
}

std::string to_dot(const Quiver& q, const std::string& name) {
  std::ostringstream os;
  os << "digraph " << name << " {\n";
  for (int v = 0; v < q.size(); ++v) os << "  " << v + 1 << ";\n";
  for (auto [x, y] : q.arrows()) {
    os << "  " << x + 1 << " -> " << y + 1;
    if (q(x, y) > 1) os << " [label=\"" << q(x, y) << "\"]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// Appendix census

const std::vector<std::vector<int>>& allowed_link_profiles() {
  static const std::vector<std::vector<int>> profiles = {
      {1},    {2},    {3},    {4},    {5},       {6},       {1, 1},    {1, 2},
      {2, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4},    {1, 1, 1}, {1, 1, 2}, {1, 2, 2}};
  return profiles;
}

const std::vector<std::vector<int>>& forbidden_link_profiles() {
  static const std::vector<std::vector<int>> profiles = {{7}, {3, 3}, {1, 5}, {1, 1, 3}, {2, 2, 2}};
  return profiles;
}

bool link_transition_allowed(const std::vector<int>& before, const std::vector<int>& after) {
  if (before == after) return true;
  static const std::vector<std::pair<std::vector<int>, std::vector<int>>> table = {
      {{2}, {1, 1}},       {{3}, {1, 1, 1}}, {{5}, {1, 2, 2}},
      {{6}, {2, 4}},       {{4}, {1, 1, 2}}, {{1, 3}, {1, 1, 2}}};
  for (const auto& [a, b] : table)
    if ((a == before && b == after) || (b == before && a == after)) return true;
  return false;
}

std::string profile_to_string(const std::vector<int>& profile) {
  std::string s = "(";
  for (std::size_t i = 0; i < profile.size(); ++i) s += (i ? "," : "") + std::to_string(profile[i]);
  return s + ")";
}

AppendixCensus appendix_census(const Quiver& seed, const std::string& label, std::size_t cap) {
  AppendixCensus c;
  c.label = label;
  const auto cls = mutation_class(seed, cap);
  c.class_size = cls.size();
  const auto& allowed = allowed_link_profiles();
  const auto& forbidden = forbidden_link_profiles();
  std::size_t index = 0;
  for (const Quiver& q : cls) {
    const std::string where = label + " class member " + std::to_string(index++);
    if (q.max_abs_entry() > 1) c.violations.push_back(where + ": entry outside {-1,0,1}");
    for (auto [i, j] : q.arrows()) {
      const auto paths = shortest_paths(q, i, j);
      ++c.arrows_checked;
      c.max_shortest_paths = std::max(c.max_shortest_paths, paths.size());
      if (paths.size() > 2)
        c.violations.push_back(where + ": arrow " + std::to_string(i + 1) + "->" + std::to_string(j + 1) + " has " +
                               std::to_string(paths.size()) + " shortest paths");
    }
    for (const auto& cyc : chordless_cycles(q)) {
      ++c.chordless_cycles;
      if (!cyc.oriented) {
        ++c.unoriented_cycles;
        c.violations.push_back(where + ": unoriented chordless cycle");
      }
    }
    for (int v = 0; v < q.size(); ++v) {
      const LinkProfile lp = link(q, v);
      ++c.links_checked;
      ++c.profile_counts[lp.components];
      c.orientation_classes[lp.components].insert(lp.orientation_class);
      const std::string at = where + " vertex " + std::to_string(v + 1) + " link " + profile_to_string(lp.components);
      if (!lp.alternating || !lp.linear) c.violations.push_back(at + ": not an alternating linear forest");
      if (lp.components.size() > 3) c.violations.push_back(at + ": more than three components");
      if (std::find(forbidden.begin(), forbidden.end(), lp.components) != forbidden.end())
        c.violations.push_back(at + ": forbidden profile");
      else if (!lp.components.empty() && std::find(allowed.begin(), allowed.end(), lp.components) == allowed.end())
        c.violations.push_back(at + ": profile not in the allowed list");
      const LinkProfile after = link(q.mutate(v), v);
      if (after.components != lp.components) c.shape_changes.insert({lp.components, after.components});
      if (!link_transition_allowed(lp.components, after.components))
        c.violations.push_back(at + ": mutation turns it into " + profile_to_string(after.components));
    }
  }
  return c;
}

}  // namespace clustertilt
