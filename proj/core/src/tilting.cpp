#include "clustertilt/tilting.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "clustertilt/error.hpp"

namespace clustertilt {

namespace {

bool in_span(const std::vector<Vector>& spanning, const Vector& v) {
  if (is_zero(v)) return true;
  if (spanning.empty()) return false;
  std::vector<Vector> with = spanning;
  with.push_back(v);
  return span_rank(with, v.size()) == span_rank(spanning, v.size());
}

std::string object_name(const ClusterCategory& cc, std::size_t k) {
  if (cc.is_shifted_projective(k)) return "P" + std::to_string(k + 1) + "[1]";
  return "M" + cc.object_root(k).to_string();
}

std::string path_string(const Path& p) {
  std::string s;
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    if (i) s += "->";
    s += std::to_string(p.vertices[i] + 1);
  }
  return s;
}

}  // namespace

bool is_tilting(const ClusterCategory& cc, const std::vector<std::size_t>& objects) {
  if (static_cast<int>(objects.size()) != cc.rank()) return false;
  std::set<std::size_t> distinct(objects.begin(), objects.end());
  if (distinct.size() != objects.size()) return false;
  for (std::size_t a : objects) {
    if (a >= cc.object_count()) return false;
    for (std::size_t b : objects)
      if (cc.ext(a, b) != 0) return false;
  }
  return true;
}

TiltingObject tilting_from_cluster(const ClusterCategory& cc, const ExchangeGraphAtlas& atlas, std::size_t cluster) {
  if (!atlas.has_roots()) throw InvalidArgument("atlas carries no root labels");
  TiltingObject t;
  t.cluster = cluster;
  for (std::size_t v : atlas.clusters().at(cluster).vars) t.summands.push_back(cc.object_of(atlas.roots()[v]));
  if (!is_tilting(cc, t.summands)) throw InternalError("cluster " + std::to_string(cluster) + " does not give a tilting object");
  return t;
}

std::size_t max_summand_hom(const ClusterCategory& cc, const TiltingObject& t) {
  std::size_t best = 0;
  for (std::size_t i = 0; i < t.summands.size(); ++i)
    for (std::size_t j = 0; j < t.summands.size(); ++j)
      if (i != j) best = std::max(best, cc.hom(t.summands[i], t.summands[j]));
  return best;
}

EndPresentation quiver_QT(const ClusterCategory& cc, const TiltingObject& t) {
  const int n = static_cast<int>(t.summands.size());
  EndPresentation e;
  e.quiver = Quiver(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const std::size_t ti = t.summands[i], tj = t.summands[j];
      const std::size_t h = cc.hom(ti, tj);
      if (h >= 2)
        throw StructuralViolation("Hom_C(" + object_name(cc, ti) + ", " + object_name(cc, tj) + ") has dimension " +
                                  std::to_string(h));
      if (h == 0) continue;
      const CMorphism f = cc.hom_basis(ti, tj).front();
      std::vector<Vector> through;
      for (int k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        const std::size_t tk = t.summands[k];
        for (const auto& a : cc.hom_basis(ti, tk))
          for (const auto& b : cc.hom_basis(tk, tj)) through.push_back(cc.compose(a, b).coordinates());
      }
      if (in_span(through, f.coordinates())) continue;
      if (e.quiver(i, j) != 0) throw StructuralViolation("arrows in both directions between two summands");
      e.quiver.set_arrows(j, i, 1);
      e.witnesses.emplace(std::make_pair(j, i), f);
    }
  return e;
}

bool matches_seed_quiver(const EndPresentation& e, const Quiver& seed_quiver, bool flip) {
  return e.quiver == (flip ? seed_quiver.opposite() : seed_quiver);
}

CMorphism path_composite(const ClusterCategory& cc, const TiltingObject& t, const EndPresentation& e, const Path& p) {
  if (p.vertices.empty()) throw InvalidArgument("empty path");
  const std::size_t k = p.vertices.size() - 1;
  CMorphism out = cc.identity(t.summands[static_cast<std::size_t>(p.vertices[k])]);
  for (std::size_t m = k; m > 0; --m) {
    auto it = e.witnesses.find({p.vertices[m - 1], p.vertices[m]});
    if (it == e.witnesses.end()) throw InvalidArgument("path uses a non-arrow " + path_string(p));
    out = cc.compose(out, it->second);
  }
  return out;
}

int winding_number(const ClusterCategory& cc, const EndPresentation& e, const Path& closed) {
  if (closed.vertices.empty() || closed.vertices.front() != closed.vertices.back())
    throw InvalidArgument("path is not closed");
  int total = 0;
  for (std::size_t m = 0; m + 1 < closed.vertices.size(); ++m) {
    auto it = e.witnesses.find({closed.vertices[m], closed.vertices[m + 1]});
    if (it == e.witnesses.end()) throw InvalidArgument("path uses a non-arrow " + path_string(closed));
    const auto d = cc.lift_degree(it->second);
    if (!d) throw InternalError("arrow witness is zero");
    total += *d;
  }
  return total;
}

bool RelationReport::passed() const {
  if (!nonzero_long_paths.empty()) return false;
  return std::all_of(shortest.begin(), shortest.end(), [](const RelationVerdict& v) { return v.passed; });
}

RelationReport relations_check(const ClusterCategory& cc, const TiltingObject& t, const EndPresentation& e) {
  RelationReport report;
  const Quiver& q = e.quiver;
  const int n = q.size();
  for (const auto& entry : relations_IC(q).entries) {
    if (entry.paths.empty()) continue;
    RelationVerdict v;
    v.from = entry.from;
    v.to = entry.to;
    v.paths = entry.paths;
    v.kind = entry.kind;
    std::vector<CMorphism> comps;
    for (const auto& p : entry.paths) comps.push_back(path_composite(cc, t, e, p));
    if (entry.kind == RelationKind::Zero) {
      v.passed = comps[0].is_zero();
      if (!v.passed) v.detail = "composite of " + path_string(entry.paths[0]) + " is nonzero";
    } else {
      v.passed = proportional_nonzero(comps[0].coordinates(), comps[1].coordinates());
      if (!v.passed) v.detail = "composites of " + path_string(entry.paths[0]) + " and " + path_string(entry.paths[1]) +
                                " are not proportional and nonzero";
    }
    report.shortest.push_back(std::move(v));
  }
  // Remaining paths back along each arrow, no arrow used twice.
  for (const auto& [from, to] : q.arrows()) {
    const auto shortest = shortest_paths(q, from, to);
    std::set<std::pair<int, int>> used;
    std::vector<int> walk{to};
    std::function<void(int)> extend = [&](int at) {
      if (at == from && walk.size() > 1) {
        const Path p{walk};
        if (std::find(shortest.begin(), shortest.end(), p) == shortest.end()) {
          ++report.long_paths_checked;
          if (!path_composite(cc, t, e, p).is_zero()) report.nonzero_long_paths.push_back(p);
        }
      }
      for (int next = 0; next < n; ++next) {
        if (q(at, next) <= 0 || used.count({at, next})) continue;
        used.insert({at, next});
        walk.push_back(next);
        extend(next);
        walk.pop_back();
        used.erase({at, next});
      }
    };
    extend(to);
  }
  return report;
}

std::vector<WindingFinding> shortest_cycle_windings(const ClusterCategory& cc, const EndPresentation& e) {
  std::vector<WindingFinding> out;
  for (const auto& [from, to] : e.quiver.arrows())
    for (const auto& p : shortest_paths(e.quiver, from, to)) {
      WindingFinding w;
      w.from = from;
      w.to = to;
      w.path.vertices.push_back(from);
      w.path.vertices.insert(w.path.vertices.end(), p.vertices.begin(), p.vertices.end());
      w.winding = winding_number(cc, e, w.path);
      out.push_back(std::move(w));
    }
  return out;
}

std::pair<std::size_t, std::size_t> complements(const ClusterCategory& cc, const std::vector<std::size_t>& tbar) {
  std::vector<std::size_t> found;
  for (std::size_t x = 0; x < cc.object_count(); ++x) {
    if (std::find(tbar.begin(), tbar.end(), x) != tbar.end()) continue;
    bool ok = true;
    for (std::size_t t : tbar)
      if (cc.ext(x, t) != 0) {
        ok = false;
        break;
      }
    if (ok) found.push_back(x);
  }
  if (found.size() != 2)
    throw StructuralViolation("almost complete tilting object has " + std::to_string(found.size()) + " complements");
  return {found[0], found[1]};
}

std::optional<std::vector<int>> minimal_approximation(const ClusterCategory& cc, const std::vector<std::size_t>& tbar,
                                                      std::size_t m, Side side) {
  const std::size_t r = tbar.size();
  // reach[x][k]: composites through T_k landing in Hom(T_x, m) or Hom(m, T_x).
  std::vector<std::vector<std::vector<Vector>>> reach(r, std::vector<std::vector<Vector>>(r));
  std::vector<std::size_t> target(r);
  for (std::size_t x = 0; x < r; ++x) {
    target[x] = side == Side::Right ? cc.hom(tbar[x], m) : cc.hom(m, tbar[x]);
    for (std::size_t k = 0; k < r; ++k) {
      if (side == Side::Right) {
        for (const auto& g : cc.hom_basis(tbar[k], m))
          for (const auto& f : cc.hom_basis(tbar[x], tbar[k])) reach[x][k].push_back(cc.compose(f, g).coordinates());
      } else {
        for (const auto& g : cc.hom_basis(m, tbar[k]))
          for (const auto& f : cc.hom_basis(tbar[k], tbar[x])) reach[x][k].push_back(cc.compose(g, f).coordinates());
      }
    }
  }
  if (std::all_of(target.begin(), target.end(), [](std::size_t d) { return d == 0; })) return std::nullopt;
  std::vector<int> candidates;
  for (std::size_t k = 0; k < r; ++k)
    if (!reach[k][k].empty() && (side == Side::Right ? cc.hom(tbar[k], m) : cc.hom(m, tbar[k])) > 0)
      candidates.push_back(static_cast<int>(k));
  const std::size_t c = candidates.size();
  std::vector<std::vector<int>> subsets;
  for (unsigned mask = 1; mask < (1u << c); ++mask) {
    std::vector<int> s;
    for (std::size_t b = 0; b < c; ++b)
      if (mask & (1u << b)) s.push_back(candidates[b]);
    subsets.push_back(std::move(s));
  }
  std::sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  for (const auto& s : subsets) {
    bool ok = true;
    for (std::size_t x = 0; x < r && ok; ++x) {
      if (target[x] == 0) continue;
      std::vector<Vector> span;
      for (int k : s) span.insert(span.end(), reach[x][k].begin(), reach[x][k].end());
      const std::size_t len = span.empty() ? 0 : span.front().size();
      ok = !span.empty() && span_rank(span, len) == target[x];
    }
    if (ok) return s;
  }
  throw InternalError("no add-approximation found for " + object_name(cc, m));
}

ExchangeData exchange_data(const ClusterCategory& cc, const TiltingObject& t, const EndPresentation& e, std::size_t slot) {
  ExchangeData x;
  x.slot = slot;
  x.m = t.summands.at(slot);
  std::vector<std::size_t> tbar;
  for (std::size_t i = 0; i < t.summands.size(); ++i)
    if (i != slot) tbar.push_back(t.summands[i]);
  const auto [a, b] = complements(cc, tbar);
  if (a != x.m && b != x.m) throw InternalError("summand is not a complement of the rest");
  x.m_prime = a == x.m ? b : a;
  auto to_slots = [&](std::optional<std::vector<int>> pos) -> std::optional<std::vector<int>> {
    if (!pos) return pos;
    for (int& p : *pos)
      if (p >= static_cast<int>(slot)) ++p;
    return pos;
  };
  x.right = to_slots(minimal_approximation(cc, tbar, x.m, Side::Right));
  x.left = to_slots(minimal_approximation(cc, tbar, x.m, Side::Left));
  const int s = static_cast<int>(slot);
  for (int i = 0; i < e.quiver.size(); ++i) {
    if (e.quiver(s, i) > 0) x.arrows_out.push_back(i);
    if (e.quiver(i, s) > 0) x.arrows_in.push_back(i);
  }
  x.right_matches = x.right ? *x.right == x.arrows_out : x.arrows_out.empty();
  x.left_matches = x.left ? *x.left == x.arrows_in : x.arrows_in.empty();
  x.degenerate_consistent =
      (!x.right) == (x.m_prime == cc.tau_inverse(x.m)) && (!x.left) == (x.m_prime == cc.tau(x.m));
  return x;
}

std::optional<DimensionIdentities> dimension_identities(const ClusterCategory& cc, const TiltingObject& t,
                                                        const ExchangeData& x) {
  if (!cc.is_shifted_projective(x.m_prime) || cc.is_shifted_projective(x.m)) return std::nullopt;
  const RootSystem& rs = cc.roots();
  const int n = rs.rank();
  const int l = static_cast<int>(x.m_prime);
  const Root beta = cc.object_root(x.m);
  if (beta == rs.projective_dims(l) || beta == rs.injective_dims(l)) return std::nullopt;
  const Root beta_prime = cc.object_root(x.m_prime);
  DimensionIdentities d;
  d.l = l;
  d.l_is_sink = rs.signs().is_sink(l);
  Root sum_out = Root::zero(n), sum_in = Root::zero(n);
  for (int i : x.arrows_out) sum_out = sum_out + cc.object_root(t.summands[i]);
  for (int i : x.arrows_in) sum_in = sum_in + cc.object_root(t.summands[i]);
  const Root simple = Root::simple(n, l);
  if (d.l_is_sink) {
    d.right_sum = sum_out == beta - rs.injective_dims(l);
    d.left_sum = sum_in == beta - simple;
  } else {
    d.right_sum = sum_out == beta - simple;
    d.left_sum = sum_in == beta - rs.projective_dims(l);
  }
  const Root u = rs.uplus(beta, beta_prime);
  const Root plus = beta + beta_prime;
  d.right_uplus = sum_out == (d.l_is_sink ? u : plus);
  d.left_uplus = sum_in == (d.l_is_sink ? plus : u);
  return d;
}

std::vector<int> predicted_arrows_in(const RootSystem& rs, const std::vector<Root>& cluster_roots, std::size_t slot,
                                     const Root& beta_prime) {
  const Root& beta = cluster_roots.at(slot);
  const int eps = rs.sign_eps(beta, beta_prime);
  const Root gamma = eps == -1 ? rs.uplus(beta, beta_prime) : beta + beta_prime;
  std::vector<int> out;
  for (int c : rs.cluster_expand(gamma, cluster_roots).components) out.push_back(c);
  std::sort(out.begin(), out.end());
  return out;
}

ExchangeVerdict exchange_check(const ClusterCategory& cc, const ExchangeGraphAtlas& atlas, std::size_t cluster,
                               std::size_t slot) {
  ExchangeVerdict v;
  v.cluster = cluster;
  v.slot = slot;
  const TiltingObject t = tilting_from_cluster(cc, atlas, cluster);
  const EndPresentation e = quiver_QT(cc, t);
  const ExchangeData x = exchange_data(cc, t, e, slot);
  const Seed seed = atlas.seed(cluster);
  const int n = seed.rank();
  const auto& here = atlas.clusters()[cluster];
  const auto& there = atlas.clusters()[here.neighbors[slot]];
  std::optional<std::size_t> fresh;
  for (std::size_t vid : there.vars)
    if (std::find(here.vars.begin(), here.vars.end(), vid) == here.vars.end()) fresh = vid;
  if (!fresh) throw InternalError("exchange neighbour shares every variable");
  if (atlas.roots()[*fresh] != cc.object_root(x.m_prime)) {
    v.detail = "other complement does not match the neighbouring cluster";
    return v;
  }
  auto exponents = [&](const std::optional<std::vector<int>>& slots) {
    Exponents ex(static_cast<std::size_t>(n), 0);
    if (slots)
      for (int i : *slots) ex[static_cast<std::size_t>(i)] = 1;
    return ex;
  };
  const Exponents right = exponents(x.right), left = exponents(x.left);
  const LaurentPolynomial lhs = seed.vars[slot] * atlas.variables()[*fresh];
  const LaurentPolynomial rhs = evaluate_monomial(seed, right) + evaluate_monomial(seed, left);
  v.identity = lhs == rhs;
  const ExchangeMonomials em = exchange_monomials(seed, static_cast<int>(slot));
  v.matches_seed = (em.incoming == left && em.outgoing == right) || (em.incoming == right && em.outgoing == left);
  if (!v.identity) v.detail = "z z' = " + lhs.to_string() + " but the triangles give " + rhs.to_string();
  else if (!v.matches_seed) v.detail = "triangle monomials differ from the seed's exchange monomials";
  return v;
}

DenominatorVerdict denominator_check(const ClusterCategory& cc, const ExchangeGraphAtlas& atlas, std::size_t cluster) {
  return denominator_check(cc, atlas, cluster, reexpress(atlas, cluster));
}

DenominatorVerdict denominator_check(const ClusterCategory& cc, const ExchangeGraphAtlas& atlas, std::size_t cluster,
                                     const std::vector<LaurentPolynomial>& reexpressed) {
  DenominatorVerdict v;
  v.cluster = cluster;
  const TiltingObject t = tilting_from_cluster(cc, atlas, cluster);
  const int n = cc.rank();
  for (std::size_t vid = 0; vid < reexpressed.size(); ++vid) {
    const std::size_t obj = cc.object_of(atlas.roots()[vid]);
    const LaurentPolynomial& expr = reexpressed[vid];
    ++v.checked;
    auto at = std::find(t.summands.begin(), t.summands.end(), obj);
    if (at != t.summands.end()) {
      const int j = static_cast<int>(at - t.summands.begin());
      if (expr != LaurentPolynomial::variable(n, j))
        v.failures.push_back("summand " + object_name(cc, obj) + " is " + expr.to_string() + ", not its own variable");
      continue;
    }
    std::vector<int> expected;
    for (std::size_t ti : t.summands) expected.push_back(static_cast<int>(cc.ext(ti, obj)));
    const std::vector<int> d = expr.denominator_vector();
    if (d != expected) {
      std::string got, want;
      for (int i = 0; i < n; ++i) {
        got += (i ? "," : "") + std::to_string(d[i]);
        want += (i ? "," : "") + std::to_string(expected[i]);
      }
      v.failures.push_back("cluster " + std::to_string(cluster) + ", " + object_name(cc, obj) + ": d-vector (" + got +
                           ") but Ext dimensions (" + want + ")");
    } else if (!expr.numerator_prime_to_variables()) {
      v.failures.push_back("cluster " + std::to_string(cluster) + ", " + object_name(cc, obj) +
                           ": numerator divisible by a cluster variable");
    }
  }
  return v;
}

ModuleCountVerdict module_count_check(const ClusterCategory& cc, const TiltingObject& t) {
  ModuleCountVerdict v;
  v.expected = cc.roots().positive_roots().size();
  std::set<std::vector<std::size_t>> seen;
  for (std::size_t m = 0; m < cc.object_count(); ++m) {
    if (std::find(t.summands.begin(), t.summands.end(), m) != t.summands.end()) continue;
    std::vector<std::size_t> d;
    for (std::size_t ti : t.summands) d.push_back(cc.ext(ti, m));
    if (std::all_of(d.begin(), d.end(), [](std::size_t a) { return a == 0; })) v.nonzero = false;
    if (!seen.insert(d).second) v.injective = false;
  }
  v.distinct = seen.size();
  return v;
}

}  // namespace clustertilt
