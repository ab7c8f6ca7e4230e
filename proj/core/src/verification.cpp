#include "clustertilt/verification.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>

#include "clustertilt/error.hpp"

namespace clustertilt {

namespace {

constexpr std::size_t kMaxFailures = 20;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

void fail(CheckResult& r, std::string message) {
  r.status = CheckStatus::Fail;
  ++r.counts["failures"];
  if (r.failures.size() < kMaxFailures) r.failures.push_back(std::move(message));
}

std::string join_ints(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::string slots_string(const std::optional<std::vector<int>>& s) {
  if (!s) return "absent";
  std::vector<int> one_based;
  for (int i : *s) one_based.push_back(i + 1);
  return join_ints(one_based);
}

std::string path_string(const Path& p) {
  std::string s;
  for (std::size_t i = 0; i < p.vertices.size(); ++i) s += (i ? "->" : "") + std::to_string(p.vertices[i] + 1);
  return s;
}

std::vector<std::size_t> selected_clusters(const ExchangeGraphAtlas& atlas, const VerifyOptions& o) {
  if (o.cluster) return {*o.cluster};
  std::vector<std::size_t> all(atlas.clusters().size());
  for (std::size_t c = 0; c < all.size(); ++c) all[c] = c;
  return all;
}

CheckResult check_quivers(const TypeContext& ctx, const VerifyOptions& o) {
  CheckResult r;
  r.name = "quivers";
  const auto& cc = ctx.category();
  const auto& atlas = ctx.atlas();
  std::size_t max_hom = 0;
  for (std::size_t c : selected_clusters(atlas, o)) {
    const TiltingObject t = tilting_from_cluster(cc, atlas, c);
    ++r.counts["clusters"];
    const std::size_t n = t.summands.size();
    r.counts["summand_pairs"] += static_cast<long long>(n * (n - 1));
    const std::size_t h = max_summand_hom(cc, t);
    max_hom = std::max(max_hom, h);
    if (h > 1) {
      ++r.counts["hom_bound_violations"];
      fail(r, "cluster " + std::to_string(c) + ": a summand Hom space has dimension " + std::to_string(h));
      continue;
    }
    const EndPresentation e = quiver_QT(cc, t);
    if (matches_seed_quiver(e, atlas.clusters()[c].quiver, o.convention_flip)) {
      ++r.counts["matched"];
    } else {
      fail(r, "cluster " + std::to_string(c) + ": Q_T " + to_dot(e.quiver, "QT") + " differs from seed quiver " +
                  to_dot(atlas.clusters()[c].quiver, "QC"));
    }
  }
  r.counts["max_summand_hom"] = static_cast<long long>(max_hom);
  if (!r.counts.count("hom_bound_violations")) r.counts["hom_bound_violations"] = 0;
  r.notes.push_back(std::string("convention flip ") + (o.convention_flip ? "on" : "off"));
  return r;
}

CheckResult check_relations(const TypeContext& ctx, const VerifyOptions& o) {
  CheckResult r;
  r.name = "relations";
  const auto& cc = ctx.category();
  const auto& atlas = ctx.atlas();
  r.counts["zero_relations"] = 0;
  r.counts["commutativity_relations"] = 0;
  r.counts["long_paths"] = 0;
  for (std::size_t c : selected_clusters(atlas, o)) {
    const TiltingObject t = tilting_from_cluster(cc, atlas, c);
    const EndPresentation e = quiver_QT(cc, t);
    const RelationReport rep = relations_check(cc, t, e);
    ++r.counts["clusters"];
    for (const auto& v : rep.shortest) {
      ++r.counts[v.kind == RelationKind::Zero ? "zero_relations" : "commutativity_relations"];
      if (!v.passed) fail(r, "cluster " + std::to_string(c) + ", arrow " + std::to_string(v.from + 1) + "->" +
                                 std::to_string(v.to + 1) + ": " + v.detail);
    }
    r.counts["long_paths"] += static_cast<long long>(rep.long_paths_checked);
    for (const auto& p : rep.nonzero_long_paths)
      fail(r, "cluster " + std::to_string(c) + ": non-shortest path " + path_string(p) + " composes to a nonzero map");
  }
  return r;
}

CheckResult check_bb(const TypeContext& ctx, const VerifyOptions& o) {
  CheckResult r;
  r.name = "bb";
  const auto& cc = ctx.category();
  const auto& atlas = ctx.atlas();
  for (const char* key : {"exchanges", "right_present", "left_present", "dimension_identities", "arrow_criterion"})
    r.counts[key] = 0;
  for (std::size_t c : selected_clusters(atlas, o)) {
    const TiltingObject t = tilting_from_cluster(cc, atlas, c);
    const EndPresentation e = quiver_QT(cc, t);
    std::vector<Root> roots;
    for (std::size_t s : t.summands) roots.push_back(cc.object_root(s));
    for (std::size_t s = 0; s < t.summands.size(); ++s) {
      const ExchangeData x = exchange_data(cc, t, e, s);
      const std::string where = "cluster " + std::to_string(c) + ", slot " + std::to_string(s + 1);
      ++r.counts["exchanges"];
      if (x.right) ++r.counts["right_present"];
      if (x.left) ++r.counts["left_present"];
      if (!x.right_matches)
        fail(r, where + ": right approximation " + slots_string(x.right) + " but arrows out " + slots_string(x.arrows_out));
      if (!x.left_matches)
        fail(r, where + ": left approximation " + slots_string(x.left) + " but arrows in " + slots_string(x.arrows_in));
      if (!x.degenerate_consistent) fail(r, where + ": missing approximation does not match tau of the complement");
      if (auto d = dimension_identities(cc, t, x)) {
        ++r.counts["dimension_identities"];
        if (!d->passed())
          fail(r, where + ": dimension identities fail at P" + std::to_string(d->l + 1) + "[1] (" +
                      (d->l_is_sink ? "sink" : "source") + ")");
      }
      ++r.counts["arrow_criterion"];
      const auto predicted = predicted_arrows_in(cc.roots(), roots, s, cc.object_root(x.m_prime));
      if (predicted != x.arrows_in)
        fail(r, where + ": sign criterion predicts arrows in " + slots_string(predicted) + ", Q_T has " +
                    slots_string(x.arrows_in));
    }
  }
  return r;
}

CheckResult check_exchange(const TypeContext& ctx, const VerifyOptions& o) {
  CheckResult r;
  r.name = "exchange";
  const auto& cc = ctx.category();
  const auto& atlas = ctx.atlas();
  r.counts["exchanges"] = 0;
  for (std::size_t c : selected_clusters(atlas, o))
    for (int s = 0; s < atlas.rank(); ++s) {
      const ExchangeVerdict v = exchange_check(cc, atlas, c, static_cast<std::size_t>(s));
      ++r.counts["exchanges"];
      if (!v.identity || !v.matches_seed)
        fail(r, "cluster " + std::to_string(c) + ", slot " + std::to_string(s + 1) + ": " + v.detail);
    }
  return r;
}

CheckResult check_denominators(const TypeContext& ctx, const VerifyOptions& o) {
  CheckResult r;
  r.name = "denominators";
  const auto& cc = ctx.category();
  const auto& atlas = ctx.atlas();
  r.counts["pairs"] = 0;
  for (std::size_t c : selected_clusters(atlas, o)) {
    const auto re = reexpress(atlas, c);
    const DenominatorVerdict v = denominator_check(cc, atlas, c, re);
    ++r.counts["clusters"];
    r.counts["pairs"] += static_cast<long long>(v.checked);
    for (const auto& f : v.failures) fail(r, f);
    if (o.cluster) {
      const TiltingObject t = tilting_from_cluster(cc, atlas, c);
      r.table_header = {"object", "root", "ext_vector", "d_vector", "expression"};
      for (std::size_t vid = 0; vid < re.size(); ++vid) {
        const std::size_t obj = cc.object_of(atlas.roots()[vid]);
        std::vector<int> ext;
        for (std::size_t ti : t.summands) ext.push_back(static_cast<int>(cc.ext(ti, obj)));
        r.table.push_back({object_label(cc, obj), atlas.roots()[vid].to_string(), join_ints(ext),
                           join_ints(re[vid].denominator_vector()), re[vid].to_string()});
      }
    }
  }
  return r;
}

CheckResult check_counts(const TypeContext& ctx, const VerifyOptions& o) {
  CheckResult r;
  r.name = "counts";
  const auto& cc = ctx.category();
  const auto& atlas = ctx.atlas();
  r.counts["nu"] = static_cast<long long>(cc.roots().positive_roots().size());
  for (std::size_t c : selected_clusters(atlas, o)) {
    const ModuleCountVerdict v = module_count_check(cc, tilting_from_cluster(cc, atlas, c));
    ++r.counts["clusters"];
    if (!v.passed())
      fail(r, "cluster " + std::to_string(c) + ": " + std::to_string(v.distinct) + " distinct d-vectors" +
                  (v.injective ? "" : ", collision") + (v.nonzero ? "" : ", zero vector"));
  }
  return r;
}

CheckResult check_appendix(const TypeContext& ctx, const VerifyOptions&) {
  CheckResult r;
  r.name = "appendix";
  const AppendixCensus census = appendix_census(alternating_quiver(ctx.roots()), ctx.roots().type().name());
  r.counts["class_size"] = static_cast<long long>(census.class_size);
  r.counts["arrows_checked"] = static_cast<long long>(census.arrows_checked);
  r.counts["max_shortest_paths"] = static_cast<long long>(census.max_shortest_paths);
  r.counts["chordless_cycles"] = static_cast<long long>(census.chordless_cycles);
  r.counts["unoriented_cycles"] = static_cast<long long>(census.unoriented_cycles);
  r.counts["links_checked"] = static_cast<long long>(census.links_checked);
  for (const auto& v : census.violations) fail(r, v);
  for (const auto& [profile, count] : census.profile_counts) {
    std::string note = "link " + profile_to_string(profile) + ": " + std::to_string(count) + " occurrences";
    auto it = census.orientation_classes.find(profile);
    if (it != census.orientation_classes.end()) {
      note += ", orientation classes";
      for (const auto& cls : it->second) note += " " + cls;
    }
    r.notes.push_back(std::move(note));
  }
  return r;
}

CheckResult check_winding(const TypeContext& ctx, const VerifyOptions& o) {
  CheckResult r;
  r.name = "winding";
  r.status = CheckStatus::Finding;
  const auto& cc = ctx.category();
  const auto& atlas = ctx.atlas();
  std::map<int, long long> histogram;
  std::size_t deviations = 0;
  for (std::size_t c : selected_clusters(atlas, o)) {
    const EndPresentation e = quiver_QT(cc, tilting_from_cluster(cc, atlas, c));
    for (const auto& w : shortest_cycle_windings(cc, e)) {
      ++histogram[w.winding];
      ++r.counts["cycles"];
      if (w.winding != 1 && deviations++ < kMaxFailures)
        r.notes.push_back("cluster " + std::to_string(c) + ": cycle " + path_string(w.path) + " has winding number " +
                          std::to_string(w.winding));
    }
  }
  for (const auto& [k, v] : histogram) r.counts["winding_" + std::to_string(k)] = v;
  r.counts["deviations"] = static_cast<long long>(deviations);
  r.counts["cycles"] += 0;
  std::string summary = "no arrow closes a cycle";
  if (deviations > 0)
    summary = std::to_string(deviations) + " cycles with winding number other than 1";
  else if (r.counts["cycles"] > 0)
    summary = "every shortest-path cycle has winding number 1";
  r.notes.insert(r.notes.begin(), summary);
  return r;
}

using CheckFn = std::function<CheckResult(const TypeContext&, const VerifyOptions&)>;

const std::map<std::string, CheckFn>& check_table() {
  static const std::map<std::string, CheckFn> table{
      {"quivers", check_quivers},   {"relations", check_relations}, {"bb", check_bb},
      {"exchange", check_exchange}, {"denominators", check_denominators}, {"counts", check_counts},
      {"appendix", check_appendix}, {"winding", check_winding}};
  return table;
}

}  // namespace

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Finding: return "finding";
  }
  return "?";
}

bool VerificationReport::passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == CheckStatus::Fail; });
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{"quivers", "relations", "bb", "exchange",
                                              "denominators", "counts", "appendix", "winding"};
  return names;
}

bool is_large_type(const DynkinType& type) { return type.series() == Series::E && type.rank() >= 7; }

TypeContext::TypeContext(const DynkinType& type, std::size_t atlas_cap) : rs_(type) {
  const auto t0 = Clock::now();
  atlas_ = explore(rs_, atlas_cap);
  atlas_seconds_ = seconds_since(t0);
}

const ClusterCategory& TypeContext::category() const {
  if (!category_) category_ = std::make_unique<ClusterCategory>(rs_);
  return *category_;
}

VerificationReport verify(const DynkinType& type, const VerifyOptions& options) {
  std::vector<std::string> wanted;
  for (const auto& c : options.checks) {
    if (c == "all") {
      wanted = check_names();
      break;
    }
    if (!check_table().count(c)) throw InvalidArgument("unknown check '" + c + "'");
    if (std::find(wanted.begin(), wanted.end(), c) == wanted.end()) wanted.push_back(c);
  }
  if (options.checks.empty()) wanted = check_names();
  if (is_large_type(type) && !options.allow_large)
    throw CapExceeded(type.name() + " is beyond the default caps; pass --allow-large");

  const TypeContext ctx(type, options.atlas_cap);
  if (options.cluster && *options.cluster >= ctx.atlas().clusters().size())
    throw InvalidArgument("cluster id " + std::to_string(*options.cluster) + " out of range");
  VerificationReport report;
  report.type = type.name();
  report.clusters = ctx.atlas().clusters().size();
  report.variables = ctx.atlas().variables().size();
  report.atlas_seconds = ctx.atlas_seconds();
  // Keep the canonical order regardless of how the checks were listed.
  for (const auto& name : check_names()) {
    if (std::find(wanted.begin(), wanted.end(), name) == wanted.end()) continue;
    const auto t0 = Clock::now();
    CheckResult r;
    try {
      r = check_table().at(name)(ctx, options);
    } catch (const StructuralViolation& e) {
      r.name = name;
      fail(r, e.what());
    }
    r.seconds = seconds_since(t0);
    report.checks.push_back(std::move(r));
  }
  return report;
}

Quiver parse_arrows(int n, const std::string& text) {
  Quiver q(n);
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto gt = item.find('>');
    if (gt == std::string::npos) throw InvalidArgument("arrow '" + item + "' is not of the form a>b");
    int a = 0, b = 0;
    try {
      a = std::stoi(item.substr(0, gt));
      b = std::stoi(item.substr(gt + 1));
    } catch (const std::exception&) {
      throw InvalidArgument("arrow '" + item + "' is not of the form a>b");
    }
    if (a < 1 || a > n || b < 1 || b > n || a == b) throw InvalidArgument("arrow '" + item + "' out of range");
    q.set_arrows(a - 1, b - 1, q(a - 1, b - 1) + 1);
  }
  return q;
}

std::vector<PatternMatch> clusters_like(const ExchangeGraphAtlas& atlas, const Quiver& pattern) {
  std::vector<PatternMatch> out;
  for (std::size_t c = 0; c < atlas.clusters().size(); ++c)
    if (auto iso = find_isomorphism(pattern, atlas.clusters()[c].quiver)) out.push_back({c, *iso});
  return out;
}

std::vector<ExtPatternHit> objects_with_ext_pattern(const ClusterCategory& cc, const ExchangeGraphAtlas& atlas,
                                                    const PatternMatch& match, const std::vector<int>& ext_pattern) {
  const int n = atlas.rank();
  const TiltingObject t = tilting_from_cluster(cc, atlas, match.cluster);
  const auto re = reexpress(atlas, match.cluster);
  // Variables renumbered so that x_v sits at pattern vertex v.
  auto in_labels = [&](const LaurentPolynomial& p) {
    LaurentPolynomial out(n);
    for (const auto& [e, c] : p.terms()) {
      Exponents relabeled(static_cast<std::size_t>(n));
      for (int v = 0; v < n; ++v) relabeled[v] = e[match.slot_of_label[v]];
      out.add_term(relabeled, c);
    }
    return out;
  };
  std::vector<ExtPatternHit> hits;
  for (std::size_t vid = 0; vid < re.size(); ++vid) {
    const std::size_t obj = cc.object_of(atlas.roots()[vid]);
    std::vector<int> ext(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) ext[v] = static_cast<int>(cc.ext(t.summands[match.slot_of_label[v]], obj));
    if (ext != ext_pattern) continue;
    ExtPatternHit h;
    h.object = obj;
    const auto d = re[vid].denominator_vector();
    for (int v = 0; v < n; ++v) h.d_vector.push_back(d[match.slot_of_label[v]]);
    h.expression = in_labels(re[vid]).to_string();
    h.numerator_prime = re[vid].numerator_prime_to_variables();
    hits.push_back(std::move(h));
  }
  return hits;
}

std::string object_label(const ClusterCategory& cc, std::size_t object) {
  if (cc.is_shifted_projective(object)) return "P" + std::to_string(object + 1) + "[1]";
  return "M" + cc.object_root(object).to_string();
}

}  // namespace clustertilt
