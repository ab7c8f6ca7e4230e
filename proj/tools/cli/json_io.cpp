#include "json_io.hpp"

namespace clustertilt::cli {

Json to_json(const Root& r) { return Json(r.coeffs()); }

Json to_json(const Quiver& q) {
  Json arrows = Json::array();
  for (auto [a, b] : q.arrows()) arrows.push_back({a + 1, b + 1, q(a, b)});
  return {{"n", q.size()}, {"b", q.matrix()}, {"arrows", std::move(arrows)}};
}

Json to_json(const LaurentPolynomial& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"coefficient", c.get_str()}, {"exponents", e}});
  return {{"expression", p.to_string()}, {"terms", std::move(terms)}, {"denominator", p.denominator_vector()}};
}

Json to_json(const CheckResult& r) {
  Json j{{"name", r.name}, {"status", to_string(r.status)}, {"seconds", r.seconds}, {"counts", r.counts},
         {"failures", r.failures}, {"notes", r.notes}};
  if (!r.table.empty()) j["table"] = {{"header", r.table_header}, {"rows", r.table}};
  return j;
}

Json to_json(const VerificationReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  return {{"type", r.type},
          {"clusters", r.clusters},
          {"variables", r.variables},
          {"atlas_seconds", r.atlas_seconds},
          {"passed", r.passed()},
          {"checks", std::move(checks)}};
}

Json atlas_json(const RootSystem& rs, const ExchangeGraphAtlas& atlas) {
  Json vars = Json::array();
  for (std::size_t v = 0; v < atlas.variables().size(); ++v) {
    Json j = to_json(atlas.variables()[v]);
    j["id"] = v;
    if (atlas.has_roots()) j["root"] = to_json(atlas.roots()[v]);
    vars.push_back(std::move(j));
  }
  Json clusters = Json::array();
  for (std::size_t c = 0; c < atlas.clusters().size(); ++c) {
    const auto& cl = atlas.clusters()[c];
    clusters.push_back({{"id", c}, {"variables", cl.vars}, {"quiver", to_json(cl.quiver)}, {"neighbors", cl.neighbors}});
  }
  return {{"type", rs.type().name()},
          {"rank", rs.rank()},
          {"variable_count", atlas.variables().size()},
          {"cluster_count", atlas.clusters().size()},
          {"edge_count", atlas.edge_count()},
          {"variables", std::move(vars)},
          {"clusters", std::move(clusters)}};
}

Json homtable_json(const ClusterCategory& cc) {
  Json objects = Json::array();
  for (std::size_t k = 0; k < cc.object_count(); ++k)
    objects.push_back({{"index", k}, {"label", object_label(cc, k)}, {"root", to_json(cc.object_root(k))}});
  Json entries = Json::array();
  for (std::size_t x = 0; x < cc.object_count(); ++x)
    for (std::size_t y = 0; y < cc.object_count(); ++y)
      entries.push_back({{"x", x}, {"y", y}, {"hom", cc.hom(x, y)}, {"ext", cc.ext(x, y)}});
  return {{"type", cc.roots().type().name()}, {"objects", std::move(objects)}, {"entries", std::move(entries)}};
}

Json end_presentation_json(const ClusterCategory& cc, const TiltingObject& t, const EndPresentation& e,
                           const Quiver& seed_quiver) {
  Json summands = Json::array();
  for (std::size_t s : t.summands) summands.push_back(object_label(cc, s));
  Json relations = Json::array();
  for (const auto& entry : relations_IC(e.quiver).entries) {
    if (entry.paths.empty()) continue;
    Json paths = Json::array();
    for (const auto& p : entry.paths) {
      std::vector<int> one_based;
      for (int v : p.vertices) one_based.push_back(v + 1);
      paths.push_back(one_based);
    }
    relations.push_back({{"arrow", {entry.from + 1, entry.to + 1}}, {"kind", to_string(entry.kind)}, {"paths", paths}});
  }
  return {{"summands", std::move(summands)},
          {"quiver", to_json(e.quiver)},
          {"matches_seed", matches_seed_quiver(e, seed_quiver, false)},
          {"relations", std::move(relations)}};
}

}  // namespace clustertilt::cli
