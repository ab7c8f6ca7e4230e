#include "doctest.h"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json_io.hpp"

using namespace clustertilt;
using namespace clustertilt::cli;

#ifndef CLUSTERTILT_GOLDEN_DIR
#error "CLUSTERTILT_GOLDEN_DIR must be defined"
#endif

namespace {

void strip_timings(Json& j) {
  if (j.is_object()) {
    j.erase("seconds");
    j.erase("atlas_seconds");
    for (auto& [k, v] : j.items()) strip_timings(v);
  } else if (j.is_array()) {
    for (auto& v : j) strip_timings(v);
  }
}

// Set CLUSTERTILT_UPDATE_GOLDEN=1 to rewrite the files.
void compare_golden(const std::string& file, Json actual) {
  strip_timings(actual);
  const std::string path = std::string(CLUSTERTILT_GOLDEN_DIR) + "/" + file;
  if (std::getenv("CLUSTERTILT_UPDATE_GOLDEN")) {
    std::ofstream(path) << actual.dump(1) << '\n';
    return;
  }
  std::ifstream in(path);
  REQUIRE_MESSAGE(in.good(), "missing golden file " << path);
  const Json expected = Json::parse(in);
  CHECK_MESSAGE(expected == actual, "golden mismatch in " << file << ":\n" << Json::diff(expected, actual).dump(1));
}

}  // namespace

TEST_CASE("golden: D4 verification report") {
  VerifyOptions o;
  compare_golden("D4_report.json", to_json(verify(DynkinType(Series::D, 4), o)));
}

TEST_CASE("golden: D5 relation kinds of the example cluster") {
  RootSystem rs(DynkinType(Series::D, 5));
  ClusterCategory cc(rs);
  const auto atlas = explore(rs);
  const auto matches = clusters_like(atlas, parse_arrows(5, "5>1,1>2,1>4,4>5,4>3,3>1,2>3"));
  REQUIRE(!matches.empty());
  const std::size_t c = matches.front().cluster;
  const TiltingObject t = tilting_from_cluster(cc, atlas, c);
  const Json j = end_presentation_json(cc, t, quiver_QT(cc, t), atlas.clusters()[c].quiver);
  compare_golden("D5_example_presentation.json", {{"cluster", c}, {"presentation", j}});
}

TEST_CASE("golden: initial seeds") {
  Json seeds = Json::array();
  for (const char* name : {"A1", "A2", "A3", "A8", "D4", "D5", "D8", "E6", "E7", "E8"}) {
    RootSystem rs(DynkinType::parse(name));
    const Seed s = initial_seed(rs);
    Json vars = Json::array();
    for (const auto& v : s.vars) vars.push_back(v.to_string());
    seeds.push_back({{"type", name}, {"quiver", to_json(s.quiver)}, {"variables", vars}});
  }
  compare_golden("initial_seeds.json", seeds);
}
