// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "clustertilt/cluster_algebra.hpp"
#include "clustertilt/quiver.hpp"
#include "clustertilt/verification.hpp"

using namespace clustertilt;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::vector<std::string> lines;

  void require(bool ok, const std::string& what) {
    if (!ok) pass = false;
    lines.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
  }
};

long long count(const CheckResult& r, const std::string& key) {
  auto it = r.counts.find(key);
  return it == r.counts.end() ? 0 : it->second;
}

VerificationReport run(const char* type, std::vector<std::string> checks) {
  VerifyOptions o;
  o.checks = std::move(checks);
  return verify(DynkinType::parse(type), o);
}

const CheckResult& check(const VerificationReport& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return c;
  throw std::runtime_error("missing check " + name);
}

std::string summary(const CheckResult& c) {
  std::ostringstream os;
  os << c.name << ' ' << to_string(c.status);
  for (const auto& [k, v] : c.counts) os << ' ' << k << '=' << v;
  for (std::size_t i = 0; i < c.failures.size() && i < 3; ++i) os << "\n        " << c.failures[i];
  return os.str();
}

void require_check(Outcome& out, const char* type, const VerificationReport& r, const std::string& name) {
  const CheckResult& c = check(r, name);
  out.require(c.status != CheckStatus::Fail, std::string(type) + ": " + summary(c));
}

Outcome atlas_counts() {
  Outcome out;
  struct Case {
    const char* type;
    std::size_t clusters, variables;
  };
  for (const Case& k : {Case{"A2", 5, 5}, Case{"A3", 14, 9}, Case{"A4", 42, 14}, Case{"D4", 50, 16}}) {
    const auto start = Clock::now();
    RootSystem rs(DynkinType::parse(k.type));
    const auto atlas = explore(rs);
    const double secs = seconds_since(start);
    const std::size_t nu_plus_n = rs.positive_roots().size() + static_cast<std::size_t>(rs.rank());
    std::ostringstream os;
    os << k.type << ": " << atlas.clusters().size() << " clusters, " << atlas.variables().size()
       << " variables (nu + n = " << nu_plus_n << "), " << secs << " s";
    out.require(atlas.clusters().size() == k.clusters && atlas.variables().size() == k.variables &&
                    atlas.variables().size() == nu_plus_n && secs < 60,
                os.str());
  }
  return out;
}

Outcome endomorphism_quivers() {
  Outcome out;
  for (const char* type : {"A3", "A4", "D4", "D5"}) {
    const auto start = Clock::now();
    const auto r = run(type, {"quivers"});
    const CheckResult& c = check(r, "quivers");
    const double secs = seconds_since(start);
    out.require(c.status == CheckStatus::Pass && count(c, "matched") == static_cast<long long>(r.clusters) &&
                    secs < 600,
                std::string(type) + ": " + summary(c) + ", " + std::to_string(secs) + " s");
  }
  return out;
}

Outcome summand_hom_bound() {
  Outcome out;
  for (const char* type : {"A3", "A4", "D4", "D5"}) {
    const auto report = run(type, {"quivers"});
    const CheckResult& c = check(report, "quivers");
    out.require(count(c, "hom_bound_violations") == 0 && count(c, "max_summand_hom") <= 1 &&
                    count(c, "summand_pairs") > 0,
                std::string(type) + ": pairs=" + std::to_string(count(c, "summand_pairs")) +
                    " max_hom=" + std::to_string(count(c, "max_summand_hom")) +
                    " violations=" + std::to_string(count(c, "hom_bound_violations")));
  }
  return out;
}

Outcome approximations() {
  Outcome out;
  for (const char* type : {"A3", "D4"}) {
    const auto r = run(type, {"bb"});
    const CheckResult& c = check(r, "bb");
    out.require(c.status == CheckStatus::Pass && count(c, "exchanges") > 0 && count(c, "dimension_identities") > 0,
                std::string(type) + ": " + summary(c));
  }
  return out;
}

Outcome shortest_path_relations() {
  Outcome out;
  for (const char* type : {"A3", "A4", "D4"}) require_check(out, type, run(type, {"relations"}), "relations");
  return out;
}

Outcome exchange_relations() {
  Outcome out;
  for (const char* type : {"A3", "D4"}) require_check(out, type, run(type, {"exchange"}), "exchange");
  return out;
}

Outcome denominators() {
  Outcome out;
  require_check(out, "A3", run("A3", {"denominators"}), "denominators");

  // The rank-5 example: three oriented triangles glued along vertices 1, 3, 4.
  const DynkinType d5 = DynkinType::parse("D5");
  TypeContext ctx(d5, kDefaultAtlasCap);
  const Quiver pattern = parse_arrows(5, "5>1,1>2,1>4,4>5,4>3,3>1,2>3");
  const Quiver dynkin_shape = pattern.mutate(0).mutate(1);
  std::size_t dynkin_edges = 0;
  for (int x = 0; x < 5; ++x)
    for (int y = x + 1; y < 5; ++y) dynkin_edges += dynkin_shape.adjacent(x, y) ? 1 : 0;
  out.require(dynkin_edges == 4 && dynkin_shape.is_connected() && dynkin_shape.neighbors(0).size() == 3,
              "D5: pattern mutated at 1 then 2 is a D5 tree (" + std::to_string(dynkin_edges) + " edges)");

  const auto matches = clusters_like(ctx.atlas(), pattern);
  out.require(!matches.empty(), "D5: " + std::to_string(matches.size()) + " clusters carry the example quiver");
  for (const auto& m : matches) {
    const auto hits = objects_with_ext_pattern(ctx.category(), ctx.atlas(), m, {1, 1, 1, 1, 0});
    std::ostringstream os;
    os << "D5 cluster " << m.cluster << ":";
    bool ok = hits.size() == 1;
    for (const auto& h : hits) {
      os << ' ' << object_label(ctx.category(), h.object) << " d=(";
      for (std::size_t i = 0; i < h.d_vector.size(); ++i) os << (i ? "," : "") << h.d_vector[i];
      os << ") " << h.expression;
      std::set<std::string> denominator;
      const auto slash = h.expression.find(")/(");
      if (slash != std::string::npos) {
        std::stringstream factors(h.expression.substr(slash + 3, h.expression.size() - slash - 4));
        for (std::string f; std::getline(factors, f, '*');) denominator.insert(f);
      }
      ok = ok && h.d_vector == std::vector<int>{1, 1, 1, 1, 0} && h.numerator_prime &&
           denominator == std::set<std::string>{"x1", "x2", "x3", "x4"};
    }
    out.require(ok, os.str());
    VerifyOptions o;
    o.checks = {"denominators"};
    o.cluster = m.cluster;
    const auto rep = verify(d5, o);
    out.require(rep.passed(), "D5 cluster " + std::to_string(m.cluster) + ": " + summary(check(rep, "denominators")));
  }
  return out;
}

Outcome type_a() {
  Outcome out;
  for (const char* type : {"A3", "A4"}) {
    const auto r = run(type, {"relations", "counts"});
    require_check(out, type, r, "relations");
    require_check(out, type, r, "counts");
  }
  return out;
}

Outcome appendix() {
  Outcome out;
  for (const char* type : {"A1", "A2", "A3", "A4", "A5", "A6", "D4", "D5", "D6", "E6"}) {
    const auto report = run(type, {"appendix"});
    const CheckResult& c = check(report, "appendix");
    out.require(c.status == CheckStatus::Pass && count(c, "max_shortest_paths") <= 2 &&
                    count(c, "unoriented_cycles") == 0,
                std::string(type) + ": " + summary(c));
  }
  return out;
}

Outcome winding() {
  Outcome out;
  for (const char* type : {"A4", "D4"}) {
    const auto report = run(type, {"winding"});
    const CheckResult& c = check(report, "winding");
    // Report-only: the line records the finding and passes either way.
    out.require(c.status == CheckStatus::Finding,
                std::string(type) + ": " + summary(c) + (c.notes.empty() ? "" : " (" + c.notes.front() + ")"));
  }
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"atlas counts A2 A3 A4 D4", atlas_counts},
      {"endomorphism quiver equals exchange quiver (A3 A4 D4 D5)", endomorphism_quivers},
      {"hom between tilting summands at most one", summand_hom_bound},
      {"minimal approximations and dimension identities (A3 D4)", approximations},
      {"shortest-path relations and vanishing long paths (A3 A4 D4)", shortest_path_relations},
      {"exchange relations from approximations (A3 D4)", exchange_relations},
      {"denominators equal ext dimensions (A3, D5 example)", denominators},
      {"type A: relations and module counts (A3 A4)", type_a},
      {"link and chordless cycle census (rank <= 6)", appendix},
      {"winding numbers of shortest-path cycles (finding, A4 D4)", winding},
  };
  bool all = true;
  for (const auto& [name, fn] : criteria) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    all = all && o.pass;
    std::printf("%s  %s  (%.2f s)\n", o.pass ? "PASS" : "FAIL", name.c_str(), seconds_since(start));
    for (const auto& line : o.lines) std::printf("      %s\n", line.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
