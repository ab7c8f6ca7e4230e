#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "httplib.h"

#include "clustertilt/error.hpp"
#include "json_io.hpp"
#include "report.hpp"
#include "server.hpp"

using namespace clustertilt;
using namespace clustertilt::cli;

namespace {

constexpr int kUsageError = 2;

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw InvalidArgument("cannot open " + out_path);
  f << text;
}

std::vector<std::string> split_checks(const std::vector<std::string>& raw) {
  std::vector<std::string> out;
  for (const auto& item : raw) {
    std::stringstream ss(item);
    std::string part;
    while (std::getline(ss, part, ','))
      if (!part.empty()) out.push_back(part);
  }
  return out;
}

std::string exchange_graph_dot(const RootSystem& rs, const ExchangeGraphAtlas& atlas) {
  std::ostringstream os;
  os << "graph \"" << rs.type().name() << "\" {\n";
  for (std::size_t c = 0; c < atlas.clusters().size(); ++c) os << "  c" << c << ";\n";
  for (std::size_t c = 0; c < atlas.clusters().size(); ++c)
    for (std::size_t d : atlas.clusters()[c].neighbors)
      if (c < d) os << "  c" << c << " -- c" << d << ";\n";
  os << "}\n";
  return os.str();
}

struct Args {
  std::string type;
  std::vector<std::string> checks;
  std::optional<std::size_t> cluster;
  std::string format = "json";
  std::string out;
  std::string like;
  std::string what;
  std::string host = "127.0.0.1";
  int port = 8080;
  bool allow_large = false;
  bool convention_flip = false;
};

DynkinType admit(const Args& a) {
  const DynkinType t = DynkinType::parse(a.type);
  if (is_large_type(t) && !a.allow_large) throw CapExceeded(t.name() + " requires --allow-large");
  return t;
}

int run_verify(const Args& a) {
  VerifyOptions opts;
  opts.checks = split_checks(a.checks);
  opts.cluster = a.cluster;
  opts.allow_large = a.allow_large;
  opts.convention_flip = a.convention_flip;
  const VerificationReport report = verify(DynkinType::parse(a.type), opts);
  if (a.format == "json") {
    emit(a.out, to_json(report).dump(2) + "\n");
  } else {
    std::ostringstream os;
    print_report(os, report);
    emit(a.out, os.str());
  }
  return report.passed() ? 0 : 1;
}

int run_clusters(const Args& a) {
  const DynkinType t = admit(a);
  TypeContext ctx(t, kDefaultAtlasCap);
  const auto& atlas = ctx.atlas();
  if (a.like.empty()) {
    if (a.format == "json") {
      emit(a.out, atlas_json(ctx.roots(), atlas).dump(2) + "\n");
    } else {
      std::ostringstream os;
      for (std::size_t c = 0; c < atlas.clusters().size(); ++c) {
        os << c << ":";
        for (std::size_t v : atlas.clusters()[c].vars) os << ' ' << atlas.roots()[v].to_string();
        os << '\n';
      }
      emit(a.out, os.str());
    }
    return 0;
  }
  const auto matches = clusters_like(atlas, parse_arrows(t.rank(), a.like));
  if (a.format == "json") {
    Json hits = Json::array();
    for (const auto& m : matches) {
      Json labels = Json::array();
      for (int s : m.slot_of_label) labels.push_back(s + 1);
      hits.push_back({{"cluster", m.cluster}, {"slot_of_label", std::move(labels)}});
    }
    emit(a.out, Json{{"type", t.name()}, {"pattern", a.like}, {"matches", std::move(hits)}}.dump(2) + "\n");
  } else {
    std::ostringstream os;
    for (const auto& m : matches) {
      os << m.cluster << ": slots";
      for (int s : m.slot_of_label) os << ' ' << s + 1;
      os << '\n';
    }
    emit(a.out, os.str());
  }
  return 0;
}

int run_export(const Args& a) {
  const DynkinType t = admit(a);
  if (a.what == "homtable") {
    if (a.format != "json") throw InvalidArgument("homtable exports as json only");
    const RootSystem rs(t);
    const ClusterCategory cc(rs);
    emit(a.out, homtable_json(cc).dump(2) + "\n");
    return 0;
  }
  TypeContext ctx(t, kDefaultAtlasCap);
  if (a.what == "atlas") {
    emit(a.out, a.format == "dot" ? exchange_graph_dot(ctx.roots(), ctx.atlas())
                                  : atlas_json(ctx.roots(), ctx.atlas()).dump(2) + "\n");
    return 0;
  }
  const std::size_t c = a.cluster.value_or(0);
  if (c >= ctx.atlas().clusters().size()) throw InvalidArgument("cluster out of range");
  const Quiver& q = ctx.atlas().clusters()[c].quiver;
  emit(a.out, a.format == "dot" ? to_dot(q, t.name()) : to_json(q).dump(2) + "\n");
  return 0;
}

int run_serve(const Args& a) {
  ExplorerService service(a.allow_large);
  httplib::Server server;
  service.install(server);
  std::cerr << "listening on " << a.host << ':' << a.port << '\n';
  return server.listen(a.host, a.port) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cluster tilting verification toolkit"};
  app.require_subcommand(1);
  Args a;

  auto* verify_cmd = app.add_subcommand("verify", "Run theorem checks for a Dynkin type");
  verify_cmd->add_option("--type", a.type, "Dynkin type, e.g. A3, D5, E6")->required();
  verify_cmd->add_option("--checks", a.checks, "Comma-separated checks or 'all'");
  verify_cmd->add_option("--cluster", a.cluster, "Restrict per-cluster checks to one cluster id");
  verify_cmd->add_option("--format", a.format)->check(CLI::IsMember({"json", "text"}));
  verify_cmd->add_option("--out", a.out, "Output file (default stdout)");
  verify_cmd->add_flag("--allow-large", a.allow_large, "Permit E7 and E8");
  verify_cmd->add_flag("--convention-flip", a.convention_flip, "Compare Q_T with the opposite seed quiver");

  auto* clusters_cmd = app.add_subcommand("clusters", "Enumerate clusters");
  clusters_cmd->add_option("--type", a.type)->required();
  clusters_cmd->add_option("--like", a.like, "Only clusters whose quiver is isomorphic to e.g. 1>2,2>3");
  clusters_cmd->add_option("--format", a.format)->check(CLI::IsMember({"json", "text"}));
  clusters_cmd->add_option("--out", a.out);
  clusters_cmd->add_flag("--allow-large", a.allow_large);

  auto* export_cmd = app.add_subcommand("export", "Export atlas, quiver or Hom table");
  export_cmd->add_option("what", a.what)->required()->check(CLI::IsMember({"atlas", "quiver", "homtable"}));
  export_cmd->add_option("--type", a.type)->required();
  export_cmd->add_option("--format", a.format)->check(CLI::IsMember({"json", "dot"}));
  export_cmd->add_option("--cluster", a.cluster, "Cluster whose quiver is exported (default 0)");
  export_cmd->add_option("--out", a.out);
  export_cmd->add_flag("--allow-large", a.allow_large);

  auto* serve_cmd = app.add_subcommand("serve", "Serve the mutation explorer JSON API");
  serve_cmd->add_option("--port", a.port);
  serve_cmd->add_option("--host", a.host);
  serve_cmd->add_flag("--allow-large", a.allow_large);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (*verify_cmd) return run_verify(a);
    if (*clusters_cmd) return run_clusters(a);
    if (*export_cmd) return run_export(a);
    return run_serve(a);
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
