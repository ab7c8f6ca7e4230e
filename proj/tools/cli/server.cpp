#include "server.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <numeric>
#include <sstream>

#include "httplib.h"

#include "clustertilt/error.hpp"

namespace clustertilt::cli {

namespace {

ServiceResponse error(int status, const std::string& message) { return {status, Json{{"error", message}}}; }

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw InternalError("SHA-256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 15];
  }
  return out;
}

const std::vector<DynkinType>& served_types() {
  static const std::vector<DynkinType> types = [] {
    std::vector<DynkinType> t;
    for (int n = 1; n <= 8; ++n) t.emplace_back(Series::A, n);
    for (int n = 4; n <= 8; ++n) t.emplace_back(Series::D, n);
    for (int n = 6; n <= 8; ++n) t.emplace_back(Series::E, n);
    return t;
  }();
  return types;
}

}  // namespace

Seed ExplorerService::canonical(const RootSystem& rs, const Seed& s) {
  const int n = s.rank();
  std::vector<std::size_t> key(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) key[i] = *rs.index_of(root_of(rs, s.vars[i]));
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return key[a] < key[b]; });
  std::vector<int> position(static_cast<std::size_t>(n));
  Seed out{s.quiver, std::vector<LaurentPolynomial>(static_cast<std::size_t>(n))};
  for (int p = 0; p < n; ++p) {
    position[order[p]] = p;
    out.vars[p] = s.vars[order[p]];
  }
  out.quiver = s.quiver.relabeled(position);
  return out;
}

std::string ExplorerService::seed_id(const RootSystem& rs, const Seed& c) {
  std::ostringstream os;
  os << rs.type().name() << '|';
  for (const auto& row : c.quiver.matrix()) {
    for (int v : row) os << v << ',';
    os << ';';
  }
  os << '|';
  for (const auto& v : c.vars) os << v.to_string() << ';';
  return sha256_hex(os.str()).substr(0, 16);
}

std::optional<DynkinType> ExplorerService::admissible_type(const std::string& name, std::string& err) const {
  try {
    const DynkinType t = DynkinType::parse(name);
    if (is_large_type(t) && !allow_large_) {
      err = t.name() + " requires the server to run with --allow-large";
      return std::nullopt;
    }
    return t;
  } catch (const Error& e) {
    err = e.what();
    return std::nullopt;
  }
}

ExplorerService::TypeData& ExplorerService::type_data(const DynkinType& t) {
  auto& slot = types_[t];
  if (!slot) slot = std::make_unique<TypeData>(t);
  return *slot;
}

Json ExplorerService::seed_view(TypeData& td, const std::string& id, const Seed& s) {
  Json vars = Json::array();
  std::vector<std::size_t> objects;
  for (int i = 0; i < s.rank(); ++i) {
    Json v = to_json(s.vars[i]);
    const Root r = root_of(td.rs, s.vars[i]);
    v["vertex"] = i + 1;
    v["root"] = to_json(r);
    vars.push_back(std::move(v));
    objects.push_back(*td.rs.index_of(r));
  }
  if (!td.category) td.category = std::make_unique<ClusterCategory>(td.rs);
  const TiltingObject t{objects, std::nullopt};
  const EndPresentation e = quiver_QT(*td.category, t);
  return {{"id", id},
          {"type", td.rs.type().name()},
          {"rank", s.rank()},
          {"quiver", to_json(s.quiver)},
          {"variables", std::move(vars)},
          {"qt", end_presentation_json(*td.category, t, e, s.quiver)}};
}

ServiceResponse ExplorerService::types() const {
  Json out = Json::array();
  for (const auto& t : served_types())
    out.push_back({{"name", t.name()},
                   {"rank", t.rank()},
                   {"coxeter_number", t.coxeter_number()},
                   {"positive_roots", t.expected_positive_roots()},
                   {"available", !is_large_type(t) || allow_large_}});
  return {200, Json{{"types", std::move(out)}}};
}

ServiceResponse ExplorerService::create_seed(const std::string& request_body) {
  const Json req = Json::parse(request_body, nullptr, false);
  if (req.is_discarded() || !req.is_object()) return error(400, "request body must be a JSON object");
  if (!req.contains("type") || !req["type"].is_string()) return error(400, "missing string field 'type'");
  std::string err;
  const auto type = admissible_type(req["type"].get<std::string>(), err);
  if (!type) return error(400, err);
  std::lock_guard lock(mu_);
  TypeData& td = type_data(*type);
  const Seed s = canonical(td.rs, initial_seed(td.rs));
  const std::string id = seed_id(td.rs, s);
  seeds_.emplace(id, Stored{*type, s});
  return {200, seed_view(td, id, s)};
}

ServiceResponse ExplorerService::mutate(const std::string& request_body) {
  const Json req = Json::parse(request_body, nullptr, false);
  if (req.is_discarded() || !req.is_object()) return error(400, "request body must be a JSON object");
  if (!req.contains("seed_id") || !req["seed_id"].is_string()) return error(400, "missing string field 'seed_id'");
  if (!req.contains("vertex") || !req["vertex"].is_number_integer()) return error(400, "missing integer field 'vertex'");
  std::lock_guard lock(mu_);
  auto it = seeds_.find(req["seed_id"].get<std::string>());
  if (it == seeds_.end()) return error(404, "unknown seed id");
  const Stored stored = it->second;
  const long vertex = req["vertex"].get<long>();
  if (vertex < 1 || vertex > stored.seed.rank())
    return error(400, "vertex must lie in 1.." + std::to_string(stored.seed.rank()));
  TypeData& td = type_data(stored.type);
  const Seed mutated = mutate_seed(stored.seed, static_cast<int>(vertex - 1));
  const Seed s = canonical(td.rs, mutated);
  const LaurentPolynomial& fresh = mutated.vars[static_cast<std::size_t>(vertex - 1)];
  const auto at = std::find(s.vars.begin(), s.vars.end(), fresh) - s.vars.begin();
  const std::string id = seed_id(td.rs, s);
  seeds_.emplace(id, Stored{stored.type, s});
  Json body = seed_view(td, id, s);
  body["previous_id"] = it->first;
  body["new_vertex"] = at + 1;
  return {200, std::move(body)};
}

ServiceResponse ExplorerService::atlas(const std::string& type_name) {
  std::string err;
  const auto type = admissible_type(type_name, err);
  if (!type) return error(400, err);
  std::lock_guard lock(mu_);
  TypeData& td = type_data(*type);
  if (!td.atlas) {
    try {
      td.atlas = std::make_unique<ExchangeGraphAtlas>(explore(td.rs));
    } catch (const CapExceeded& e) {
      return error(400, e.what());
    }
  }
  return {200, atlas_json(td.rs, *td.atlas)};
}

void ExplorerService::install(httplib::Server& server) {
  auto reply = [](httplib::Response& res, const ServiceResponse& r) {
    res.status = r.status;
    res.set_content(r.body.dump(), "application/json");
  };
  server.Get("/types", [this, reply](const httplib::Request&, httplib::Response& res) { reply(res, types()); });
  server.Post("/seed", [this, reply](const httplib::Request& req, httplib::Response& res) {
    reply(res, create_seed(req.body));
  });
  server.Post("/mutate", [this, reply](const httplib::Request& req, httplib::Response& res) {
    reply(res, mutate(req.body));
  });
  server.Get(R"(/atlas/([A-Za-z0-9]+))", [this, reply](const httplib::Request& req, httplib::Response& res) {
    reply(res, atlas(req.matches[1]));
  });
  server.set_exception_handler([reply](const httplib::Request&, httplib::Response& res, std::exception_ptr ep) {
    std::string what = "internal error";
    try {
      std::rethrow_exception(ep);
    } catch (const std::exception& e) {
      what = e.what();
    }
    reply(res, error(500, what));
  });
}

}  // namespace clustertilt::cli
