#pragma once

// JSON service behind the mutation explorer: a content-addressed,
// insert-only seed store plus per-type caches.

#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "json_io.hpp"

namespace httplib {
class Server;
}

namespace clustertilt::cli {

struct ServiceResponse {
  int status = 200;
  Json body;
};

class ExplorerService {
 public:
  explicit ExplorerService(bool allow_large = false) : allow_large_(allow_large) {}

  ServiceResponse types() const;
  ServiceResponse create_seed(const std::string& request_body);
  ServiceResponse mutate(const std::string& request_body);
  ServiceResponse atlas(const std::string& type_name);

  void install(httplib::Server& server);

  // Slots sorted by almost positive root; the id does not depend on the
  // slot order a seed arrived in.
  static Seed canonical(const RootSystem& rs, const Seed& s);
  static std::string seed_id(const RootSystem& rs, const Seed& canonical_seed);

 private:
  struct TypeData {
    explicit TypeData(const DynkinType& t) : rs(t) {}
    RootSystem rs;
    std::unique_ptr<ClusterCategory> category;
    std::unique_ptr<ExchangeGraphAtlas> atlas;
  };
  struct Stored {
    DynkinType type;
    Seed seed;
  };

  // Caller holds mu_.
  TypeData& type_data(const DynkinType& t);
  Json seed_view(TypeData& td, const std::string& id, const Seed& s);
  std::optional<DynkinType> admissible_type(const std::string& name, std::string& error) const;

  bool allow_large_;
  std::mutex mu_;
  std::map<DynkinType, std::unique_ptr<TypeData>> types_;
  std::map<std::string, Stored> seeds_;
};

}  // namespace clustertilt::cli
