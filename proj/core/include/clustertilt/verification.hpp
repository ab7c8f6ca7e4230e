#pragma once

// Runs the theorem checks for one Dynkin type and collects a report.

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "clustertilt/cluster_algebra.hpp"
#include "clustertilt/repcat.hpp"
#include "clustertilt/tilting.hpp"

namespace clustertilt {

enum class CheckStatus { Pass, Fail, Finding };

const char* to_string(CheckStatus s);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::map<std::string, long long> counts;
  double seconds = 0;
  std::vector<std::string> failures;  // first few, with full data
  std::vector<std::string> notes;
  // Optional table (e.g. per-variable denominators for one cluster).
  std::vector<std::string> table_header;
  std::vector<std::vector<std::string>> table;
};

struct VerificationReport {
  std::string type;
  std::size_t clusters = 0;
  std::size_t variables = 0;
  double atlas_seconds = 0;
  std::vector<CheckResult> checks;

  // Findings never fail a report.
  bool passed() const;
};

// Check names in run order.
const std::vector<std::string>& check_names();

struct VerifyOptions {
  std::vector<std::string> checks;        // empty or {"all"}: every check
  std::optional<std::size_t> cluster;     // restrict per-cluster checks
  bool allow_large = false;               // E7 / E8
  bool convention_flip = false;           // compare Q_T with the reversed seed quiver
  std::size_t atlas_cap = kDefaultAtlasCap;
};

// Throws InvalidArgument on an unknown check or an out-of-range cluster,
// CapExceeded for E7 / E8 without allow_large.
VerificationReport verify(const DynkinType& type, const VerifyOptions& options);

// Types whose atlas is built only with allow_large.
bool is_large_type(const DynkinType& type);

// Shared state for the checks of one type.
class TypeContext {
 public:
  TypeContext(const DynkinType& type, std::size_t atlas_cap);

  const RootSystem& roots() const { return rs_; }
  const ExchangeGraphAtlas& atlas() const { return atlas_; }
  const ClusterCategory& category() const;
  double atlas_seconds() const { return atlas_seconds_; }

 private:
  RootSystem rs_;
  ExchangeGraphAtlas atlas_;
  double atlas_seconds_ = 0;
  mutable std::unique_ptr<ClusterCategory> category_;
};

// Parses "5>1,1>2" (1-based) into a quiver on n vertices.
Quiver parse_arrows(int n, const std::string& text);

// Clusters whose seed quiver is isomorphic to `pattern`; each hit carries
// slot_of_label[v] = slot playing vertex v of the pattern.
struct PatternMatch {
  std::size_t cluster = 0;
  std::vector<int> slot_of_label;
};
std::vector<PatternMatch> clusters_like(const ExchangeGraphAtlas& atlas, const Quiver& pattern);

// Within a matched cluster: objects whose Ext vector against the summands,
// read in pattern labels, equals `ext_pattern`; with the denominator of the
// corresponding variable in that cluster's variables.
struct ExtPatternHit {
  std::size_t object = 0;
  std::vector<int> d_vector;  // in pattern labels
  std::string expression;     // in pattern labels x1..xn
  bool numerator_prime = false;
};
std::vector<ExtPatternHit> objects_with_ext_pattern(const ClusterCategory& cc, const ExchangeGraphAtlas& atlas,
                                                    const PatternMatch& match, const std::vector<int>& ext_pattern);

std::string object_label(const ClusterCategory& cc, std::size_t object);

}  // namespace clustertilt
