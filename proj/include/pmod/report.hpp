#pragma once

#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "pmod/classify.hpp"
#include "pmod/counting.hpp"
#include "pmod/perm_group.hpp"
#include "pmod/sylow.hpp"

namespace pmod {

inline constexpr const char* kToolVersion = "0.1.0";

struct GroupSummary {
  std::string name;
  std::size_t degree = 0;
  BigInt order;
  bool transitive = false;
  /// Only meaningful for transitive groups.
  std::optional<bool> primitive;

  friend bool operator==(const GroupSummary&, const GroupSummary&) = default;
};

GroupSummary summarize(const std::string& name, const PermGroup& g);

/// The JSON document every CLI command prints. `payload` is deterministic
/// for fixed inputs and seed; wall-clock time lives outside it.
struct Report {
  std::string tool_version = kToolVersion;
  std::string command;
  nlohmann::json input;
  std::optional<GroupSummary> group;
  nlohmann::json payload;
  double elapsed_seconds = 0.0;

  friend bool operator==(const Report&, const Report&) = default;
};

void to_json(nlohmann::json& j, const GroupSummary& s);
void from_json(const nlohmann::json& j, GroupSummary& s);
void to_json(nlohmann::json& j, const Report& r);
void from_json(const nlohmann::json& j, Report& r);
void to_json(nlohmann::json& j, const ModerationReport& r);
void from_json(const nlohmann::json& j, ModerationReport& r);
void to_json(nlohmann::json& j, const CountingCertificate& c);
void from_json(const nlohmann::json& j, CountingCertificate& c);
void to_json(nlohmann::json& j, const ConcealedResult& c);

/// Witness subsets and orbits are emitted as sorted point arrays.
nlohmann::json point_set_json(const PointSet& s);
PointSet point_set_from_json(const nlohmann::json& j, std::size_t degree);

nlohmann::json sylow_json(const SylowData& d);
nlohmann::json histogram_json(const std::map<std::uint64_t, std::uint64_t>& hist);

}  // namespace pmod
