#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "simplex_sections/direction.hpp"

namespace simplex_sections {

inline constexpr const char* kSchemaVersion = "1.0";

struct MethodEntry {
  VolumeResult result;
  std::optional<int> vertices;  ///< oracle only
};

/// One CLI run. Serialized with sorted keys and no whitespace variation, so
/// equal inputs give byte-identical output once timing fields are dropped.
struct ResultRecord {
  std::string command;
  nlohmann::json inputs = nlohmann::json::object();
  std::vector<MethodEntry> methods;
  std::map<std::string, bool> checks;
  nlohmann::json data;  ///< command-specific payload
  std::optional<std::string> failure;
  std::optional<double> elapsed_ms;
  std::optional<std::string> timestamp;

  bool pass() const;
  nlohmann::json to_json() const;
};

nlohmann::json to_json(const VolumeResult& r);

}  // namespace simplex_sections
