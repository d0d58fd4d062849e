#include "simplex_sections/report.hpp"

#include <algorithm>

namespace simplex_sections {

nlohmann::json to_json(const VolumeResult& r) {
  return nlohmann::json{{"method", std::string(to_string(r.method))},
                        {"value", r.value},
                        {"err", r.err},
                        {"unvalidated", r.unvalidated}};
}

bool ResultRecord::pass() const {
  return !failure && std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.second; });
}

nlohmann::json ResultRecord::to_json() const {
  nlohmann::json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  j["inputs"] = inputs;
  j["methods"] = nlohmann::json::array();
  for (const auto& m : methods) {
    auto e = simplex_sections::to_json(m.result);
    if (m.vertices) e["vertices"] = *m.vertices;
    j["methods"].push_back(std::move(e));
  }
  j["checks"] = checks;
  j["pass"] = pass();
  if (!data.is_null()) j["data"] = data;
  if (failure) j["failure"] = *failure;
  if (elapsed_ms) j["elapsed_ms"] = *elapsed_ms;
  if (timestamp) j["timestamp"] = *timestamp;
  return j;
}

}  // namespace simplex_sections
