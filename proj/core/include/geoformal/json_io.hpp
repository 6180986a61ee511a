#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "geoformal/document.hpp"
#include "geoformal/metrics.hpp"
#include "geoformal/parser.hpp"
#include "geoformal/reward.hpp"
#include "geoformal/validator.hpp"

namespace geoformal {

using Json = nlohmann::ordered_json;

Json to_json(const Document& doc);
Json to_json(const Diagnostic& diagnostic);
Json to_json(const LintFinding& finding);
Json to_json(const FormatReport& report);
/// Percentages rounded to one decimal; key order is fixed.
Json to_json(const CorpusReport& report);
/// Full double precision.
Json to_json(const RewardBreakdown& breakdown);
Json to_json(const RewardConfig& cfg);

template <typename T>
Json to_json(const std::vector<T>& items) {
  Json out = Json::array();
  for (const auto& item : items) out.push_back(to_json(item));
  return out;
}

/// Overlays the keys present in `json` onto `base`:
/// {"lambda1", "lambda2", "omega": {category: weight}, "mode": {"strict_cyclic",
/// "ordered_arcs"}, "geo_metric": "precision" | "f1"}. Unknown keys and
/// wrong types throw ConfigError; the result is validated.
RewardConfig config_from_json(const Json& json, RewardConfig base = {});

/// Reads and parses a config file. Throws ConfigError (also for I/O).
RewardConfig load_config(const std::string& path);

/// Stable 64-bit FNV-1a of the config's JSON text, as 16 hex digits.
std::string config_hash(const RewardConfig& cfg);

}  // namespace geoformal
