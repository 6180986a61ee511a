#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "geoformal/canonical.hpp"
#include "geoformal/document.hpp"

namespace geoformal {

/// Per-category score fed into the geometric reward. `precision` is the
/// weighted-precision reward; `f1` is an opt-in variant that also
/// penalizes missing primitives.
enum class GeoMetric { precision, f1 };
std::string_view to_string(GeoMetric metric);

struct RewardConfig {
  double lambda1 = 0.2;  // format weight
  double lambda2 = 0.8;  // geometry weight
  /// Category weights. Empty means uniform over the domain's scored
  /// categories; otherwise unlisted scored categories weigh 0.
  std::map<Category, double> omega;
  CanonicalMode mode;
  GeoMetric geo_metric = GeoMetric::precision;

  bool operator==(const RewardConfig&) const = default;
};

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Rejects negative or non-finite weights and all-zero weight groups.
void validate(const RewardConfig& cfg);

/// lambda1 + lambda2 = 1 and omega restricted to the domain's scored
/// categories summing to 1. Throws ConfigError.
RewardConfig normalize(const RewardConfig& cfg, Domain domain);

class BadReference : public std::runtime_error {
 public:
  BadReference(std::string message, std::vector<std::string> problems);
  const std::vector<std::string>& problems() const noexcept { return problems_; }

 private:
  std::vector<std::string> problems_;
};

struct RewardBreakdown {
  Domain domain = Domain::plane;
  int r_fmt = 0;
  double r_geo = 0;
  double total = 0;
  std::map<Category, double> per_category_precision;  // fractions in [0, 1]
  RewardConfig config;  // normalized config actually applied
};

/// 1 iff the text passes check_format for the domain.
int format_reward(std::string_view text, Domain domain);

/// Per-category precision |P ∩ P_ref| / |P|, with 1 when both sides are
/// empty and 0 when only the prediction is empty.
double category_precision(const std::set<std::string>& pred, const std::set<std::string>& ref);
double category_f1(const std::set<std::string>& pred, const std::set<std::string>& ref);

/// Sum over omega of weight * per-category score. `cfg` must be normalized.
double geometric_reward(const CanonicalDocument& pred, const CanonicalDocument& ref,
                        const RewardConfig& cfg);

/// Parses both texts and combines lambda1 * format + lambda2 * geometry.
/// Unparseable prediction statements simply contribute nothing. Throws
/// BadReference when the reference has parse diagnostics or consistency
/// errors, ConfigError for an invalid config.
RewardBreakdown total_reward(std::string_view text, std::string_view ref_text, Domain domain,
                             const RewardConfig& cfg);

}  // namespace geoformal
