#include "geoformal/reward.hpp"

#include <algorithm>
#include <cmath>

#include "geoformal/parser.hpp"
#include "geoformal/validator.hpp"

namespace geoformal {

namespace {

bool bad_weight(double w) { return !std::isfinite(w) || w < 0; }

std::size_t common(const std::set<std::string>& a, const std::set<std::string>& b) {
  std::size_t n = 0;
  for (const auto& key : a) n += b.count(key);
  return n;
}

}  // namespace

std::string_view to_string(GeoMetric metric) {
  return metric == GeoMetric::precision ? "precision" : "f1";
}

void validate(const RewardConfig& cfg) {
  if (bad_weight(cfg.lambda1) || bad_weight(cfg.lambda2))
    throw ConfigError("lambda1 and lambda2 must be finite and non-negative");
  if (cfg.lambda1 + cfg.lambda2 <= 0) throw ConfigError("lambda1 + lambda2 must be positive");
  for (const auto& [category, weight] : cfg.omega) {
    if (bad_weight(weight))
      throw ConfigError("omega weight for " + std::string(to_string(category)) +
                        " must be finite and non-negative");
  }
}

RewardConfig normalize(const RewardConfig& cfg, Domain domain) {
  validate(cfg);
  RewardConfig out = cfg;
  const double lambda_sum = cfg.lambda1 + cfg.lambda2;
  out.lambda1 = cfg.lambda1 / lambda_sum;
  out.lambda2 = cfg.lambda2 / lambda_sum;

  out.omega.clear();
  double omega_sum = 0;
  for (Category c : scored_categories(domain)) {
    double w = 1.0;
    if (!cfg.omega.empty()) {
      auto it = cfg.omega.find(c);
      w = it == cfg.omega.end() ? 0.0 : it->second;
    }
    out.omega[c] = w;
    omega_sum += w;
  }
  if (omega_sum <= 0)
    throw ConfigError("omega gives zero total weight to the " + std::string(to_string(domain)) +
                      " categories");
  for (auto& [category, w] : out.omega) w /= omega_sum;
  return out;
}

BadReference::BadReference(std::string message, std::vector<std::string> problems)
    : std::runtime_error(std::move(message)), problems_(std::move(problems)) {}

int format_reward(std::string_view text, Domain domain) {
  return check_format(text, domain).is_compliant ? 1 : 0;
}

double category_precision(const std::set<std::string>& pred, const std::set<std::string>& ref) {
  if (pred.empty()) return ref.empty() ? 1.0 : 0.0;
  return static_cast<double>(common(pred, ref)) / static_cast<double>(pred.size());
}

double category_f1(const std::set<std::string>& pred, const std::set<std::string>& ref) {
  if (pred.empty() && ref.empty()) return 1.0;
  return 2.0 * static_cast<double>(common(pred, ref)) /
         static_cast<double>(pred.size() + ref.size());
}

double geometric_reward(const CanonicalDocument& pred, const CanonicalDocument& ref,
                        const RewardConfig& cfg) {
  double sum = 0;
  for (const auto& [category, weight] : cfg.omega) {
    const double score = cfg.geo_metric == GeoMetric::precision
                             ? category_precision(pred[category], ref[category])
                             : category_f1(pred[category], ref[category]);
    sum += weight * score;
  }
  return std::clamp(sum, 0.0, 1.0);
}

RewardBreakdown total_reward(std::string_view text, std::string_view ref_text, Domain domain,
                             const RewardConfig& cfg) {
  const RewardConfig config = normalize(cfg, domain);

  const ParseResult ref = parse_document(ref_text, domain);
  std::vector<std::string> problems;
  for (const auto& d : ref.diagnostics)
    problems.push_back(std::to_string(d.loc.line) + ":" + std::to_string(d.loc.column) + ": " +
                       d.message);
  for (const auto& f : check_consistency(ref.document))
    if (f.severity == Severity::error)
      problems.push_back(std::to_string(f.loc.line) + ":" + std::to_string(f.loc.column) + ": " +
                         f.message);
  if (!problems.empty()) throw BadReference("reference is not a valid formal description", problems);

  const ParseResult pred = parse_document(text, domain);
  const CanonicalDocument pred_canon = canonicalize(pred.document, config.mode);
  const CanonicalDocument ref_canon = canonicalize(ref.document, config.mode);

  RewardBreakdown out;
  out.domain = domain;
  out.config = config;
  out.r_fmt = check_format(pred, domain).is_compliant ? 1 : 0;
  out.r_geo = geometric_reward(pred_canon, ref_canon, config);
  for (const auto& [category, weight] : config.omega) {
    out.per_category_precision[category] =
        config.geo_metric == GeoMetric::precision
            ? category_precision(pred_canon[category], ref_canon[category])
            : category_f1(pred_canon[category], ref_canon[category]);
  }
  out.total = std::clamp(config.lambda1 * out.r_fmt + config.lambda2 * out.r_geo, 0.0, 1.0);
  return out;
}

}  // namespace geoformal
