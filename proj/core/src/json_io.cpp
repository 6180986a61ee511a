#include "geoformal/json_io.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "geoformal/canonical.hpp"

namespace geoformal {

namespace {

Json labels(const std::vector<PointLabel>& points) {
  Json out = Json::array();
  for (const auto& p : points) out.push_back(p.str());
  return out;
}

std::string seg(const Segment& s) { return s.first.str() + s.second.str(); }

Json clause_json(const SemanticClause& clause) {
  Json out;
  std::visit(
      [&out](const auto& c) {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, SegmentEq>) {
          out["type"] = "segment_eq";
          out["lhs"] = seg(c.lhs);
          if (const auto* s = std::get_if<Segment>(&c.rhs)) {
            out["rhs_segment"] = seg(*s);
          } else {
            out["value"] = std::get<Expr>(c.rhs).raw;
          }
        } else if constexpr (std::is_same_v<T, AngleMeasure>) {
          out["type"] = "angle";
          out["points"] = labels({c.p1, c.vertex, c.p3});
          out["value"] = c.value.raw;
        } else if constexpr (std::is_same_v<T, ArcMeasure>) {
          out["type"] = "arc";
          out["points"] = labels({c.p1, c.p2});
          out["value"] = c.value.raw;
        } else if constexpr (std::is_same_v<T, Perp>) {
          out["type"] = "perp";
          out["segments"] = {seg(c.first), seg(c.second)};
          if (c.foot) out["foot"] = c.foot->str();
        } else {
          out["type"] = "parallel";
          out["segments"] = {seg(c.first), seg(c.second)};
        }
      },
      clause.clause);
  out["text"] = render_statement(clause);
  return out;
}

Json loc_json(SourceLoc loc) { return {{"line", loc.line}, {"column", loc.column}}; }

[[noreturn]] void config_error(const std::string& what) { throw ConfigError("config: " + what); }

double weight(const Json& j, const std::string& key) {
  if (!j.is_number()) config_error("'" + key + "' must be a number");
  return j.get<double>();
}

bool flag(const Json& j, const std::string& key) {
  if (!j.is_boolean()) config_error("'" + key + "' must be a boolean");
  return j.get<bool>();
}

}  // namespace

Json to_json(const Document& doc) {
  Json out;
  out["domain"] = to_string(doc.domain);
  out["dialect"] = to_string(doc.dialect);
  out["points"] = labels({doc.points.begin(), doc.points.end()});
  out["lines"] = Json::array();
  for (const auto& l : doc.lines) {
    Json j{{"points", labels(l.points)}};
    if (l.name) j["name"] = *l.name;
    j["loc"] = loc_json(l.loc);
    out["lines"].push_back(std::move(j));
  }
  out["circles"] = Json::array();
  for (const auto& c : doc.circles)
    out["circles"].push_back(
        {{"center", c.center.str()}, {"on", labels(c.on_points)}, {"loc", loc_json(c.loc)}});
  out["semantics"] = Json::array();
  for (const auto& s : doc.semantics) {
    Json j = clause_json(s);
    j["loc"] = loc_json(s.loc);
    out["semantics"].push_back(std::move(j));
  }
  out["planes"] = Json::array();
  for (const auto& p : doc.planes)
    out["planes"].push_back({{"points", labels(p.points)}, {"loc", loc_json(p.loc)}});
  out["solids"] = Json::array();
  for (const auto& s : doc.solids) {
    Json groups = Json::array();
    for (const auto& g : s.groups) groups.push_back(labels(g));
    out["solids"].push_back(
        {{"kind", to_string(s.kind)}, {"groups", std::move(groups)}, {"loc", loc_json(s.loc)}});
  }
  return out;
}

Json to_json(const Diagnostic& d) {
  Json out{{"severity", to_string(d.severity)},
           {"line", d.loc.line},
           {"column", d.loc.column},
           {"code", d.code},
           {"message", d.message}};
  if (!d.expected.empty()) out["expected"] = d.expected;
  if (d.section) out["section"] = to_string(*d.section);
  return out;
}

Json to_json(const LintFinding& f) {
  return {{"rule", f.rule},
          {"severity", to_string(f.severity)},
          {"line", f.loc.line},
          {"column", f.loc.column},
          {"message", f.message}};
}

Json to_json(const FormatReport& report) {
  Json missing = Json::array();
  for (Category c : report.missing_tags) missing.push_back(to_string(c));
  return {{"is_compliant", report.is_compliant},
          {"missing_tags", std::move(missing)},
          {"malformed_statements", report.malformed_statements},
          {"diagnostics", to_json(report.diagnostics)}};
}

Json to_json(const CorpusReport& report) {
  Json out;
  out["domain"] = to_string(report.domain);
  out["samples"] = report.samples;
  out["aggregation"] = to_string(report.aggregation);
  for (const auto& [category, prf] : report.categories) {
    Json j{{"p", round1(prf.precision)}, {"r", round1(prf.recall)}, {"f1", round1(prf.f1)}};
    if (category == Category::solids && report.solids_accuracy)
      j["acc"] = round1(*report.solids_accuracy);
    out[std::string(to_string(category))] = std::move(j);
  }
  Json sa;
  for (const auto& [category, value] : report.sample_accuracy)
    sa[std::string(to_string(category))] = round1(value);
  out["sa"] = std::move(sa);
  out["ppr"] = round1(report.ppr);
  out["overall"] = round1(report.overall);
  return out;
}

Json to_json(const RewardBreakdown& b) {
  Json precision;
  for (const auto& [category, value] : b.per_category_precision)
    precision[std::string(to_string(category))] = value;
  return {{"domain", to_string(b.domain)},
          {"total", b.total},
          {"r_fmt", b.r_fmt},
          {"r_geo", b.r_geo},
          {"per_category_precision", std::move(precision)},
          {"config_echo", to_json(b.config)}};
}

Json to_json(const RewardConfig& cfg) {
  Json omega = Json::object();
  for (const auto& [category, w] : cfg.omega) omega[std::string(to_string(category))] = w;
  return {{"lambda1", cfg.lambda1},
          {"lambda2", cfg.lambda2},
          {"omega", std::move(omega)},
          {"mode",
           {{"strict_cyclic", cfg.mode.strict_cyclic}, {"ordered_arcs", cfg.mode.ordered_arcs}}},
          {"geo_metric", to_string(cfg.geo_metric)}};
}

RewardConfig config_from_json(const Json& json, RewardConfig base) {
  if (!json.is_object()) config_error("expected a JSON object");
  for (const auto& [key, value] : json.items()) {
    if (key == "lambda1") {
      base.lambda1 = weight(value, key);
    } else if (key == "lambda2") {
      base.lambda2 = weight(value, key);
    } else if (key == "omega") {
      if (!value.is_object()) config_error("'omega' must be an object");
      base.omega.clear();
      for (const auto& [name, w] : value.items()) {
        auto category = category_from_string(name);
        if (!category) config_error("unknown omega category '" + name + "'");
        base.omega[*category] = weight(w, "omega." + name);
      }
    } else if (key == "mode") {
      if (!value.is_object()) config_error("'mode' must be an object");
      for (const auto& [name, v] : value.items()) {
        if (name == "strict_cyclic") {
          base.mode.strict_cyclic = flag(v, "mode." + name);
        } else if (name == "ordered_arcs") {
          base.mode.ordered_arcs = flag(v, "mode." + name);
        } else {
          config_error("unknown mode flag '" + name + "'");
        }
      }
    } else if (key == "geo_metric") {
      if (value == "precision") {
        base.geo_metric = GeoMetric::precision;
      } else if (value == "f1") {
        base.geo_metric = GeoMetric::f1;
      } else {
        config_error("'geo_metric' must be \"precision\" or \"f1\"");
      }
    } else {
      config_error("unknown key '" + key + "'");
    }
  }
  validate(base);
  return base;
}

RewardConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) config_error("cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  Json json;
  try {
    json = Json::parse(buffer.str());
  } catch (const Json::exception& e) {
    config_error(path + ": " + e.what());
  }
  return config_from_json(json);
}

std::string config_hash(const RewardConfig& cfg) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : to_json(cfg).dump()) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace geoformal
