#include "reward_service.hpp"

#include <set>
#include <vector>

#include "httplib.h"

#include "geoformal/json_io.hpp"
#include "geoformal/metrics.hpp"

namespace geoformal::service {

namespace {

struct Item {
  std::string id;
  std::string prediction;
  std::string reference;
  Domain domain = Domain::plane;
};

struct RequestError {
  int status;
  std::string error;
  std::string detail;
  Json item_errors = Json::array();
};

HttpResult error_result(const RequestError& e) {
  Json body{{"error", e.error}, {"detail", e.detail}, {"item_errors", e.item_errors}};
  return {e.status, body.dump()};
}

Json item_error(std::size_t index, const std::string& id, const std::string& message) {
  return {{"index", index}, {"id", id}, {"message", message}};
}

Json parse_body(std::string_view body) {
  Json json = Json::parse(body, nullptr, false);
  if (json.is_discarded() || !json.is_object())
    throw RequestError{400, "invalid_request", "body must be a JSON object"};
  return json;
}

std::vector<Item> parse_items(const Json& json) {
  auto it = json.find("items");
  if (it == json.end() || !it->is_array() || it->empty())
    throw RequestError{400, "invalid_request", "'items' must be a non-empty array"};

  std::vector<Item> items;
  Json errors = Json::array();
  std::set<std::string> ids;
  for (std::size_t i = 0; i < it->size(); ++i) {
    const Json& raw = (*it)[i];
    const std::string id = raw.is_object() && raw.contains("id") && raw["id"].is_string()
                               ? raw["id"].get<std::string>()
                               : std::string();
    std::string problem;
    if (!raw.is_object()) {
      problem = "item must be an object";
    } else if (id.empty()) {
      problem = "'id' must be a non-empty string";
    } else if (!raw.contains("prediction") || !raw["prediction"].is_string()) {
      problem = "'prediction' must be a string";
    } else if (!raw.contains("reference") || !raw["reference"].is_string()) {
      problem = "'reference' must be a string";
    } else if (!raw.contains("domain") || !raw["domain"].is_string() ||
               !domain_from_string(raw["domain"].get<std::string>())) {
      problem = "'domain' must be \"plane\" or \"solid\"";
    } else if (!ids.insert(id).second) {
      problem = "duplicate id";
    }
    if (!problem.empty()) {
      errors.push_back(item_error(i, id, problem));
      continue;
    }
    items.push_back({id, raw["prediction"].get<std::string>(), raw["reference"].get<std::string>(),
                     *domain_from_string(raw["domain"].get<std::string>())});
  }
  if (!errors.empty())
    throw RequestError{400, "invalid_request", "one or more items violate the schema", errors};
  return items;
}

RewardConfig effective_config(const Json& json, const RewardConfig& defaults) {
  auto it = json.find("config_override");
  if (it == json.end() || it->is_null()) return defaults;
  try {
    return config_from_json(*it, defaults);
  } catch (const ConfigError& e) {
    throw RequestError{400, "invalid_config", e.what()};
  }
}

}  // namespace

RewardService::RewardService(RewardConfig defaults) : defaults_(std::move(defaults)) {
  validate(defaults_);
}

HttpResult RewardService::health() const {
  Json body{{"status", "ok"},
            {"version", kServiceVersion},
            {"config_hash", config_hash(defaults_)}};
  return {200, body.dump()};
}

HttpResult RewardService::reward(std::string_view body) const {
  try {
    const Json request = parse_body(body);
    const RewardConfig config = effective_config(request, defaults_);
    const std::vector<Item> items = parse_items(request);

    Json results = Json::array();
    Json errors = Json::array();
    for (std::size_t i = 0; i < items.size(); ++i) {
      const Item& item = items[i];
      try {
        const RewardBreakdown b =
            total_reward(item.prediction, item.reference, item.domain, config);
        Json precision = to_json(b)["per_category_precision"];
        results.push_back({{"id", item.id},
                           {"total", b.total},
                           {"r_fmt", b.r_fmt},
                           {"r_geo", b.r_geo},
                           {"per_category_precision", std::move(precision)}});
      } catch (const BadReference& e) {
        std::string message = e.what();
        for (const auto& p : e.problems()) message += "; " + p;
        errors.push_back(item_error(i, item.id, message));
      } catch (const ConfigError& e) {
        throw RequestError{400, "invalid_config", e.what()};
      }
    }
    if (!errors.empty())
      throw RequestError{422, "invalid_reference", "one or more references are invalid", errors};

    Json response{{"items", std::move(results)},
                  {"config_echo", to_json(config)},
                  {"service_version", kServiceVersion}};
    return {200, response.dump()};
  } catch (const RequestError& e) {
    return error_result(e);
  }
}

HttpResult RewardService::score(std::string_view body) const {
  try {
    const Json request = parse_body(body);
    const RewardConfig config = effective_config(request, defaults_);
    const std::vector<Item> items = parse_items(request);

    Aggregation aggregation = Aggregation::micro;
    if (auto it = request.find("aggregation"); it != request.end()) {
      if (*it == "macro") {
        aggregation = Aggregation::macro;
      } else if (*it != "micro") {
        throw RequestError{400, "invalid_request", "'aggregation' must be \"micro\" or \"macro\""};
      }
    }

    std::vector<ScoredPair> pairs;
    pairs.reserve(items.size());
    for (const Item& item : items) {
      if (item.domain != items.front().domain)
        throw RequestError{400, "mixed_domains", "all items of a score request share one domain"};
      pairs.push_back(prepare_pair(item.prediction, item.reference, item.domain, config.mode));
    }
    Json response = to_json(score_corpus(pairs, aggregation));
    response["service_version"] = kServiceVersion;
    return {200, response.dump()};
  } catch (const RequestError& e) {
    return error_result(e);
  }
}

struct Server::Impl {
  explicit Impl(RewardConfig defaults) : service(std::move(defaults)) {}

  RewardService service;
  httplib::Server http;
};

Server::Server(RewardConfig defaults) : impl_(std::make_unique<Impl>(std::move(defaults))) {
  auto reply = [](httplib::Response& res, const HttpResult& result) {
    res.status = result.status;
    res.set_content(result.body, "application/json");
  };
  Impl& impl = *impl_;
  impl.http.Get("/v1/health", [&impl, reply](const httplib::Request&, httplib::Response& res) {
    reply(res, impl.service.health());
  });
  impl.http.Post("/v1/reward", [&impl, reply](const httplib::Request& req, httplib::Response& res) {
    reply(res, impl.service.reward(req.body));
  });
  impl.http.Post("/v1/score", [&impl, reply](const httplib::Request& req, httplib::Response& res) {
    reply(res, impl.service.score(req.body));
  });
}

Server::~Server() { stop(); }

int Server::bind(const std::string& host, int port) {
  if (port == 0) return impl_->http.bind_to_any_port(host);
  return impl_->http.bind_to_port(host, port) ? port : -1;
}

bool Server::listen() { return impl_->http.listen_after_bind(); }

void Server::stop() { impl_->http.stop(); }

bool Server::running() const { return impl_->http.is_running(); }

}  // namespace geoformal::service
