#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "geoformal/reward.hpp"

namespace geoformal::service {

inline constexpr std::string_view kServiceVersion = "geoformal-reward/1";

struct HttpResult {
  int status = 200;
  std::string body;
};

/// Request handlers, independent of the HTTP transport.
///
///   POST /v1/reward  {"items": [{id, prediction, reference, domain}], "config_override": {...}}
///   POST /v1/score   same items, plus optional "aggregation": "micro" | "macro"
///   GET  /v1/health
///
/// Errors answer {"error", "detail", "item_errors": [{index, id, message}]}
/// with 400 for schema violations and 422 for invalid references.
class RewardService {
 public:
  explicit RewardService(RewardConfig defaults);

  HttpResult health() const;
  HttpResult reward(std::string_view body) const;
  HttpResult score(std::string_view body) const;

  const RewardConfig& defaults() const noexcept { return defaults_; }

 private:
  RewardConfig defaults_;
};

/// cpp-httplib front end. Requests are served from a thread pool; the
/// handlers share the immutable RewardService.
class Server {
 public:
  explicit Server(RewardConfig defaults);
  ~Server();
  Server(const Server&) = delete;
  Server& operator=(const Server&) = delete;

  /// Binds; port 0 picks a free port. Returns the bound port or -1.
  int bind(const std::string& host, int port);
  /// Blocks until stop(); in-flight requests finish first.
  bool listen();
  void stop();
  bool running() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace geoformal::service
