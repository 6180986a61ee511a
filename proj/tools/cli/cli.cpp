#include "cli.hpp"

#include <pthread.h>
#include <signal.h>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "geoformal/canonical.hpp"
#include "geoformal/json_io.hpp"
#include "geoformal/metrics.hpp"
#include "geoformal/parser.hpp"
#include "geoformal/reward.hpp"
#include "geoformal/validator.hpp"
#include "reward_service.hpp"

namespace geoformal::cli {

namespace {

/// Raised inside a command to leave with a specific exit code.
struct Exit {
  int code;
  std::string message;
};

struct Options {
  std::string config_path;
  bool json = false;
  bool quiet = false;

  std::string input;
  std::string second_input;
  std::string domain;
  bool canon = false;
  bool strict = false;
  bool macro = false;
  bool strict_cyclic = false;
  std::string bind = "127.0.0.1:8080";
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Exit{kUsage, "cannot read " + path};
  std::stringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw Exit{kUsage, "error reading " + path};
  return buffer.str();
}

Domain pick_domain(const Options& opt, std::string_view text) {
  if (opt.domain.empty()) return infer_domain(text);
  auto domain = domain_from_string(opt.domain);
  if (!domain) throw Exit{kUsage, "unknown domain '" + opt.domain + "'"};
  return *domain;
}

RewardConfig load_effective_config(const Options& opt) {
  std::string path = opt.config_path;
  if (path.empty()) {
    if (const char* env = std::getenv("GEOFORMAL_CONFIG")) path = env;
  }
  if (path.empty()) return {};
  try {
    return load_config(path);
  } catch (const ConfigError& e) {
    throw Exit{kBadConfig, e.what()};
  }
}

std::string where(const std::string& path, SourceLoc loc) {
  if (loc.line == 0) return path;
  return path + ":" + std::to_string(loc.line) + ":" + std::to_string(loc.column);
}

void print_diagnostics(const Options& opt, const std::vector<Diagnostic>& diagnostics,
                       std::ostream& err) {
  if (opt.quiet) return;
  for (const auto& d : diagnostics) {
    err << where(opt.input, d.loc) << ": " << to_string(d.severity) << ": " << d.code << ": "
        << d.message;
    if (!d.expected.empty()) err << " (expected " << d.expected << ")";
    err << '\n';
  }
}

int cmd_parse(const Options& opt, std::ostream& out, std::ostream& err) {
  const std::string text = read_file(opt.input);
  const ParseResult parsed = parse_document(text, pick_domain(opt, text));
  if (opt.canon) {
    out << render(canonicalize(parsed.document));
  } else if (opt.json) {
    Json body{{"document", to_json(parsed.document)},
              {"diagnostics", to_json(parsed.diagnostics)}};
    out << body.dump(2) << '\n';
  } else {
    out << to_json(parsed.document).dump(2) << '\n';
  }
  print_diagnostics(opt, parsed.diagnostics, err);
  return parsed.clean() ? kOk : kFindings;
}

int cmd_check(const Options& opt, std::ostream& out, std::ostream&) {
  const std::string text = read_file(opt.input);
  const Domain domain = pick_domain(opt, text);
  const ParseResult parsed = parse_document(text, domain);
  const FormatReport format = check_format(parsed, domain);

  std::vector<LintFinding> findings = format_findings(format);
  for (auto part : {parse_findings(parsed), check_consistency(parsed.document),
                    lint_redundancy(parsed.document)}) {
    findings.insert(findings.end(), part.begin(), part.end());
  }
  std::stable_sort(findings.begin(), findings.end(), [](const auto& a, const auto& b) {
    return std::pair(a.loc.line, a.loc.column) < std::pair(b.loc.line, b.loc.column);
  });
  findings.erase(std::unique(findings.begin(), findings.end()), findings.end());

  bool failed = false;
  for (const auto& f : findings) {
    if (f.severity == Severity::error || opt.strict) failed = true;
  }

  if (opt.json) {
    Json body{{"domain", to_string(domain)},
              {"format", to_json(format)},
              {"findings", to_json(findings)},
              {"ok", !failed}};
    out << body.dump(2) << '\n';
  } else {
    for (const auto& f : findings) {
      if (opt.quiet && f.severity == Severity::warning) continue;
      out << where(opt.input, f.loc) << ": " << to_string(f.severity) << "[" << f.rule
          << "]: " << f.message << '\n';
    }
    if (!opt.quiet) out << (failed ? "FAILED" : "OK") << " (" << findings.size() << " findings)\n";
  }
  return failed ? kFindings : kOk;
}

struct Record {
  std::string id;
  std::string prediction;
  std::string reference;
  Domain domain;
  std::size_t line;
};

std::vector<Record> read_corpus(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Exit{kUsage, "cannot read " + path};
  std::vector<Record> records;
  std::set<std::string> ids;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    auto fail = [&](const std::string& why) -> Exit {
      return {kUsage, path + ":" + std::to_string(number) + ": " + why};
    };
    const Json j = Json::parse(line, nullptr, false);
    if (j.is_discarded()) throw fail("invalid JSON");
    if (!j.is_object()) throw fail("record must be a JSON object");
    for (const char* field : {"id", "prediction", "reference", "domain"}) {
      if (!j.contains(field) || !j[field].is_string())
        throw fail(std::string("field '") + field + "' must be a string");
    }
    auto domain = domain_from_string(j["domain"].get<std::string>());
    if (!domain) throw fail("domain must be \"plane\" or \"solid\"");
    std::string id = j["id"].get<std::string>();
    if (!ids.insert(id).second) throw fail("duplicate id '" + id + "'");
    records.push_back({std::move(id), j["prediction"].get<std::string>(),
                       j["reference"].get<std::string>(), *domain, number});
  }
  return records;
}

int cmd_score(const Options& opt, std::ostream& out, std::ostream& err) {
  RewardConfig config = load_effective_config(opt);
  CanonicalMode mode = config.mode;
  if (opt.strict_cyclic) mode.strict_cyclic = true;

  std::optional<Domain> filter;
  if (!opt.domain.empty()) {
    filter = domain_from_string(opt.domain);
    if (!filter) throw Exit{kUsage, "unknown domain '" + opt.domain + "'"};
  }

  std::vector<Record> records = read_corpus(opt.input);
  if (filter) {
    std::erase_if(records, [&](const Record& r) { return r.domain != *filter; });
  } else {
    for (const auto& r : records) {
      if (r.domain != records.front().domain)
        throw Exit{kMixedDomains, opt.input + ": corpus mixes plane and solid records; use --domain"};
    }
  }
  if (records.empty()) throw Exit{kUsage, opt.input + ": no records to score"};

  std::vector<ScoredPair> pairs;
  pairs.reserve(records.size());
  for (const auto& r : records) {
    if (!opt.quiet && !parse_document(r.reference, r.domain).clean())
      err << opt.input << ":" << r.line << ": warning: reference of '" << r.id
          << "' has parse diagnostics\n";
    pairs.push_back(prepare_pair(r.prediction, r.reference, r.domain, mode));
  }
  const CorpusReport report =
      score_corpus(pairs, opt.macro ? Aggregation::macro : Aggregation::micro);
  if (opt.json) {
    out << to_json(report).dump(2) << '\n';
  } else {
    out << render_table(report);
  }
  return kOk;
}

int cmd_reward(const Options& opt, std::ostream& out, std::ostream&) {
  const RewardConfig config = load_effective_config(opt);
  const std::string prediction = read_file(opt.input);
  const std::string reference = read_file(opt.second_input);
  const Domain domain = pick_domain(opt, reference);
  try {
    out << to_json(total_reward(prediction, reference, domain, config)).dump(2) << '\n';
  } catch (const BadReference& e) {
    std::string message = e.what();
    for (const auto& p : e.problems()) message += "\n  " + p;
    throw Exit{kBadReference, message};
  }
  return kOk;
}

int cmd_serve(const Options& opt, std::ostream& out, std::ostream& err) {
  const RewardConfig config = load_effective_config(opt);
  const auto colon = opt.bind.rfind(':');
  if (colon == std::string::npos) throw Exit{kUsage, "--bind expects <addr:port>"};
  const std::string host = opt.bind.substr(0, colon);
  int port = 0;
  try {
    port = std::stoi(opt.bind.substr(colon + 1));
  } catch (const std::exception&) {
    throw Exit{kUsage, "invalid port in '" + opt.bind + "'"};
  }
  if (port < 0 || port > 65535) throw Exit{kUsage, "invalid port in '" + opt.bind + "'"};

  // Termination signals are taken by a dedicated thread, so the server
  // threads created below inherit a mask that blocks them.
  sigset_t signals;
  sigemptyset(&signals);
  sigaddset(&signals, SIGINT);
  sigaddset(&signals, SIGTERM);
  sigset_t previous;
  pthread_sigmask(SIG_BLOCK, &signals, &previous);

  service::Server server(config);
  const int bound = server.bind(host, port);
  if (bound < 0) {
    pthread_sigmask(SIG_SETMASK, &previous, nullptr);
    throw Exit{kUsage, "cannot bind " + opt.bind};
  }
  if (!opt.quiet) {
    out << "listening on " << host << ":" << bound << " (config " << config_hash(config) << ")\n";
    out.flush();
  }

  std::thread waiter([&] {
    int received = 0;
    sigwait(&signals, &received);
    server.stop();
  });
  const bool ok = server.listen();
  // Wakes the waiter if the server ended on its own.
  pthread_kill(waiter.native_handle(), SIGTERM);
  waiter.join();
  pthread_sigmask(SIG_SETMASK, &previous, nullptr);
  if (!opt.quiet) err << "shut down\n";
  return ok ? kOk : kUsage;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Geometry formal-language toolkit", "geoformal"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--config", opt.config_path, "Reward config JSON (falls back to $GEOFORMAL_CONFIG)");
  app.add_flag("--json", opt.json, "Machine-readable JSON output");
  app.add_flag("--quiet", opt.quiet, "Suppress warnings and progress messages");

  auto* parse = app.add_subcommand("parse", "Parse a document and print its AST");
  parse->add_option("input", opt.input, "Formal-language file")->required();
  parse->add_flag("--canon", opt.canon, "Print the canonical rendering instead");
  parse->add_option("--domain", opt.domain, "plane or solid (default: inferred)");

  auto* check = app.add_subcommand("check", "Run format, consistency and redundancy checks");
  check->add_option("input", opt.input, "Formal-language file")->required();
  check->add_option("--domain", opt.domain, "plane or solid (default: inferred)");
  check->add_flag("--strict", opt.strict, "Treat warnings as errors");

  auto* score = app.add_subcommand("score", "Score a JSONL corpus of prediction/reference pairs");
  score->add_option("corpus", opt.input, "JSONL corpus")->required();
  score->add_flag("--macro", opt.macro, "Average per sample instead of pooling counts");
  score->add_flag("--strict-cyclic", opt.strict_cyclic, "Match planes and bases as cycles");
  score->add_option("--domain", opt.domain, "Only score records of this domain");

  auto* reward = app.add_subcommand("reward", "Compute the reward of one prediction");
  reward->add_option("prediction", opt.input, "Predicted document")->required();
  reward->add_option("reference", opt.second_input, "Reference document")->required();
  reward->add_option("--domain", opt.domain, "plane or solid (default: inferred from reference)");

  auto* serve = app.add_subcommand("serve", "Run the HTTP reward service");
  serve->add_option("--bind", opt.bind, "Listen address <addr:port>")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*parse) return cmd_parse(opt, out, err);
    if (*check) return cmd_check(opt, out, err);
    if (*score) return cmd_score(opt, out, err);
    if (*reward) return cmd_reward(opt, out, err);
    if (*serve) return cmd_serve(opt, out, err);
  } catch (const Exit& e) {
    err << "geoformal: " << e.message << '\n';
    return e.code;
  } catch (const ConfigError& e) {
    err << "geoformal: " << e.what() << '\n';
    return kBadConfig;
  } catch (const std::exception& e) {
    err << "geoformal: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace geoformal::cli
