#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "doctest.h"
#include "geoformal/json_io.hpp"

namespace fs = std::filesystem;

namespace {

const std::string kData = GEOFORMAL_TEST_DATA;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome cli(std::vector<std::string> args) {
  args.insert(args.begin(), "geoformal");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = geoformal::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return kData + "/" + name; }

std::string read(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string scratch(const std::string& name, const std::string& content) {
  const fs::path dir = fs::temp_directory_path() / "geoformal-cli-test";
  fs::create_directories(dir);
  const fs::path path = dir / name;
  std::ofstream(path, std::ios::binary) << content;
  return path.string();
}

}  // namespace

TEST_CASE("parse --canon on the formal syntax rows") {
  std::ifstream rows(data("syntax_rows.txt"));
  std::string line;
  int n = 0;
  while (std::getline(rows, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto space = line.find(' ');
    const std::string path = scratch("row.txt", line.substr(space + 1) + "\n");
    const Outcome o = cli({"parse", path, "--canon", "--domain", line.substr(0, space)});
    CAPTURE(line);
    CHECK(o.code == 0);
    CHECK(o.err.empty());
    ++n;
  }
  CHECK(n == 18);
}

TEST_CASE("parse of empty and garbage files") {
  const Outcome empty = cli({"parse", scratch("empty.txt", "")});
  CHECK(empty.code == 0);
  CHECK(geoformal::Json::parse(empty.out)["lines"].empty());
  const Outcome garbage = cli({"parse", scratch("garbage.txt", std::string("\x01\xfe\x80 line", 8))});
  CHECK(garbage.code == 1);
  CHECK(garbage.err.find("lex-error") != std::string::npos);
  CHECK(cli({"parse", "/nonexistent/file.txt"}).code == 2);
}

TEST_CASE("parse --json wraps diagnostics") {
  const Outcome o = cli({"--json", "parse", scratch("bad.txt", "line A\n")});
  CHECK(o.code == 1);
  CHECK(geoformal::Json::parse(o.out)["diagnostics"][0]["code"] == "line-arity");
}

TEST_CASE("check exit codes") {
  CHECK(cli({"check", data("clean.txt")}).code == 0);
  const Outcome split = cli({"check", data("split_line.txt")});
  CHECK(split.code == 0);
  CHECK(split.out.find("warning[split-line]") != std::string::npos);
  CHECK(cli({"check", data("split_line.txt"), "--strict"}).code == 1);
  const Outcome missing = cli({"check", data("missing_tag.txt")});
  CHECK(missing.code == 1);
  CHECK(missing.out.find("error[missing-tag]") != std::string::npos);
  CHECK(cli({"check", "/nonexistent"}).code == 2);
  const Outcome json = cli({"check", data("split_line.txt"), "--json"});
  CHECK(geoformal::Json::parse(json.out)["findings"][0]["rule"] == "split-line");
}

TEST_CASE("score matches the golden reports byte for byte") {
  const Outcome plane = cli({"score", data("golden_corpus.jsonl"), "--json", "--domain", "plane"});
  CHECK(plane.code == 0);
  CHECK(plane.out == read(data("golden_plane.json")));
  const Outcome solid = cli({"score", data("golden_corpus.jsonl"), "--json", "--domain", "solid"});
  CHECK(solid.out == read(data("golden_solid.json")));
  CHECK(cli({"score", data("golden_corpus.jsonl")}).code == 3);
}

TEST_CASE("score output is stable across runs") {
  const auto a = cli({"score", data("golden_corpus.jsonl"), "--json", "--domain", "solid", "--strict-cyclic"});
  const auto b = cli({"score", data("golden_corpus.jsonl"), "--json", "--domain", "solid", "--strict-cyclic"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  // The golden solid corpus has a pyramid whose base is written in another cyclic order.
  CHECK(a.out != read(data("golden_solid.json")));
}

TEST_CASE("self-paired corpus scores 100 everywhere") {
  const std::string ref = "<points>\\npoint A\\npoint B\\n</points>\\n<lines>\\nline A B\\n</lines>";
  const std::string path = scratch("self.jsonl", R"({"id":"a","prediction":")" + ref + R"(","reference":")" +
                                                     ref + R"(","domain":"plane"})" "\n");
  const Outcome o = cli({"score", path, "--json"});
  REQUIRE(o.code == 0);
  const auto j = geoformal::Json::parse(o.out);
  for (const char* c : {"points", "lines", "circles", "semantics"}) {
    CHECK(j[c]["p"] == 100.0);
    CHECK(j[c]["r"] == 100.0);
    CHECK(j[c]["f1"] == 100.0);
    CHECK(j["sa"][c] == 100.0);
  }
  CHECK(j["ppr"] == 100.0);
  CHECK(j["overall"] == 100.0);
  const Outcome table = cli({"score", path, "--macro"});
  CHECK(table.out.find("aggregation: macro") != std::string::npos);
}

TEST_CASE("malformed corpora report the line number") {
  const std::string good = R"({"id":"a","prediction":"","reference":"","domain":"plane"})";
  Outcome o = cli({"score", scratch("bad1.jsonl", good + "\n{not json}\n")});
  CHECK(o.code == 2);
  CHECK(o.err.find("bad1.jsonl:2:") != std::string::npos);
  o = cli({"score", scratch("bad2.jsonl", good + "\n\n" + good + "\n")});
  CHECK(o.code == 2);
  CHECK(o.err.find(":3: duplicate id") != std::string::npos);
  o = cli({"score", scratch("bad3.jsonl", R"({"id":"a","prediction":"","reference":""})" "\n")});
  CHECK(o.code == 2);
  CHECK(cli({"score", scratch("empty.jsonl", "")}).code == 2);
  CHECK(cli({"score", data("golden_corpus.jsonl"), "--domain", "cubic"}).code == 2);
}

TEST_CASE("reward") {
  const Outcome same = cli({"reward", data("reward_ref.txt"), data("reward_ref.txt")});
  CHECK(same.code == 0);
  CHECK(geoformal::Json::parse(same.out)["total"] == 1.0);
  const Outcome pair = cli({"reward", data("reward_pred.txt"), data("reward_ref.txt")});
  CHECK(geoformal::Json::parse(pair.out)["total"].get<double>() == doctest::Approx(0.9).epsilon(1e-15));
  CHECK(cli({"reward", data("reward_pred.txt"), data("bad_config.json")}).code == 4);
  const Outcome bad = cli({"--config", data("bad_config.json"), "reward", data("reward_ref.txt"), data("reward_ref.txt")});
  CHECK(bad.code == 5);
  CHECK_FALSE(bad.err.empty());
  const Outcome custom = cli({"reward", data("reward_pred.txt"), data("reward_ref.txt"), "--config", data("lines_config.json")});
  CHECK(geoformal::Json::parse(custom.out)["total"] == 0.75);
  CHECK(cli({"reward", data("reward_pred.txt"), "/nonexistent"}).code == 2);
}

TEST_CASE("config falls back to the environment") {
  setenv("GEOFORMAL_CONFIG", data("bad_config.json").c_str(), 1);
  CHECK(cli({"reward", data("reward_ref.txt"), data("reward_ref.txt")}).code == 5);
  unsetenv("GEOFORMAL_CONFIG");
  CHECK(cli({"reward", data("reward_ref.txt"), data("reward_ref.txt")}).code == 0);
}

TEST_CASE("usage errors") {
  CHECK(cli({}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  CHECK(cli({"parse"}).code == 2);
  CHECK(cli({"--help"}).code == 0);
  CHECK(cli({"serve", "--bind", "nonsense"}).code == 2);
}
