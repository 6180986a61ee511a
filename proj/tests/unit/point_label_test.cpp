#include <random>
#include <regex>
#include <string>
#include <vector>

#include "doctest.h"
#include "geoformal/point_label.hpp"

using geoformal::PointLabel;

namespace {

// Every way to cut `run` into pieces that each match the label pattern.
void segmentations(const std::string& run, std::size_t from, std::vector<std::string>& current,
                   std::vector<std::vector<std::string>>& out) {
  static const std::regex label(R"([A-Z]'*(_(\{[0-9]+\}|[0-9]+))?)");
  if (from == run.size()) {
    out.push_back(current);
    return;
  }
  for (std::size_t len = 1; from + len <= run.size(); ++len) {
    const std::string piece = run.substr(from, len);
    if (!std::regex_match(piece, label)) continue;
    current.push_back(piece);
    segmentations(run, from + len, current, out);
    current.pop_back();
  }
}

std::vector<std::string> rendered(const std::vector<PointLabel>& labels) {
  std::vector<std::string> out;
  for (const auto& l : labels) out.push_back(l.str());
  return out;
}

}  // namespace

TEST_CASE("labels render base, primes, then braced subscript") {
  CHECK(PointLabel{'A', 0, ""}.str() == "A");
  CHECK(PointLabel{'B', 2, ""}.str() == "B''");
  CHECK(PointLabel{'A', 1, "1"}.str() == "A'_{1}");
  CHECK(geoformal::parse_point_label("A_1") == geoformal::parse_point_label("A_{1}"));
}

TEST_CASE("label ordering is by base, primes, then numeric subscript") {
  using geoformal::parse_point_label;
  CHECK(parse_point_label("A") < parse_point_label("A'"));
  CHECK(parse_point_label("A_{1}") < parse_point_label("A'"));
  CHECK(parse_point_label("A_{2}") < parse_point_label("A_{10}"));
  CHECK(parse_point_label("Z") > parse_point_label("A_{99}"));
}

TEST_CASE("split_point_run on plain and subscripted runs") {
  CHECK(rendered(geoformal::split_point_run("ABC")) == std::vector<std::string>{"A", "B", "C"});
  CHECK(rendered(geoformal::split_point_run("A_{1}B_{1}C_{1}")) ==
        std::vector<std::string>{"A_{1}", "B_{1}", "C_{1}"});
  CHECK(rendered(geoformal::split_point_run("A_1B")) == std::vector<std::string>{"A_{1}", "B"});
}

TEST_CASE("A'B_{12}C has exactly one segmentation and the splitter finds it") {
  std::vector<std::vector<std::string>> all;
  std::vector<std::string> current;
  segmentations("A'B_{12}C", 0, current, all);
  REQUIRE(all.size() == 1);
  CHECK(all.front() == std::vector<std::string>{"A'", "B_{12}", "C"});
  CHECK(rendered(geoformal::split_point_run("A'B_{12}C")) == all.front());
}

TEST_CASE("malformed runs report the offending offset") {
  for (const char* bad : {"", "a", "AB_", "A_{", "A_{}", "A_{1", "1A", "A}"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(geoformal::split_point_run(bad), geoformal::MalformedPointRun);
    std::vector<PointLabel> out;
    CHECK_FALSE(geoformal::try_split_point_run(bad, out));
  }
  try {
    geoformal::split_point_run("AB_x");
    FAIL("expected a throw");
  } catch (const geoformal::MalformedPointRun& e) {
    CHECK(e.offset() == 1);
    CHECK(e.run() == "AB_x");
  }
}

TEST_CASE("split is a left inverse of concatenation") {
  std::mt19937 rng(7);
  const std::vector<PointLabel> pool = {{'A', 0, ""},  {'B', 1, ""},   {'C', 0, "1"},
                                        {'D', 2, "23"}, {'O', 0, "0"}, {'Z', 0, ""}};
  for (int i = 0; i < 2000; ++i) {
    std::vector<PointLabel> labels(1 + rng() % 6);
    for (auto& l : labels) l = pool[rng() % pool.size()];
    const std::string run = geoformal::join_labels(labels);
    CAPTURE(run);
    CHECK(geoformal::split_point_run(run) == labels);
  }
}
