#include <string>

#include "doctest.h"
#include "geoformal/metrics.hpp"
#include "geoformal/parser.hpp"

using namespace geoformal;

namespace {

CanonicalDocument canon(std::string_view text, Domain domain = Domain::plane, CanonicalMode mode = {}) {
  return canonicalize(parse_document(text, domain).document, mode);
}

}  // namespace

TEST_CASE("category_prf conventions") {
  auto close = [](PRF p, double a, double b, double c) {
    CHECK(p.precision == doctest::Approx(a));
    CHECK(p.recall == doctest::Approx(b));
    CHECK(p.f1 == doctest::Approx(c));
  };
  close(category_prf(1, 2, 2), 50, 50, 50);
  close(category_prf(0, 0, 0), 100, 100, 100);
  close(category_prf(3, 3, 3), 100, 100, 100);
  close(category_prf(0, 0, 4), 0, 0, 0);
  close(category_prf(0, 2, 0), 0, 0, 0);
  close(category_prf(1, 4, 2), 25, 50, 100.0 / 3);
}

TEST_CASE("match_pair counts intersections") {
  const MatchResult m = match_pair(canon("line A B C\nline C D"), canon("line C B A\nline C E"));
  CHECK(m[Category::lines] == Counts{1, 2, 2});
  const MatchResult self = match_pair(canon("line A B\nAB = 3"), canon("line A B\nAB = 3"));
  for (Category c : kAllCategories) CHECK(self[c].exact());
}

TEST_CASE("pyramid bases match as sets by default") {
  const MatchResult m =
      match_pair(canon("solid Pyramid O-ABC", Domain::solid), canon("solid Pyramid O-ACB", Domain::solid));
  CHECK(m[Category::solids].tp == 1);
}

TEST_CASE("mode mismatch is an error") {
  CHECK_THROWS_AS(match_pair(canon("line A B"), canon("line A B", Domain::plane, {true, false})), ModeMismatch);
}

TEST_CASE("empty and mixed corpora are errors") {
  CHECK_THROWS_AS(score_corpus({}), EmptyCorpus);
  CHECK_THROWS_AS(score_corpus({prepare_pair("", "", Domain::plane), prepare_pair("", "", Domain::solid)}),
                  MixedDomains);
}

TEST_CASE("two perfect samples and one with a wrong line") {
  const std::string ref = "point A\npoint B\nline A B\n";
  const CorpusReport r = score_corpus({prepare_pair(ref, ref, Domain::plane),
                                       prepare_pair(ref, ref, Domain::plane),
                                       prepare_pair("point A\npoint B\nline A C\n", ref, Domain::plane)});
  CHECK(round1(r.ppr) == 66.7);
  CHECK(r.sample_accuracy.at(Category::lines) == doctest::Approx(200.0 / 3));
  CHECK(r.sample_accuracy.at(Category::points) == 100.0);
  CHECK(r.categories.at(Category::lines).precision == doctest::Approx(200.0 / 3));
}

TEST_CASE("overall is the mean of the category scores") {
  const CorpusReport plane = score_corpus({prepare_pair("line A B\nAB = 3", "line A B\nAB = 4", Domain::plane)});
  double sum = 0;
  for (const auto& [c, prf] : plane.categories) sum += prf.f1;
  CHECK(plane.overall == doctest::Approx(sum / 4));

  const CorpusReport solid = score_corpus(
      {prepare_pair("solid Cube ABCD-EFGH", "solid Prism ABCD-EFGH", Domain::solid)});
  REQUIRE(solid.solids_accuracy);
  CHECK(*solid.solids_accuracy == 0.0);
  CHECK(solid.categories.count(Category::semantics) == 0);
  const double expected = (solid.categories.at(Category::points).f1 + solid.categories.at(Category::lines).f1 +
                           solid.categories.at(Category::circles).f1 + solid.categories.at(Category::planes).f1 +
                           *solid.solids_accuracy) / 5;
  CHECK(solid.overall == doctest::Approx(expected));
}

TEST_CASE("macro aggregation averages per sample") {
  const std::string ref = "line A B\nline C D";
  const std::vector<ScoredPair> pairs = {prepare_pair("line A B", ref, Domain::plane),
                                         prepare_pair("line A B\nline C D\nline E F\nline G H", ref, Domain::plane)};
  const CorpusReport micro = score_corpus(pairs);
  const CorpusReport macro = score_corpus(pairs, Aggregation::macro);
  CHECK(micro.categories.at(Category::lines).precision == doctest::Approx(100.0 * 3 / 5));
  CHECK(macro.categories.at(Category::lines).precision == doctest::Approx((100.0 + 50.0) / 2));
}

TEST_CASE("an unparseable prediction scores as empty") {
  const std::string ref = "point A\nline A B";
  const CorpusReport r = score_corpus({prepare_pair("@@@ garbage", ref, Domain::plane)});
  CHECK(r.totals.at(Category::lines).pred == 0);
  CHECK(r.ppr == 0.0);
}

TEST_CASE("PPR never exceeds any sample accuracy") {
  const CorpusReport r = score_corpus({prepare_pair("line A B\nAB = 1", "line A B\nAB = 2", Domain::plane),
                                       prepare_pair("line A B", "line A B", Domain::plane)});
  for (const auto& [c, sa] : r.sample_accuracy) CHECK(r.ppr <= sa);
}

TEST_CASE("rounding is half away from zero at one decimal") {
  CHECK(round1(66.66666) == 66.7);
  CHECK(round1(12.25) == 12.3);
  CHECK(round1(100.0) == 100.0);
}

TEST_CASE("text table") {
  const std::string ref = "point A\nline A B";
  const std::string table = render_table(score_corpus({prepare_pair(ref, ref, Domain::plane)}));
  CHECK(table.find("lines        100.0   100.0   100.0   100.0") != std::string::npos);
  CHECK(table.find("PPR         100.0") != std::string::npos);
}
