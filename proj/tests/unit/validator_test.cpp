#include <algorithm>
#include <string>

#include "doctest.h"
#include "geoformal/canonical.hpp"
#include "geoformal/validator.hpp"

using namespace geoformal;

namespace {

std::vector<std::string> rules(const std::vector<LintFinding>& findings) {
  std::vector<std::string> out;
  for (const auto& f : findings) out.push_back(f.rule);
  return out;
}

bool has(const std::vector<LintFinding>& findings, std::string_view rule) {
  return std::any_of(findings.begin(), findings.end(), [&](const auto& f) { return f.rule == rule; });
}

Document doc_of(std::string_view text, Domain domain = Domain::plane) {
  return parse_document(text, domain).document;
}

const char* const kClean =
    "<points>\npoint A\npoint B\npoint C\npoint D\n</points>\n<lines>\nline A B C\nline B D\n"
    "</lines>\n<circles>\n</circles>\n<semantics>\nAC \\perp BD on B\nAB = 3\n</semantics>\n";

}  // namespace

TEST_CASE("rule registry") {
  CHECK(lint_rules().size() == 14);
  for (const auto& rule : lint_rules()) CHECK(find_lint_rule(rule.id) == &rule);
  CHECK(find_lint_rule("nope") == nullptr);
}

TEST_CASE("rendered documents are compliant") {
  CHECK(check_format(kClean, Domain::plane).is_compliant);
  const Document d = doc_of(kClean);
  CHECK(check_format(render(d), Domain::plane).is_compliant);
  Document solid = d;
  solid.domain = Domain::solid;
  CHECK(check_format(render(solid), Domain::solid).is_compliant);
}

TEST_CASE("missing closing tag") {
  const std::string text =
      "<points>\n</points>\n<lines>\n</lines>\n<circles>\n</circles>\n<semantics>\n</semantics>\n"
      "<planes>\n</planes>\n<solids>\nsolid Cone P-OA\n";
  const FormatReport r = check_format(text, Domain::solid);
  CHECK_FALSE(r.is_compliant);
  CHECK(r.missing_tags == std::vector<Category>{Category::solids});
}

TEST_CASE("statement of the wrong type inside a tag") {
  const FormatReport r = check_format(
      "<points>\n</points>\n<lines>\nsolid Cube ABCD-EFGH\n</lines>\n<circles>\n</circles>\n"
      "<semantics>\n</semantics>\n",
      Domain::plane);
  CHECK(r.malformed_statements >= 1);
  CHECK_FALSE(r.is_compliant);
}

TEST_CASE("nesting, duplicate and unknown tags are malformed") {
  const std::string base = "<points>\n</points>\n<lines>\n</lines>\n<circles>\n</circles>\n";
  CHECK_FALSE(check_format(base + "<semantics>\n<lines>\n</lines>\n</semantics>\n", Domain::plane).is_compliant);
  CHECK_FALSE(check_format(base + "<semantics>\n</semantics>\n<lines>\n</lines>\n", Domain::plane).is_compliant);
  CHECK_FALSE(check_format(base + "<semantics>\n</semantics>\n<angles>\n</angles>\n", Domain::plane).is_compliant);
}

TEST_CASE("section order is a warning only") {
  const FormatReport r = check_format(
      "<lines>\n</lines>\n<points>\n</points>\n<circles>\n</circles>\n<semantics>\n</semantics>\n",
      Domain::plane);
  CHECK(r.is_compliant);
  CHECK(has(format_findings(r), "section-order"));
}

TEST_CASE("headed text does not satisfy the tag requirement") {
  const FormatReport r =
      check_format("**Points:**\n[A]\n**Lines:**\n**Circles:**\n**Semantic Clauses:**\n", Domain::plane);
  CHECK_FALSE(r.is_compliant);
  CHECK(r.missing_tags.size() == 4);
}

TEST_CASE("clean fixture has no consistency or redundancy findings") {
  const Document d = doc_of(kClean);
  CHECK(check_consistency(d).empty());
  CHECK(lint_redundancy(d).empty());
}

TEST_CASE("undeclared points match the set difference of referenced and declared") {
  const Document d = doc_of("point A\nline A B\n\\odot O lieson A C\nAB \\perp CD on X");
  std::set<std::string> reported;
  for (const auto& f : check_consistency(d))
    if (f.rule == "undeclared-point") reported.insert(f.message.substr(6, f.message.find(' ', 6) - 6));
  CHECK(reported == std::set<std::string>{"B", "C", "D", "O", "X"});
}

TEST_CASE("arity and duplicates") {
  CHECK(has(check_consistency(Document{Domain::solid, Dialect::tagged, {}, {},
                                       {}, {Plane{split_point_run("AB"), {3, 1}}}, {}, {}}),
            "plane-arity"));
  CHECK(has(check_consistency(doc_of("point A\npoint B\nline A B\nline B A")), "duplicate-primitive"));
}

TEST_CASE("perpendicular foot must lie on declared lines") {
  const Document d = doc_of(
      "point A\npoint B\npoint C\npoint D\npoint X\nline A B\nline C X D\nAB \\perp CD on X");
  CHECK(rules(check_consistency(d)) == std::vector<std::string>{"perp-foot-off-line"});
}

TEST_CASE("split line warnings") {
  const Document d = doc_of("line A B C\nline A B");
  CHECK(rules(lint_redundancy(d)) == std::vector<std::string>{"split-line"});
  CHECK(lint_redundancy(doc_of("line A B C\nline A C")).empty());
  CHECK(rules(lint_redundancy(doc_of("line A B C\nline C B"))) == std::vector<std::string>{"split-line"});
}

TEST_CASE("non-maximal plane") {
  const Document d = doc_of("point E\nplane A B E C\nplane A B C", Domain::solid);
  CHECK(rules(lint_redundancy(d)) == std::vector<std::string>{"non-maximal-plane"});
}

TEST_CASE("right angle duplicating a perpendicular clause") {
  const Document d = doc_of("line A B\nline C B D\nAB \\perp CD on B\nm \\angle ABD = 90");
  CHECK(rules(lint_redundancy(d)) == std::vector<std::string>{"right-angle-duplication"});
  CHECK(lint_redundancy(doc_of("line A B\nline C B D\nAB \\perp CD on B\nm \\angle ABD = 45")).empty());
}

TEST_CASE("collinear perpendicular clauses") {
  const Document d = doc_of("line A B C\nline D E\nAB \\perp DE\nBC \\perp DE");
  CHECK(rules(lint_redundancy(d)) == std::vector<std::string>{"collinear-perp"});
  CHECK(lint_redundancy(doc_of("line A B C\nline D E\nAC \\perp DE on B")).empty());
}

TEST_CASE("lints are stable under canonical symmetries") {
  const auto a = rules(lint_redundancy(doc_of("line A B C\nline D E\nAB \\perp DE\nBC \\perp DE")));
  const auto b = rules(lint_redundancy(doc_of("line C B A\nline E D\nDE \\perp BA\nED \\perp CB")));
  CHECK(a == b);
}
