#include <string>

#include "doctest.h"
#include "geoformal/canonical.hpp"
#include "geoformal/parser.hpp"

using namespace geoformal;

namespace {

Document parse_clean(std::string_view text, Domain domain = Domain::plane) {
  const ParseResult r = parse_document(text, domain);
  for (const auto& d : r.diagnostics) MESSAGE(d.code << " at " << d.loc.line << ": " << d.message);
  CHECK(r.clean());
  return r.document;
}

bool has_code(const ParseResult& r, std::string_view code) {
  for (const auto& d : r.diagnostics)
    if (d.code == code) return true;
  return false;
}

}  // namespace

TEST_CASE("line under the lines tag") {
  const Document doc = parse_clean("<lines>\nline A B C\n</lines>");
  REQUIRE(doc.lines.size() == 1);
  CHECK(join_labels(doc.lines[0].points, " ") == "A B C");
  CHECK_FALSE(doc.lines[0].name);
  CHECK(doc.lines[0].loc.line == 2);
}

TEST_CASE("named line keeps its name as an attribute") {
  const Document doc = parse_clean("line k lineson A B C");
  REQUIRE(doc.lines.size() == 1);
  CHECK(doc.lines[0].name == "k");
  CHECK(doc.lines[0].points.size() == 3);
}

TEST_CASE("pyramid groups") {
  const Document doc = parse_clean("solid Pyramid O-ABC", Domain::solid);
  REQUIRE(doc.solids.size() == 1);
  CHECK(doc.solids[0].kind == SolidKind::Pyramid);
  REQUIRE(doc.solids[0].groups.size() == 2);
  CHECK(join_labels(doc.solids[0].groups[0]) == "O");
  CHECK(join_labels(doc.solids[0].groups[1]) == "ABC");
}

TEST_CASE("both perpendicular spellings parse, keeping their feet") {
  const Document doc = parse_clean("AB \\perp CD on P\nAB \\perp to CD on X");
  REQUIRE(doc.semantics.size() == 2);
  const auto& a = std::get<Perp>(doc.semantics[0].clause);
  const auto& b = std::get<Perp>(doc.semantics[1].clause);
  CHECK(a.foot->str() == "P");
  CHECK(b.foot->str() == "X");
  CHECK(render_statement(doc.semantics[1]) == "AB \\perp CD on X");
}

TEST_CASE("every clause form") {
  const Document doc = parse_clean(
      "AB = 57\nAB = CD\nm \\angle ABC = 41\nm \\angle A_{1}BC = 2x + 5\n"
      "m \\widehat AB = 90\nAB \\perp CD\nAB \\parallel CD");
  REQUIRE(doc.semantics.size() == 7);
  CHECK(std::holds_alternative<Expr>(std::get<SegmentEq>(doc.semantics[0].clause).rhs));
  CHECK(std::holds_alternative<Segment>(std::get<SegmentEq>(doc.semantics[1].clause).rhs));
  CHECK(std::get<AngleMeasure>(doc.semantics[3].clause).value.key() == "2x + 5");
  CHECK(std::holds_alternative<ArcMeasure>(doc.semantics[4].clause));
  CHECK_FALSE(std::get<Perp>(doc.semantics[5].clause).foot);
  CHECK(std::holds_alternative<Parallel>(doc.semantics[6].clause));
}

TEST_CASE("point lists, point statements, None and headed sections") {
  const Document doc = parse_clean(
      "### **Points:**\n[A, B, C, A_{1}]\n**Lines:**\nline A B\n**Circles:**\nNone\n"
      "**Semantic Clauses:**\nAB = 3");
  CHECK(doc.points.size() == 4);
  CHECK(doc.lines.size() == 1);
  CHECK(doc.circles.empty());
  CHECK(doc.semantics.size() == 1);
  CHECK(doc.dialect == Dialect::headed);
}

TEST_CASE("all solid templates, including the Spheriod spelling") {
  const Document doc = parse_clean(
      "solid Cube ABCD-A_{1}B_{1}C_{1}D_{1}\nsolid Prism ABC-A_{1}B_{1}C_{1}\n"
      "solid Frustum ABC-A_{1}B_{1}C_{1}\nsolid Pyramid O-ABC\nsolid Spheriod O-ABCD\n"
      "solid Cylinder AD-BC\nsolid Cone P-OA\nsolid FrustumCone AD-BC\n"
      "solid Cylinder O_{1}-O_{2}\nsolid Spheroid O",
      Domain::solid);
  REQUIRE(doc.solids.size() == 10);
  CHECK(doc.solids[4].kind == SolidKind::Spheroid);
  CHECK(render_statement(doc.solids[4]) == "solid Spheroid O-ABCD");
  CHECK(doc.solids[9].groups.size() == 1);
}

TEST_CASE("degenerate statements produce diagnostics and are excluded") {
  const ParseResult r = parse_document("line A\nplane A B\nsolid Cube ABC-A_{1}B_{1}", Domain::solid);
  CHECK(has_code(r, "line-arity"));
  CHECK(has_code(r, "plane-arity"));
  CHECK(has_code(r, "solid-shape"));
  CHECK(r.document.lines.empty());
  CHECK(r.document.planes.empty());
  CHECK(r.document.solids.empty());
}

TEST_CASE("a bad statement does not stop the rest of the document") {
  const ParseResult r = parse_document("<lines>\nline A B\nline ??\nline C D\n</lines>", Domain::plane);
  CHECK(r.document.lines.size() == 2);
  REQUIRE(r.diagnostics.size() == 1);
  CHECK(r.diagnostics[0].loc.line == 3);
  CHECK(r.diagnostics[0].inside_tag);
}

TEST_CASE("parse errors carry line, column and what was expected") {
  const ParseResult r = parse_document("\\odot O on A B", Domain::plane);
  REQUIRE(r.diagnostics.size() == 1);
  CHECK(r.diagnostics[0].code == "parse-error");
  CHECK(r.diagnostics[0].loc.column == 9);
  CHECK(r.diagnostics[0].expected == "'lieson'");
}

TEST_CASE("a statement in the wrong section is reported") {
  const ParseResult r = parse_document("<lines>\nsolid Cube ABCD-EFGH\n</lines>", Domain::plane);
  CHECK(has_code(r, "section-mismatch"));
}

TEST_CASE("domain inference") {
  CHECK(infer_domain("<points>\npoint A\n</points>") == Domain::plane);
  CHECK(infer_domain("<solids>\n</solids>") == Domain::solid);
  CHECK(infer_domain("solid Cone P-OA") == Domain::solid);
}

TEST_CASE("zero parseable statements yields an empty document, never a throw") {
  const ParseResult r = parse_document("%%%\n<<<\n= = =\n", Domain::plane);
  CHECK(r.document.lines.empty());
  CHECK_FALSE(r.clean());
}
