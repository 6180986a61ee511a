#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "geoformal/document.hpp"
#include "geoformal/parser.hpp"

namespace geoformal {

/// Tag-level compliance of a tagged formal description.
struct FormatReport {
  bool is_compliant = false;
  std::vector<Category> missing_tags;
  /// Statements that fail to parse as their section's type, plus structural
  /// tag errors (duplicate, unclosed, misnested or unknown tags).
  std::size_t malformed_statements = 0;
  std::vector<Diagnostic> diagnostics;
};

/// Compliant iff every required tag of the domain appears exactly once as
/// a properly closed, non-nested pair and every non-blank line inside a tag
/// parses as a statement of that section. Section order only warns.
FormatReport check_format(std::string_view text, Domain domain);
FormatReport check_format(const ParseResult& parsed, Domain domain);

struct LintRule {
  std::string_view id;
  Severity severity;
  std::string_view summary;
};

/// The fixed registry every finding draws its rule from.
std::span<const LintRule> lint_rules();
const LintRule* find_lint_rule(std::string_view id);

struct LintFinding {
  std::string rule;
  Severity severity = Severity::error;
  SourceLoc loc;
  std::string subject;  // canonical text of the offending statement
  std::string message;

  bool operator==(const LintFinding&) const = default;
};

/// Undeclared points, arity violations, duplicate primitives and perpendicular
/// feet that miss a declared line.
std::vector<LintFinding> check_consistency(const Document& doc);

/// Annotation-rule lints: split lines, non-maximal planes, right angles that
/// duplicate a perpendicular clause, and perpendiculars collapsible under the
/// collinear points rule. Only syntactically declared collinearity is used.
std::vector<LintFinding> lint_redundancy(const Document& doc);

/// Format problems and parse diagnostics as findings, for reporting.
std::vector<LintFinding> format_findings(const FormatReport& report);
std::vector<LintFinding> parse_findings(const ParseResult& parsed);

}  // namespace geoformal
