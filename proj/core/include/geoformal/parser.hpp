#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "geoformal/document.hpp"

namespace geoformal {

enum class Severity { error, warning };
std::string_view to_string(Severity severity);

/// One problem found while reading a formal description.
struct Diagnostic {
  Severity severity = Severity::error;
  SourceLoc loc;
  std::string code;      // lex-error, parse-error, line-arity, plane-arity, ...
  std::string message;
  std::string expected;  // what the parser wanted, for parse-error
  std::optional<Category> section;
  bool inside_tag = false;
};

/// Tag or header occurrence, in source order.
struct SectionMarker {
  enum class Kind { open, close, header };
  Kind kind;
  std::string name;
  SourceLoc loc;
};

/// Bookkeeping for each non-blank statement the parser saw.
struct StatementRecord {
  std::optional<Category> section;  // enclosing section, empty outside any
  bool inside_tag = false;
  std::optional<Category> kind;     // what the statement declares; empty for "None"
  bool ok = false;                  // parsed and passed shape checks
  SourceLoc loc;
};

struct ParseResult {
  Document document;
  std::vector<Diagnostic> diagnostics;
  std::vector<SectionMarker> markers;
  std::vector<StatementRecord> statements;

  bool clean() const { return diagnostics.empty(); }
};

/// Reads tagged (`<points>…</points>`), headed (`**Points:**`) or bare
/// statement text. Never throws on malformed input; problems are reported
/// per statement and the offending statement is left out of the document.
ParseResult parse_document(std::string_view text, Domain domain);

/// Guesses the domain from the text: solid if it mentions planes or solids.
Domain infer_domain(std::string_view text);

}  // namespace geoformal
