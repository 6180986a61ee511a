#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace geoformal {

enum class TokenKind {
  keyword,    // point line lineson lieson plane solid m on to
  command,    // \odot \angle \perp \parallel \widehat (text excludes the backslash)
  point_run,  // concatenated labels: A, AB, A_{1}B_{1}C_{1}
  word,       // capitalized word: solid kinds, None
  name,       // lowercase identifier that is not a keyword (line names)
  number,
  expr,       // everything after '=' that is not a point run
  equals,
  dash,
  comma,
  lbracket,
  rbracket,
  tag_open,   // <points>, text is the tag name
  tag_close,  // </points>
  header,     // **Points:**, text is the normalized section name
  punct,
};

std::string_view to_string(TokenKind kind);

struct Token {
  TokenKind kind;
  std::string text;
  int line = 1;
  int column = 1;

  bool is(TokenKind k, std::string_view t) const { return kind == k && text == t; }
};

class LexError : public std::runtime_error {
 public:
  enum class Code { illegal_character, unexpected_character };

  LexError(Code code, int line, int column, std::string message);

  Code code() const noexcept { return code_; }
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  Code code_;
  int line_;
  int column_;
};

/// Splits `text` into tokens with 1-based line/column positions. Bytes
/// outside the lexical alphabet raise LexError(illegal_character).
std::vector<Token> tokenize(std::string_view text, int first_line = 1);

/// Maps a header title ("Points", "Semantic Clauses", "Structure") to its
/// section name, or returns an empty view when the title is not a section.
std::string_view header_section(std::string_view title);

}  // namespace geoformal
