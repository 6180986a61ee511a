#include "geoformal/lexer.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "geoformal/point_label.hpp"

namespace geoformal {

namespace {

constexpr std::array<std::string_view, 9> kKeywords = {
    "point", "line", "lineson", "lieson", "plane", "solid", "m", "on", "to"};

bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }
bool is_lower(char c) { return c >= 'a' && c <= 'z'; }
bool is_alpha(char c) { return is_upper(c) || is_lower(c); }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

bool in_alphabet(char c) {
  if (is_alpha(c) || is_digit(c)) return true;
  switch (c) {
    case ' ': case '\t': case '\r': case '\n':
    case '\\': case '_': case '{': case '}': case '\'':
    case '[': case ']': case ',': case '=': case '-':
    case '+': case '*': case '/': case '^': case '(':
    case ')': case '.': case ':': case '<': case '>':
    case '#':
      return true;
    default:
      return false;
  }
}

bool in_point_run(char c) {
  return is_upper(c) || is_digit(c) || c == '\'' || c == '_' || c == '{' || c == '}';
}

bool is_keyword(std::string_view word) {
  return std::find(kKeywords.begin(), kKeywords.end(), word) != kKeywords.end();
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

class LineLexer {
 public:
  LineLexer(std::string_view line, int line_no, std::vector<Token>& out)
      : src_(line), line_no_(line_no), out_(out) {}

  void run() {
    for (std::size_t i = 0; i < src_.size(); ++i) {
      if (!in_alphabet(src_[i]))
        throw LexError(LexError::Code::illegal_character, line_no_, col(i),
                       "illegal character (byte 0x" + hex(src_[i]) + ")");
    }
    lex_header();
    while (pos_ < src_.size()) step();
  }

 private:
  int col(std::size_t i) const { return static_cast<int>(i) + 1; }

  static std::string hex(char c) {
    static constexpr char digits[] = "0123456789abcdef";
    const auto b = static_cast<unsigned char>(c);
    return {digits[b >> 4], digits[b & 0xf]};
  }

  void emit(TokenKind kind, std::string text, std::size_t at) {
    out_.push_back(Token{kind, std::move(text), line_no_, col(at)});
  }

  // `### **Points:**`, `Points:`, `**Semantic Clauses**:` at line start.
  void lex_header() {
    std::size_t i = 0;
    while (i < src_.size() && (src_[i] == ' ' || src_[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < src_.size() && src_[i] == '#') ++i;
    while (i < src_.size() && src_[i] == ' ') ++i;
    if (src_.substr(i, 2) == "**") i += 2;
    const std::size_t title_begin = i;
    while (i < src_.size() && (is_alpha(src_[i]) || (src_[i] == ' ' && i + 1 < src_.size() &&
                                                     is_alpha(src_[i + 1]))))
      ++i;
    const std::string_view title = src_.substr(title_begin, i - title_begin);
    if (title.empty() || !is_upper(title.front())) return;
    if (src_.substr(i, 2) == "**") i += 2;
    while (i < src_.size() && src_[i] == ' ') ++i;
    if (i >= src_.size() || src_[i] != ':') return;
    ++i;
    if (src_.substr(i, 2) == "**") i += 2;
    const std::string_view section = header_section(title);
    if (section.empty()) return;
    emit(TokenKind::header, std::string(section), start);
    pos_ = i;
  }

  void step() {
    const char c = src_[pos_];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      ++pos_;
      return;
    }
    const std::size_t at = pos_;
    if (is_upper(c)) {
      if (pos_ + 1 < src_.size() && is_lower(src_[pos_ + 1])) {
        while (pos_ < src_.size() && is_alpha(src_[pos_])) ++pos_;
        emit(TokenKind::word, std::string(src_.substr(at, pos_ - at)), at);
        return;
      }
      while (pos_ < src_.size() && in_point_run(src_[pos_])) ++pos_;
      emit(TokenKind::point_run, std::string(src_.substr(at, pos_ - at)), at);
      return;
    }
    if (is_lower(c)) {
      while (pos_ < src_.size() && (is_lower(src_[pos_]) || is_digit(src_[pos_]))) ++pos_;
      std::string word(src_.substr(at, pos_ - at));
      const TokenKind kind = is_keyword(word) ? TokenKind::keyword : TokenKind::name;
      emit(kind, std::move(word), at);
      return;
    }
    if (is_digit(c)) {
      while (pos_ < src_.size() && (is_digit(src_[pos_]) || src_[pos_] == '.')) ++pos_;
      emit(TokenKind::number, std::string(src_.substr(at, pos_ - at)), at);
      return;
    }
    switch (c) {
      case '\\': {
        ++pos_;
        while (pos_ < src_.size() && is_alpha(src_[pos_])) ++pos_;
        if (pos_ == at + 1)
          throw LexError(LexError::Code::unexpected_character, line_no_, col(at),
                         "expected a command name after '\\'");
        emit(TokenKind::command, std::string(src_.substr(at + 1, pos_ - at - 1)), at);
        return;
      }
      case '=':
        ++pos_;
        emit(TokenKind::equals, "=", at);
        lex_rhs();
        return;
      case '-': ++pos_; emit(TokenKind::dash, "-", at); return;
      case ',': ++pos_; emit(TokenKind::comma, ",", at); return;
      case '[': ++pos_; emit(TokenKind::lbracket, "[", at); return;
      case ']': ++pos_; emit(TokenKind::rbracket, "]", at); return;
      case '<': lex_tag(); return;
      default:
        ++pos_;
        emit(TokenKind::punct, std::string(1, c), at);
        return;
    }
  }

  void lex_tag() {
    const std::size_t at = pos_;
    std::size_t i = pos_ + 1;
    const bool closing = i < src_.size() && src_[i] == '/';
    if (closing) ++i;
    const std::size_t name_begin = i;
    while (i < src_.size() && is_lower(src_[i])) ++i;
    if (i == name_begin || i >= src_.size() || src_[i] != '>')
      throw LexError(LexError::Code::unexpected_character, line_no_, col(at),
                     "'<' does not start a section tag");
    emit(closing ? TokenKind::tag_close : TokenKind::tag_open,
         std::string(src_.substr(name_begin, i - name_begin)), at);
    pos_ = i + 1;
  }

  // Right-hand side of '=': runs to the end of the line or the next tag.
  void lex_rhs() {
    std::size_t end = src_.find('<', pos_);
    if (end == std::string_view::npos) end = src_.size();
    std::size_t begin = pos_;
    while (begin < end && std::isspace(static_cast<unsigned char>(src_[begin]))) ++begin;
    const std::string_view rhs = trim(src_.substr(pos_, end - pos_));
    std::vector<PointLabel> labels;
    if (!rhs.empty() && std::all_of(rhs.begin(), rhs.end(), in_point_run) &&
        try_split_point_run(rhs, labels)) {
      emit(TokenKind::point_run, std::string(rhs), begin);
    } else {
      emit(TokenKind::expr, std::string(rhs), begin);
    }
    pos_ = end;
  }

  std::string_view src_;
  int line_no_;
  std::vector<Token>& out_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string_view to_string(TokenKind kind) {
  switch (kind) {
    case TokenKind::keyword: return "keyword";
    case TokenKind::command: return "command";
    case TokenKind::point_run: return "point-run";
    case TokenKind::word: return "word";
    case TokenKind::name: return "name";
    case TokenKind::number: return "number";
    case TokenKind::expr: return "expression";
    case TokenKind::equals: return "'='";
    case TokenKind::dash: return "'-'";
    case TokenKind::comma: return "','";
    case TokenKind::lbracket: return "'['";
    case TokenKind::rbracket: return "']'";
    case TokenKind::tag_open: return "opening tag";
    case TokenKind::tag_close: return "closing tag";
    case TokenKind::header: return "header";
    case TokenKind::punct: return "punctuation";
  }
  return "?";
}

LexError::LexError(Code code, int line, int column, std::string message)
    : std::runtime_error(std::move(message)), code_(code), line_(line), column_(column) {}

std::string_view header_section(std::string_view title) {
  std::string lowered;
  for (char c : title) lowered += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (lowered == "points" || lowered == "point") return "points";
  if (lowered == "lines" || lowered == "line") return "lines";
  if (lowered == "circles" || lowered == "circle") return "circles";
  if (lowered == "planes" || lowered == "plane") return "planes";
  if (lowered == "solids" || lowered == "solid" || lowered == "structure" ||
      lowered == "solid structure")
    return "solids";
  if (lowered == "semantics" || lowered == "semantic clauses" || lowered == "semantic")
    return "semantics";
  return {};
}

std::vector<Token> tokenize(std::string_view text, int first_line) {
  std::vector<Token> tokens;
  int line_no = first_line;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    std::size_t end = text.find('\n', begin);
    if (end == std::string_view::npos) end = text.size();
    LineLexer(text.substr(begin, end - begin), line_no, tokens).run();
    if (end == text.size()) break;
    begin = end + 1;
    ++line_no;
  }
  return tokens;
}

}  // namespace geoformal
