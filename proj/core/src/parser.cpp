#include "geoformal/parser.hpp"

#include <algorithm>
#include <cctype>
#include <span>
#include <variant>

#include "geoformal/lexer.hpp"

namespace geoformal {

namespace {

struct NoneStatement {};
using Statement =
    std::variant<NoneStatement, std::vector<PointLabel>, Line, Circle, Plane, Solid, SemanticClause>;

std::optional<Category> statement_category(const Statement& stmt) {
  switch (stmt.index()) {
    case 1: return Category::points;
    case 2: return Category::lines;
    case 3: return Category::circles;
    case 4: return Category::planes;
    case 5: return Category::solids;
    case 6: return Category::semantics;
    default: return std::nullopt;
  }
}

struct ParseFailure {
  SourceLoc loc;
  std::string code;
  std::string message;
  std::string expected;
};

bool has_duplicates(std::vector<PointLabel> labels) {
  std::sort(labels.begin(), labels.end());
  return std::adjacent_find(labels.begin(), labels.end()) != labels.end();
}

bool iequals(std::string_view a, std::string_view b) {
  return a.size() == b.size() &&
         std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
           return std::tolower(static_cast<unsigned char>(x)) ==
                  std::tolower(static_cast<unsigned char>(y));
         });
}

// Recursive descent over the tokens of one statement.
class StatementParser {
 public:
  StatementParser(std::span<const Token> tokens) : toks_(tokens) {}

  Statement parse() {
    const Token& first = toks_.front();
    Statement result;
    switch (first.kind) {
      case TokenKind::lbracket: result = point_list(); break;
      case TokenKind::keyword:
        if (first.text == "point") {
          result = point_decl();
        } else if (first.text == "line") {
          result = line();
        } else if (first.text == "plane") {
          result = plane();
        } else if (first.text == "solid") {
          ++pos_;
          result = solid();
        } else if (first.text == "m") {
          result = measure();
        } else {
          fail("statement");
        }
        break;
      case TokenKind::command:
        if (first.text != "odot") fail("statement");
        result = circle();
        break;
      case TokenKind::word:
      case TokenKind::name:
        if (toks_.size() == 1 && iequals(first.text, "none")) {
          ++pos_;
          result = NoneStatement{};
        } else if (first.kind == TokenKind::word && solid_kind_from_string(first.text)) {
          result = solid();
        } else {
          fail("statement");
        }
        break;
      case TokenKind::point_run: result = segment_clause(); break;
      default: fail("statement");
    }
    if (pos_ < toks_.size()) fail("end of statement");
    return result;
  }

 private:
  SourceLoc loc_of(const Token& t) const { return {t.line, t.column}; }
  SourceLoc here() const {
    if (pos_ < toks_.size()) return loc_of(toks_[pos_]);
    const Token& last = toks_.back();
    return {last.line, last.column + static_cast<int>(last.text.size())};
  }

  [[noreturn]] void fail(std::string expected) const {
    std::string found = pos_ < toks_.size() ? "'" + toks_[pos_].text + "'" : "end of statement";
    throw ParseFailure{here(), "parse-error", "expected " + expected + ", found " + found,
                       std::move(expected)};
  }

  [[noreturn]] void reject(SourceLoc loc, std::string code, std::string message) const {
    throw ParseFailure{loc, std::move(code), std::move(message), {}};
  }

  bool peek(TokenKind kind) const { return pos_ < toks_.size() && toks_[pos_].kind == kind; }
  bool peek(TokenKind kind, std::string_view text) const {
    return pos_ < toks_.size() && toks_[pos_].is(kind, text);
  }

  const Token& expect(TokenKind kind, std::string_view expected) {
    if (!peek(kind)) fail(std::string(expected));
    return toks_[pos_++];
  }

  void expect(TokenKind kind, std::string_view text, std::string_view expected) {
    if (!peek(kind, text)) fail(std::string(expected));
    ++pos_;
  }

  std::vector<PointLabel> labels_of(const Token& tok) const {
    std::vector<PointLabel> out;
    if (!try_split_point_run(tok.text, out))
      reject(loc_of(tok), "malformed-point-run", "'" + tok.text + "' is not a run of point labels");
    return out;
  }

  std::vector<PointLabel> run_of(std::size_t count, std::string_view what) {
    const Token& tok = expect(TokenKind::point_run, what);
    auto labels = labels_of(tok);
    if (labels.size() != count) {
      --pos_;
      fail(std::string(what));
    }
    return labels;
  }

  PointLabel label(std::string_view what) { return run_of(1, what).front(); }

  Segment segment(std::string_view what) {
    if (!peek(TokenKind::point_run)) fail(std::string(what));
    const Token& tok = toks_[pos_];
    auto labels = run_of(2, what);
    if (labels[0] == labels[1])
      reject(loc_of(tok), "degenerate-segment", "segment '" + tok.text + "' repeats a point");
    return {labels[0], labels[1]};
  }

  // Consumes consecutive point-run tokens.
  std::vector<PointLabel> label_sequence() {
    std::vector<PointLabel> out;
    while (peek(TokenKind::point_run)) {
      auto labels = labels_of(toks_[pos_++]);
      out.insert(out.end(), labels.begin(), labels.end());
    }
    return out;
  }

  std::vector<PointLabel> point_list() {
    ++pos_;
    std::vector<PointLabel> out;
    if (peek(TokenKind::rbracket)) {
      ++pos_;
      return out;
    }
    for (;;) {
      out.push_back(label("point label"));
      if (peek(TokenKind::comma)) {
        ++pos_;
        continue;
      }
      expect(TokenKind::rbracket, "',' or ']'");
      return out;
    }
  }

  std::vector<PointLabel> point_decl() {
    ++pos_;
    return {label("point label")};
  }

  Line line() {
    const SourceLoc start = loc_of(toks_[pos_++]);
    Line out;
    if (peek(TokenKind::name)) {
      out.name = toks_[pos_++].text;
      expect(TokenKind::keyword, "lineson", "'lineson'");
    }
    out.points = label_sequence();
    if (out.points.size() < 2)
      reject(start, "line-arity", "a line needs at least 2 points");
    if (has_duplicates(out.points))
      reject(start, "duplicate-point", "a point appears twice in the line");
    return out;
  }

  Circle circle() {
    const SourceLoc start = loc_of(toks_[pos_++]);
    Circle out;
    out.center = label("circle center");
    expect(TokenKind::keyword, "lieson", "'lieson'");
    out.on_points = label_sequence();
    if (std::find(out.on_points.begin(), out.on_points.end(), out.center) != out.on_points.end())
      reject(start, "circle-center", "the center cannot lie on its own circle");
    if (has_duplicates(out.on_points))
      reject(start, "duplicate-point", "a point appears twice on the circle");
    return out;
  }

  Plane plane() {
    const SourceLoc start = loc_of(toks_[pos_++]);
    Plane out;
    out.points = label_sequence();
    if (out.points.size() < 3)
      reject(start, "plane-arity", "a plane needs at least 3 points");
    if (has_duplicates(out.points))
      reject(start, "duplicate-point", "a point appears twice in the plane");
    return out;
  }

  Solid solid() {
    const SourceLoc start = pos_ > 0 ? loc_of(toks_[pos_ - 1]) : here();
    const Token& kind_tok = expect(TokenKind::word, "solid kind");
    auto kind = solid_kind_from_string(kind_tok.text);
    if (!kind) {
      --pos_;
      fail("solid kind (Cube, Prism, Pyramid, Frustum, Cylinder, Cone, FrustumCone, Spheroid)");
    }
    Solid out;
    out.kind = *kind;
    out.groups.push_back(label_sequence());
    if (out.groups.back().empty()) fail("solid vertices");
    if (peek(TokenKind::dash)) {
      ++pos_;
      out.groups.push_back(label_sequence());
      if (out.groups.back().empty()) fail("solid vertices after '-'");
    }
    if (auto problem = check_solid_shape(out))
      reject(start, "solid-shape", std::string(to_string(out.kind)) + ": " + *problem);
    return out;
  }

  Expr rhs_expr() {
    expect(TokenKind::equals, "=", "'='");
    if (!peek(TokenKind::expr) && !peek(TokenKind::point_run)) fail("value");
    const Token& tok = toks_[pos_++];
    if (tok.text.empty()) {
      --pos_;
      fail("value");
    }
    return Expr::from_text(tok.text);
  }

  SemanticClause measure() {
    ++pos_;
    if (peek(TokenKind::command, "angle")) {
      ++pos_;
      const Token& tok = toks_[std::min(pos_, toks_.size() - 1)];
      auto pts = run_of(3, "three-point angle");
      if (pts[0] == pts[1] || pts[1] == pts[2] || pts[0] == pts[2])
        reject(loc_of(tok), "degenerate-angle", "angle '" + tok.text + "' repeats a point");
      return {AngleMeasure{pts[0], pts[1], pts[2], rhs_expr()}, {}};
    }
    if (peek(TokenKind::command, "widehat")) {
      ++pos_;
      const Token& tok = toks_[std::min(pos_, toks_.size() - 1)];
      auto pts = run_of(2, "two-point arc");
      if (pts[0] == pts[1])
        reject(loc_of(tok), "degenerate-segment", "arc '" + tok.text + "' repeats a point");
      return {ArcMeasure{pts[0], pts[1], rhs_expr()}, {}};
    }
    fail("'\\angle' or '\\widehat'");
  }

  SemanticClause segment_clause() {
    Segment lhs = segment("two-point segment");
    if (peek(TokenKind::equals)) {
      ++pos_;
      if (peek(TokenKind::point_run)) {
        const Token& tok = toks_[pos_];
        std::vector<PointLabel> labels;
        if (try_split_point_run(tok.text, labels) && labels.size() == 2) {
          return {SegmentEq{lhs, segment("two-point segment")}, {}};
        }
        ++pos_;
        return {SegmentEq{lhs, Expr::from_text(tok.text)}, {}};
      }
      --pos_;
      return {SegmentEq{lhs, rhs_expr()}, {}};
    }
    if (peek(TokenKind::command, "perp")) {
      ++pos_;
      if (peek(TokenKind::keyword, "to")) ++pos_;
      Perp perp{lhs, segment("two-point segment"), std::nullopt};
      if (peek(TokenKind::keyword, "on")) {
        ++pos_;
        perp.foot = label("foot point");
      }
      return {perp, {}};
    }
    if (peek(TokenKind::command, "parallel")) {
      ++pos_;
      return {Parallel{lhs, segment("two-point segment")}, {}};
    }
    fail("'=', '\\perp' or '\\parallel'");
  }

  std::span<const Token> toks_;
  std::size_t pos_ = 0;
};

class DocumentBuilder {
 public:
  DocumentBuilder(Domain domain) { result_.document.domain = domain; }

  void feed_line(std::string_view line, int line_no) {
    std::vector<Token> tokens;
    try {
      tokens = tokenize(line, line_no);
    } catch (const LexError& e) {
      result_.statements.push_back({section_, inside_tag_, std::nullopt, false,
                                    {e.line(), e.column()}});
      add_diagnostic({e.line(), e.column()}, "lex-error", e.what(), {});
      return;
    }
    std::size_t begin = 0;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      const Token& tok = tokens[i];
      if (tok.kind != TokenKind::tag_open && tok.kind != TokenKind::tag_close &&
          tok.kind != TokenKind::header)
        continue;
      statement(std::span(tokens).subspan(begin, i - begin));
      marker(tok);
      begin = i + 1;
    }
    statement(std::span(tokens).subspan(begin));
  }

  ParseResult finish() && {
    bool tagged = false;
    bool headed = false;
    for (const auto& m : result_.markers) {
      tagged |= m.kind != SectionMarker::Kind::header;
      headed |= m.kind == SectionMarker::Kind::header;
    }
    result_.document.dialect = (headed && !tagged) ? Dialect::headed : Dialect::tagged;
    return std::move(result_);
  }

 private:
  void add_diagnostic(SourceLoc loc, std::string code, std::string message, std::string expected,
                      Severity severity = Severity::error) {
    result_.diagnostics.push_back(
        {severity, loc, std::move(code), std::move(message), std::move(expected), section_,
         inside_tag_});
  }

  void marker(const Token& tok) {
    const SourceLoc loc{tok.line, tok.column};
    switch (tok.kind) {
      case TokenKind::tag_open: {
        result_.markers.push_back({SectionMarker::Kind::open, tok.text, loc});
        section_ = category_from_string(tok.text);
        inside_tag_ = true;
        if (!section_) add_diagnostic(loc, "unknown-section", "unknown tag <" + tok.text + ">", {});
        break;
      }
      case TokenKind::tag_close:
        result_.markers.push_back({SectionMarker::Kind::close, tok.text, loc});
        section_.reset();
        inside_tag_ = false;
        break;
      default:
        result_.markers.push_back({SectionMarker::Kind::header, tok.text, loc});
        section_ = category_from_string(tok.text);
        inside_tag_ = false;
        break;
    }
  }

  void statement(std::span<const Token> tokens) {
    if (tokens.empty()) return;
    const SourceLoc loc{tokens.front().line, tokens.front().column};
    StatementRecord record{section_, inside_tag_, std::nullopt, false, loc};
    Statement stmt;
    try {
      stmt = StatementParser(tokens).parse();
    } catch (const ParseFailure& failure) {
      result_.statements.push_back(record);
      add_diagnostic(failure.loc, failure.code, failure.message, failure.expected);
      return;
    }
    record.kind = statement_category(stmt);
    record.ok = true;
    if (record.kind && section_ && *record.kind != *section_) {
      add_diagnostic(loc, "section-mismatch",
                     "a " + std::string(to_string(*record.kind)) + " statement inside the " +
                         std::string(to_string(*section_)) + " section",
                     std::string(to_string(*section_)) + " statement");
    }
    result_.statements.push_back(record);
    add(std::move(stmt), loc);
  }

  void add(Statement stmt, SourceLoc loc) {
    Document& doc = result_.document;
    std::visit(
        [&](auto&& s) {
          using T = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<T, std::vector<PointLabel>>) {
            doc.points.insert(s.begin(), s.end());
          } else if constexpr (std::is_same_v<T, Line>) {
            s.loc = loc;
            doc.lines.push_back(std::move(s));
          } else if constexpr (std::is_same_v<T, Circle>) {
            s.loc = loc;
            doc.circles.push_back(std::move(s));
          } else if constexpr (std::is_same_v<T, Plane>) {
            s.loc = loc;
            doc.planes.push_back(std::move(s));
          } else if constexpr (std::is_same_v<T, Solid>) {
            s.loc = loc;
            doc.solids.push_back(std::move(s));
          } else if constexpr (std::is_same_v<T, SemanticClause>) {
            s.loc = loc;
            doc.semantics.push_back(std::move(s));
          }
        },
        std::move(stmt));
  }

  ParseResult result_;
  std::optional<Category> section_;
  bool inside_tag_ = false;
};

}  // namespace

std::string_view to_string(Severity severity) {
  return severity == Severity::error ? "error" : "warning";
}

ParseResult parse_document(std::string_view text, Domain domain) {
  DocumentBuilder builder(domain);
  int line_no = 1;
  std::size_t begin = 0;
  while (begin < text.size()) {
    std::size_t end = text.find('\n', begin);
    if (end == std::string_view::npos) end = text.size();
    builder.feed_line(text.substr(begin, end - begin), line_no);
    begin = end + 1;
    ++line_no;
  }
  return std::move(builder).finish();
}

Domain infer_domain(std::string_view text) {
  if (text.find("<planes>") != std::string_view::npos ||
      text.find("<solids>") != std::string_view::npos)
    return Domain::solid;
  const ParseResult parsed = parse_document(text, Domain::plane);
  const Document& doc = parsed.document;
  return (doc.planes.empty() && doc.solids.empty()) ? Domain::plane : Domain::solid;
}

}  // namespace geoformal
