#include "geoformal/validator.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <tuple>

#include "geoformal/canonical.hpp"

namespace geoformal {

namespace {

constexpr std::array<LintRule, 14> kRules = {{
    {"missing-tag", Severity::error, "a required section tag is absent or never closed"},
    {"malformed-tag", Severity::error, "duplicate, unclosed, misnested or unknown section tag"},
    {"malformed-statement", Severity::error, "a statement does not parse as its section's type"},
    {"section-order", Severity::warning, "sections appear out of the canonical order"},
    {"parse-error", Severity::error, "a statement could not be parsed"},
    {"undeclared-point", Severity::error, "a referenced point is missing from the points set"},
    {"line-arity", Severity::error, "a line with fewer than 2 points"},
    {"plane-arity", Severity::error, "a plane with fewer than 3 points"},
    {"duplicate-primitive", Severity::error, "the same canonical primitive is declared twice"},
    {"perp-foot-off-line", Severity::error, "a perpendicular foot is not on a declared line"},
    {"split-line", Severity::warning, "a line is a contiguous piece of a longer line"},
    {"non-maximal-plane", Severity::warning, "a plane's points are a strict subset of another's"},
    {"right-angle-duplication", Severity::warning,
     "a 90 degree angle restates a perpendicular clause"},
    {"collinear-perp", Severity::warning,
     "perpendicular clauses collapsible under the collinear points rule"},
}};

LintFinding make_finding(std::string_view rule, SourceLoc loc, std::string subject,
                         std::string message) {
  const LintRule* r = find_lint_rule(rule);
  return {std::string(rule), r ? r->severity : Severity::error, loc, std::move(subject),
          std::move(message)};
}

void sort_findings(std::vector<LintFinding>& findings) {
  std::sort(findings.begin(), findings.end(), [](const LintFinding& a, const LintFinding& b) {
    return std::tie(a.loc.line, a.loc.column, a.rule, a.subject, a.message) <
           std::tie(b.loc.line, b.loc.column, b.rule, b.subject, b.message);
  });
  findings.erase(std::unique(findings.begin(), findings.end()), findings.end());
}

using Labels = std::vector<PointLabel>;

bool contains(const Labels& labels, const PointLabel& p) {
  return std::find(labels.begin(), labels.end(), p) != labels.end();
}

bool is_contiguous_subrun(const Labels& shorter, const Labels& longer) {
  if (shorter.size() >= longer.size()) return false;
  const Labels reversed(shorter.rbegin(), shorter.rend());
  return std::search(longer.begin(), longer.end(), shorter.begin(), shorter.end()) !=
             longer.end() ||
         std::search(longer.begin(), longer.end(), reversed.begin(), reversed.end()) !=
             longer.end();
}

// Declared collinearity: the lines of the document as point lists.
class LineIndex {
 public:
  explicit LineIndex(const Document& doc) {
    for (const auto& line : doc.lines) lines_.push_back(line.points);
  }

  bool collinear(std::initializer_list<PointLabel> points) const {
    return std::any_of(lines_.begin(), lines_.end(), [&](const Labels& line) {
      return std::all_of(points.begin(), points.end(),
                         [&](const PointLabel& p) { return contains(line, p); });
    });
  }

  bool declares(const Segment& s) const { return collinear({s.first, s.second}); }

  // P is an endpoint of the segment or lies on a declared line through it.
  bool supports(const PointLabel& p, const Segment& s) const {
    return p == s.first || p == s.second || collinear({p, s.first, s.second});
  }

 private:
  std::vector<Labels> lines_;
};

std::string clause_key(const SemanticClause& c) { return canonical_key(c, CanonicalMode{}); }

}  // namespace

std::span<const LintRule> lint_rules() { return kRules; }

const LintRule* find_lint_rule(std::string_view id) {
  for (const auto& rule : kRules)
    if (rule.id == id) return &rule;
  return nullptr;
}

FormatReport check_format(std::string_view text, Domain domain) {
  return check_format(parse_document(text, domain), domain);
}

FormatReport check_format(const ParseResult& parsed, Domain domain) {
  FormatReport report;
  std::map<std::string, int> pairs;
  std::optional<SectionMarker> open;
  std::vector<Category> order;

  auto structural = [&report](SourceLoc loc, std::string message) {
    ++report.malformed_statements;
    report.diagnostics.push_back(
        {Severity::error, loc, "malformed-tag", std::move(message), {}, std::nullopt, true});
  };

  for (const auto& marker : parsed.markers) {
    if (marker.kind == SectionMarker::Kind::header) continue;
    if (marker.kind == SectionMarker::Kind::open) {
      if (open) structural(marker.loc, "<" + marker.name + "> opened inside <" + open->name + ">");
      if (!category_from_string(marker.name))
        structural(marker.loc, "unknown tag <" + marker.name + ">");
      open = marker;
      continue;
    }
    if (open && open->name == marker.name) {
      if (++pairs[marker.name] == 1) {
        if (auto c = category_from_string(marker.name)) order.push_back(*c);
      }
      open.reset();
    } else {
      structural(marker.loc, "</" + marker.name + "> does not close an open tag");
    }
  }
  if (open) structural(open->loc, "<" + open->name + "> is never closed");

  for (const auto& [name, count] : pairs) {
    if (count > 1) {
      report.malformed_statements += static_cast<std::size_t>(count - 1);
      report.diagnostics.push_back({Severity::error, {}, "malformed-tag",
                                    "<" + name + "> appears " + std::to_string(count) + " times",
                                    {}, category_from_string(name), true});
    }
  }
  for (Category c : required_sections(domain)) {
    if (pairs.count(std::string(to_string(c))) == 0) report.missing_tags.push_back(c);
  }

  for (const auto& stmt : parsed.statements) {
    if (!stmt.inside_tag || !stmt.section) continue;
    if (!stmt.ok || (stmt.kind && *stmt.kind != *stmt.section)) ++report.malformed_statements;
  }
  for (const auto& d : parsed.diagnostics)
    if (d.inside_tag && d.section) report.diagnostics.push_back(d);

  const auto rank = [](Category c) {
    return std::find(kAllCategories.begin(), kAllCategories.end(), c) - kAllCategories.begin();
  };
  if (!std::is_sorted(order.begin(), order.end(),
                      [&](Category a, Category b) { return rank(a) < rank(b); })) {
    report.diagnostics.push_back({Severity::warning, {}, "section-order",
                                  "sections are not in the order points, lines, circles, "
                                  "semantics, planes, solids",
                                  {}, std::nullopt, false});
  }

  report.is_compliant = report.missing_tags.empty() && report.malformed_statements == 0;
  return report;
}

std::vector<LintFinding> check_consistency(const Document& doc) {
  std::vector<LintFinding> out;
  const auto& declared = doc.points;

  auto check_refs = [&](const Labels& refs, SourceLoc loc, const std::string& subject) {
    std::set<PointLabel> reported;
    for (const auto& p : refs) {
      if (declared.count(p) || !reported.insert(p).second) continue;
      out.push_back(make_finding("undeclared-point", loc, subject,
                                 "point " + p.str() + " is used but not declared"));
    }
  };

  std::set<std::string> seen;
  auto check_duplicate = [&](std::string_view category, const std::string& key, SourceLoc loc) {
    if (!seen.insert(std::string(category) + "\n" + key).second)
      out.push_back(make_finding("duplicate-primitive", loc, key, "'" + key + "' is declared twice"));
  };

  for (const auto& line : doc.lines) {
    const std::string key = canonical_key(line);
    if (line.points.size() < 2)
      out.push_back(make_finding("line-arity", line.loc, key, "a line needs at least 2 points"));
    check_refs(line.points, line.loc, key);
    check_duplicate("lines", key, line.loc);
  }
  for (const auto& circle : doc.circles) {
    const std::string key = canonical_key(circle);
    Labels refs{circle.center};
    refs.insert(refs.end(), circle.on_points.begin(), circle.on_points.end());
    check_refs(refs, circle.loc, key);
    check_duplicate("circles", key, circle.loc);
  }
  for (const auto& plane : doc.planes) {
    const std::string key = canonical_key(plane, CanonicalMode{});
    if (plane.points.size() < 3)
      out.push_back(make_finding("plane-arity", plane.loc, key, "a plane needs at least 3 points"));
    check_refs(plane.points, plane.loc, key);
    check_duplicate("planes", key, plane.loc);
  }
  for (const auto& solid : doc.solids) {
    const std::string key = canonical_key(solid, CanonicalMode{});
    Labels refs;
    for (const auto& g : solid.groups) refs.insert(refs.end(), g.begin(), g.end());
    check_refs(refs, solid.loc, key);
    check_duplicate("solids", key, solid.loc);
  }

  const LineIndex index(doc);
  for (const auto& clause : doc.semantics) {
    const std::string key = clause_key(clause);
    check_refs(referenced_points(clause), clause.loc, key);
    check_duplicate("semantics", key, clause.loc);
    const auto* perp = std::get_if<Perp>(&clause.clause);
    if (!perp || !perp->foot) continue;
    for (const Segment* s : {&perp->first, &perp->second}) {
      if (index.declares(*s) && !index.supports(*perp->foot, *s)) {
        out.push_back(make_finding("perp-foot-off-line", clause.loc, key,
                                   "foot " + perp->foot->str() + " is not on the declared line through " +
                                       s->first.str() + s->second.str()));
      }
    }
  }
  sort_findings(out);
  return out;
}

std::vector<LintFinding> lint_redundancy(const Document& doc) {
  std::vector<LintFinding> out;

  for (const auto& shorter : doc.lines) {
    for (const auto& longer : doc.lines) {
      if (!is_contiguous_subrun(shorter.points, longer.points)) continue;
      out.push_back(make_finding("split-line", shorter.loc, canonical_key(shorter),
                                 "'" + canonical_key(shorter) + "' is part of '" +
                                     canonical_key(longer) + "'; declare the line once"));
    }
  }

  for (const auto& small : doc.planes) {
    const std::set<PointLabel> a(small.points.begin(), small.points.end());
    for (const auto& big : doc.planes) {
      const std::set<PointLabel> b(big.points.begin(), big.points.end());
      if (a.size() >= b.size() || !std::includes(b.begin(), b.end(), a.begin(), a.end())) continue;
      const std::string small_key = canonical_key(small, CanonicalMode{});
      out.push_back(make_finding("non-maximal-plane", small.loc, small_key,
                                 "'" + small_key + "' is contained in '" +
                                     canonical_key(big, CanonicalMode{}) + "'"));
    }
  }

  const LineIndex index(doc);
  std::vector<std::pair<const SemanticClause*, const Perp*>> perps;
  for (const auto& clause : doc.semantics)
    if (const auto* p = std::get_if<Perp>(&clause.clause)) perps.emplace_back(&clause, p);

  for (const auto& clause : doc.semantics) {
    const auto* angle = std::get_if<AngleMeasure>(&clause.clause);
    if (!angle || !angle->value.is_number(Rational(90))) continue;
    for (const auto& [perp_clause, perp] : perps) {
      const bool at_vertex =
          perp->foot ? *perp->foot == angle->vertex
                     : index.supports(angle->vertex, perp->first) &&
                           index.supports(angle->vertex, perp->second);
      if (!at_vertex) continue;
      const bool arms = (index.supports(angle->p1, perp->first) &&
                         index.supports(angle->p3, perp->second)) ||
                        (index.supports(angle->p1, perp->second) &&
                         index.supports(angle->p3, perp->first));
      if (!arms) continue;
      out.push_back(make_finding("right-angle-duplication", clause.loc, clause_key(clause),
                                 "'" + clause_key(clause) + "' restates '" +
                                     clause_key(*perp_clause) + "'"));
    }
  }

  for (std::size_t i = 0; i < perps.size(); ++i) {
    for (std::size_t j = i + 1; j < perps.size(); ++j) {
      const Perp& a = *perps[i].second;
      const Perp& b = *perps[j].second;
      const std::string key_a = clause_key(*perps[i].first);
      const std::string key_b = clause_key(*perps[j].first);
      if (key_a == key_b) continue;
      auto covered = [&index](const Segment& x, const Segment& y) {
        return index.collinear({x.first, x.second, y.first, y.second});
      };
      const bool collapsible = (covered(a.first, b.first) && covered(a.second, b.second)) ||
                               (covered(a.first, b.second) && covered(a.second, b.first));
      if (!collapsible) continue;
      const SemanticClause& later = *perps[j].first;
      out.push_back(make_finding("collinear-perp", later.loc, key_b,
                                 "'" + key_b + "' and '" + key_a +
                                     "' describe one perpendicularity; keep one clause"));
    }
  }

  sort_findings(out);
  return out;
}

std::vector<LintFinding> format_findings(const FormatReport& report) {
  std::vector<LintFinding> out;
  for (Category c : report.missing_tags) {
    const std::string name(to_string(c));
    out.push_back(make_finding("missing-tag", {}, "<" + name + ">",
                               "required section <" + name + "> is missing or not closed"));
  }
  for (const auto& d : report.diagnostics) {
    if (d.code == "malformed-tag" || d.code == "section-order" || d.code == "line-arity" ||
        d.code == "plane-arity") {
      out.push_back(make_finding(d.code, d.loc, {}, d.message));
    } else {
      out.push_back(make_finding("malformed-statement", d.loc, {}, d.message));
    }
  }
  sort_findings(out);
  return out;
}

std::vector<LintFinding> parse_findings(const ParseResult& parsed) {
  std::vector<LintFinding> out;
  for (const auto& d : parsed.diagnostics) {
    if (d.inside_tag) continue;  // reported by format_findings
    const std::string rule =
        (d.code == "line-arity" || d.code == "plane-arity") ? d.code : "parse-error";
    out.push_back(make_finding(rule, d.loc, {}, d.message));
  }
  sort_findings(out);
  return out;
}

}  // namespace geoformal
