#include "geoformal/canonical.hpp"

#include <algorithm>
#include <variant>

namespace geoformal {

namespace {

using Labels = std::vector<PointLabel>;

Labels sorted(Labels labels) {
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  return labels;
}

Segment normalized(const Segment& s) {
  return s.first <= s.second ? s : Segment{s.second, s.first};
}

std::string seg_text(const Segment& s) { return s.first.str() + s.second.str(); }

std::string spaced(const Labels& labels) { return join_labels(labels, " "); }

// Best alignment of two equal-length faces under a simultaneous dihedral
// relabelling of the shared index.
std::pair<Labels, Labels> min_paired_faces(const Labels& base, const Labels& top) {
  const std::size_t n = base.size();
  std::pair<Labels, Labels> best{base, top};
  Labels b(n), t(n);
  for (std::size_t shift = 0; shift < n; ++shift) {
    for (int reflect = 0; reflect < 2; ++reflect) {
      for (std::size_t i = 0; i < n; ++i) {
        const std::size_t src = reflect ? (shift + n - i) % n : (shift + i) % n;
        b[i] = base[src];
        t[i] = top[src];
      }
      if (std::tie(b, t) < std::tie(best.first, best.second)) best = {b, t};
    }
  }
  return best;
}

std::string solid_text(SolidKind kind, const std::vector<Labels>& groups) {
  std::string out = "solid ";
  out += to_string(kind);
  out += ' ';
  for (std::size_t i = 0; i < groups.size(); ++i) {
    if (i) out += '-';
    out += join_labels(groups[i]);
  }
  return out;
}

std::string expr_text(const Expr& e) { return e.raw; }

void section(std::string& out, Category category, const std::vector<std::string>& body) {
  const std::string_view name = to_string(category);
  out += '<';
  out += name;
  out += ">\n";
  for (const auto& line : body) {
    out += line;
    out += '\n';
  }
  out += "</";
  out += name;
  out += ">\n";
}

bool emit_section(Domain domain, Category category, bool non_empty) {
  const auto req = required_sections(domain);
  return non_empty || std::find(req.begin(), req.end(), category) != req.end();
}

}  // namespace

std::vector<PointLabel> min_dihedral(const std::vector<PointLabel>& cycle) {
  const std::size_t n = cycle.size();
  Labels best = cycle;
  Labels candidate(n);
  for (std::size_t shift = 0; shift < n; ++shift) {
    for (int reflect = 0; reflect < 2; ++reflect) {
      for (std::size_t i = 0; i < n; ++i)
        candidate[i] = cycle[reflect ? (shift + n - i) % n : (shift + i) % n];
      if (candidate < best) best = candidate;
    }
  }
  return best;
}

std::string canonical_key(const PointLabel& point) { return "point " + point.str(); }

std::string canonical_key(const Line& line) {
  Labels reversed(line.points.rbegin(), line.points.rend());
  return "line " + spaced(std::min(line.points, reversed));
}

std::string canonical_key(const Circle& circle) {
  std::string out = "\\odot " + circle.center.str() + " lieson";
  for (const auto& p : sorted(circle.on_points)) out += " " + p.str();
  return out;
}

std::string canonical_key(const Plane& plane, const CanonicalMode& mode) {
  return "plane " + spaced(mode.strict_cyclic ? min_dihedral(plane.points) : sorted(plane.points));
}

std::string canonical_key(const Solid& solid, const CanonicalMode& mode) {
  std::vector<Labels> groups = solid.groups;
  switch (solid.kind) {
    case SolidKind::Cube:
    case SolidKind::Prism:
    case SolidKind::Frustum:
      if (groups.size() == 2 && groups[0].size() == groups[1].size()) {
        auto [base, top] = min_paired_faces(groups[0], groups[1]);
        groups = {std::move(base), std::move(top)};
      }
      break;
    case SolidKind::Pyramid:
      if (groups.size() == 2)
        groups[1] = mode.strict_cyclic ? min_dihedral(groups[1]) : sorted(groups[1]);
      break;
    case SolidKind::Cone:
      break;
    case SolidKind::Cylinder:
    case SolidKind::FrustumCone:
      for (auto& g : groups) g = sorted(g);
      std::sort(groups.begin(), groups.end());
      break;
    case SolidKind::Spheroid:
      if (groups.size() == 2) groups[1] = sorted(groups[1]);
      break;
  }
  return solid_text(solid.kind, groups);
}

std::string canonical_key(const SemanticClause& clause, const CanonicalMode& mode) {
  return std::visit(
      [&mode](const auto& c) -> std::string {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, SegmentEq>) {
          const Segment lhs = normalized(c.lhs);
          if (const auto* seg = std::get_if<Segment>(&c.rhs)) {
            Segment a = lhs;
            Segment b = normalized(*seg);
            if (b < a) std::swap(a, b);
            return seg_text(a) + " = " + seg_text(b);
          }
          return seg_text(lhs) + " = " + std::get<Expr>(c.rhs).key();
        } else if constexpr (std::is_same_v<T, AngleMeasure>) {
          const auto& [lo, hi] = std::minmax(c.p1, c.p3);
          return "m \\angle " + lo.str() + c.vertex.str() + hi.str() + " = " + c.value.key();
        } else if constexpr (std::is_same_v<T, ArcMeasure>) {
          Segment ends{c.p1, c.p2};
          if (!mode.ordered_arcs) ends = normalized(ends);
          return "m \\widehat " + seg_text(ends) + " = " + c.value.key();
        } else if constexpr (std::is_same_v<T, Perp>) {
          Segment a = normalized(c.first);
          Segment b = normalized(c.second);
          if (b < a) std::swap(a, b);
          std::string out = seg_text(a) + " \\perp " + seg_text(b);
          if (c.foot) out += " on " + c.foot->str();
          return out;
        } else {
          Segment a = normalized(c.first);
          Segment b = normalized(c.second);
          if (b < a) std::swap(a, b);
          return seg_text(a) + " \\parallel " + seg_text(b);
        }
      },
      clause.clause);
}

CanonicalDocument canonicalize(const Document& doc, const CanonicalMode& mode) {
  CanonicalDocument out;
  out.domain = doc.domain;
  out.mode = mode;
  for (const auto& p : doc.points) out[Category::points].insert(canonical_key(p));
  for (const auto& l : doc.lines) out[Category::lines].insert(canonical_key(l));
  for (const auto& c : doc.circles) out[Category::circles].insert(canonical_key(c));
  for (const auto& p : doc.planes) out[Category::planes].insert(canonical_key(p, mode));
  for (const auto& s : doc.semantics) out[Category::semantics].insert(canonical_key(s, mode));
  std::set<std::pair<std::string, SolidKind>> solids;
  for (const auto& s : doc.solids) solids.emplace(canonical_key(s, mode), s.kind);
  for (const auto& [key, kind] : solids) {
    out[Category::solids].insert(key);
    out.solid_kinds.push_back(kind);
  }
  std::sort(out.solid_kinds.begin(), out.solid_kinds.end());
  return out;
}

std::string render(const CanonicalDocument& doc) {
  std::string out;
  for (Category c : kAllCategories) {
    const auto& keys = doc[c];
    if (!emit_section(doc.domain, c, !keys.empty())) continue;
    section(out, c, std::vector<std::string>(keys.begin(), keys.end()));
  }
  return out;
}

std::string render_statement(const Line& line) {
  std::string out = "line ";
  if (line.name) out += *line.name + " lineson ";
  return out + spaced(line.points);
}

std::string render_statement(const Circle& circle) {
  std::string out = "\\odot " + circle.center.str() + " lieson";
  for (const auto& p : circle.on_points) out += " " + p.str();
  return out;
}

std::string render_statement(const Plane& plane) { return "plane " + spaced(plane.points); }

std::string render_statement(const Solid& solid) { return solid_text(solid.kind, solid.groups); }

std::string render_statement(const SemanticClause& clause) {
  return std::visit(
      [](const auto& c) -> std::string {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, SegmentEq>) {
          if (const auto* seg = std::get_if<Segment>(&c.rhs))
            return seg_text(c.lhs) + " = " + seg_text(*seg);
          return seg_text(c.lhs) + " = " + expr_text(std::get<Expr>(c.rhs));
        } else if constexpr (std::is_same_v<T, AngleMeasure>) {
          return "m \\angle " + c.p1.str() + c.vertex.str() + c.p3.str() + " = " +
                 expr_text(c.value);
        } else if constexpr (std::is_same_v<T, ArcMeasure>) {
          return "m \\widehat " + c.p1.str() + c.p2.str() + " = " + expr_text(c.value);
        } else if constexpr (std::is_same_v<T, Perp>) {
          std::string out = seg_text(c.first) + " \\perp " + seg_text(c.second);
          if (c.foot) out += " on " + c.foot->str();
          return out;
        } else {
          return seg_text(c.first) + " \\parallel " + seg_text(c.second);
        }
      },
      clause.clause);
}

std::string render(const Document& doc, Dialect dialect) {
  std::array<std::vector<std::string>, kCategoryCount> body;
  auto& points = body[static_cast<std::size_t>(Category::points)];
  if (dialect == Dialect::tagged) {
    for (const auto& p : doc.points) points.push_back("point " + p.str());
  } else if (!doc.points.empty()) {
    points.push_back("[" + join_labels({doc.points.begin(), doc.points.end()}, ", ") + "]");
  }
  for (const auto& l : doc.lines)
    body[static_cast<std::size_t>(Category::lines)].push_back(render_statement(l));
  for (const auto& c : doc.circles)
    body[static_cast<std::size_t>(Category::circles)].push_back(render_statement(c));
  for (const auto& s : doc.semantics)
    body[static_cast<std::size_t>(Category::semantics)].push_back(render_statement(s));
  for (const auto& p : doc.planes)
    body[static_cast<std::size_t>(Category::planes)].push_back(render_statement(p));
  for (const auto& s : doc.solids)
    body[static_cast<std::size_t>(Category::solids)].push_back(render_statement(s));

  std::string out;
  for (Category c : kAllCategories) {
    const auto& lines = body[static_cast<std::size_t>(c)];
    if (!emit_section(doc.domain, c, !lines.empty())) continue;
    if (dialect == Dialect::tagged) {
      section(out, c, lines);
      continue;
    }
    std::string title(to_string(c));
    title.front() = static_cast<char>(title.front() - 'a' + 'A');
    out += "**" + title + ":**\n";
    for (const auto& line : lines) out += line + "\n";
  }
  return out;
}

}  // namespace geoformal
