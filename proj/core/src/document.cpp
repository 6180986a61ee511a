#include "geoformal/document.hpp"

#include <algorithm>
#include <cctype>

namespace geoformal {

namespace {

constexpr std::array<Category, 4> kPlaneSections = {Category::points, Category::lines,
                                                    Category::circles, Category::semantics};
constexpr std::array<Category, 6> kSolidSections = kAllCategories;
constexpr std::array<Category, 5> kSolidScored = {Category::points, Category::lines,
                                                  Category::circles, Category::planes,
                                                  Category::solids};

bool iequals(std::string_view a, std::string_view b) {
  return a.size() == b.size() &&
         std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
           return std::tolower(static_cast<unsigned char>(x)) ==
                  std::tolower(static_cast<unsigned char>(y));
         });
}

void append_segment(std::vector<PointLabel>& out, const Segment& s) {
  out.push_back(s.first);
  out.push_back(s.second);
}

}  // namespace

std::string_view to_string(Domain domain) {
  return domain == Domain::plane ? "plane" : "solid";
}

std::string_view to_string(Dialect dialect) {
  return dialect == Dialect::tagged ? "tagged" : "headed";
}

std::string_view to_string(Category category) {
  switch (category) {
    case Category::points: return "points";
    case Category::lines: return "lines";
    case Category::circles: return "circles";
    case Category::semantics: return "semantics";
    case Category::planes: return "planes";
    case Category::solids: return "solids";
  }
  return "?";
}

std::optional<Domain> domain_from_string(std::string_view text) {
  if (text == "plane") return Domain::plane;
  if (text == "solid") return Domain::solid;
  return std::nullopt;
}

std::optional<Category> category_from_string(std::string_view text) {
  for (Category c : kAllCategories)
    if (to_string(c) == text) return c;
  return std::nullopt;
}

std::span<const Category> required_sections(Domain domain) {
  if (domain == Domain::plane) return kPlaneSections;
  return kSolidSections;
}

std::span<const Category> scored_categories(Domain domain) {
  if (domain == Domain::plane) return kPlaneSections;
  return kSolidScored;
}

std::string_view to_string(SolidKind kind) {
  switch (kind) {
    case SolidKind::Cube: return "Cube";
    case SolidKind::Prism: return "Prism";
    case SolidKind::Pyramid: return "Pyramid";
    case SolidKind::Frustum: return "Frustum";
    case SolidKind::Cylinder: return "Cylinder";
    case SolidKind::Cone: return "Cone";
    case SolidKind::FrustumCone: return "FrustumCone";
    case SolidKind::Spheroid: return "Spheroid";
  }
  return "?";
}

std::optional<SolidKind> solid_kind_from_string(std::string_view text) {
  static constexpr std::array<SolidKind, 8> kinds = {
      SolidKind::Cube,     SolidKind::Prism, SolidKind::Pyramid,     SolidKind::Frustum,
      SolidKind::Cylinder, SolidKind::Cone,  SolidKind::FrustumCone, SolidKind::Spheroid};
  for (SolidKind kind : kinds)
    if (iequals(text, to_string(kind))) return kind;
  if (iequals(text, "Spheriod")) return SolidKind::Spheroid;
  return std::nullopt;
}

std::optional<std::string> check_solid_shape(const Solid& solid) {
  const auto& g = solid.groups;
  std::vector<PointLabel> all;
  for (const auto& group : g) all.insert(all.end(), group.begin(), group.end());
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end())
    return "a point appears twice in the solid";

  switch (solid.kind) {
    case SolidKind::Cube:
    case SolidKind::Prism:
    case SolidKind::Frustum:
      if (g.size() != 2 || g[0].size() != g[1].size() || g[0].size() < 3)
        return "expected two faces of equal length >= 3, e.g. ABC-A_{1}B_{1}C_{1}";
      break;
    case SolidKind::Pyramid:
      if (g.size() != 2 || g[0].size() != 1 || g[1].size() < 3)
        return "expected apex and base of >= 3 points, e.g. O-ABC";
      break;
    case SolidKind::Cone:
      if (g.size() != 2 || g[0].size() != 1 || g[1].size() != 2)
        return "expected apex, base center and base point, e.g. P-OA";
      break;
    case SolidKind::Cylinder:
    case SolidKind::FrustumCone:
      if (g.size() != 2 || g[0].empty() || g[0].size() > 2 || g[1].empty() || g[1].size() > 2)
        return "expected centers O_{1}-O_{2} or side segments AD-BC";
      break;
    case SolidKind::Spheroid:
      if (g.empty() || g.size() > 2 || g[0].size() != 1 || (g.size() == 2 && g[1].empty()))
        return "expected center, optionally followed by surface points, e.g. O-ABCD";
      break;
  }
  return std::nullopt;
}

std::vector<PointLabel> referenced_points(const SemanticClause& clause) {
  std::vector<PointLabel> out;
  std::visit(
      [&out](const auto& c) {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, SegmentEq>) {
          append_segment(out, c.lhs);
          if (const auto* seg = std::get_if<Segment>(&c.rhs)) append_segment(out, *seg);
        } else if constexpr (std::is_same_v<T, AngleMeasure>) {
          out = {c.p1, c.vertex, c.p3};
        } else if constexpr (std::is_same_v<T, ArcMeasure>) {
          out = {c.p1, c.p2};
        } else if constexpr (std::is_same_v<T, Perp>) {
          append_segment(out, c.first);
          append_segment(out, c.second);
          if (c.foot) out.push_back(*c.foot);
        } else {
          append_segment(out, c.first);
          append_segment(out, c.second);
        }
      },
      clause.clause);
  return out;
}

}  // namespace geoformal
