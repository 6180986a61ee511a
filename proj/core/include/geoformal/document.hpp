#pragma once

#include <compare>
#include <array>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "geoformal/expr.hpp"
#include "geoformal/point_label.hpp"

namespace geoformal {

enum class Domain { plane, solid };
enum class Dialect { tagged, headed };

/// Primitive categories, in canonical section order.
enum class Category { points, lines, circles, semantics, planes, solids };
inline constexpr std::size_t kCategoryCount = 6;
inline constexpr std::array<Category, kCategoryCount> kAllCategories = {
    Category::points,    Category::lines,  Category::circles,
    Category::semantics, Category::planes, Category::solids};

std::string_view to_string(Domain domain);
std::string_view to_string(Dialect dialect);
std::string_view to_string(Category category);
std::optional<Domain> domain_from_string(std::string_view text);
std::optional<Category> category_from_string(std::string_view text);

/// Sections a tagged document of this domain must carry.
std::span<const Category> required_sections(Domain domain);

/// Categories that are scored for this domain (reward and corpus metrics).
/// Plane: points, lines, circles, semantics. Solid: points, lines, circles,
/// planes, solids.
std::span<const Category> scored_categories(Domain domain);

enum class SolidKind { Cube, Prism, Pyramid, Frustum, Cylinder, Cone, FrustumCone, Spheroid };

std::string_view to_string(SolidKind kind);
/// Case-insensitive; accepts the `Spheriod` spelling.
std::optional<SolidKind> solid_kind_from_string(std::string_view text);

struct SourceLoc {
  int line = 0;
  int column = 0;

  auto operator<=>(const SourceLoc&) const = default;
};

using Segment = std::pair<PointLabel, PointLabel>;

struct Line {
  std::vector<PointLabel> points;
  std::optional<std::string> name;
  SourceLoc loc;
};

struct Circle {
  PointLabel center;
  std::vector<PointLabel> on_points;
  SourceLoc loc;
};

struct Plane {
  std::vector<PointLabel> points;
  SourceLoc loc;
};

struct Solid {
  SolidKind kind = SolidKind::Cube;
  std::vector<std::vector<PointLabel>> groups;
  SourceLoc loc;
};

/// Returns an explanation when the group shape is invalid for the kind.
std::optional<std::string> check_solid_shape(const Solid& solid);

struct SegmentEq {
  Segment lhs;
  std::variant<Expr, Segment> rhs;
};

struct AngleMeasure {
  PointLabel p1, vertex, p3;
  Expr value;
};

struct ArcMeasure {
  PointLabel p1, p2;
  Expr value;
};

struct Perp {
  Segment first, second;
  std::optional<PointLabel> foot;
};

struct Parallel {
  Segment first, second;
};

struct SemanticClause {
  std::variant<SegmentEq, AngleMeasure, ArcMeasure, Perp, Parallel> clause;
  SourceLoc loc;
};

/// Every label a clause mentions, in textual order.
std::vector<PointLabel> referenced_points(const SemanticClause& clause);

struct Document {
  Domain domain = Domain::plane;
  Dialect dialect = Dialect::tagged;
  std::set<PointLabel> points;
  std::vector<Line> lines;
  std::vector<Circle> circles;
  std::vector<Plane> planes;
  std::vector<Solid> solids;
  std::vector<SemanticClause> semantics;
};

}  // namespace geoformal
