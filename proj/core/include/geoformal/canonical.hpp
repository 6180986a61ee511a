#pragma once

#include <array>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "geoformal/document.hpp"

namespace geoformal {

/// Matching options. Both documents of a comparison must share them.
struct CanonicalMode {
  /// Planes and pyramid bases compare as cycles up to rotation and
  /// reflection instead of as unordered point sets.
  bool strict_cyclic = false;
  /// Arc endpoints keep their order (`m \widehat AB` differs from `BA`).
  bool ordered_arcs = false;

  bool operator==(const CanonicalMode&) const = default;
};

/// Canonical keys are themselves statements in canonical form, so a
/// CanonicalDocument renders to text that parses back to the same keys.
std::string canonical_key(const PointLabel& point);
std::string canonical_key(const Line& line);
std::string canonical_key(const Circle& circle);
std::string canonical_key(const Plane& plane, const CanonicalMode& mode);
std::string canonical_key(const Solid& solid, const CanonicalMode& mode);
std::string canonical_key(const SemanticClause& clause, const CanonicalMode& mode);

/// Lexicographically smallest sequence among all rotations and reflections.
std::vector<PointLabel> min_dihedral(const std::vector<PointLabel>& cycle);

/// Per-category sets of canonical keys.
struct CanonicalDocument {
  Domain domain = Domain::plane;
  CanonicalMode mode;
  std::array<std::set<std::string>, kCategoryCount> keys;
  std::vector<SolidKind> solid_kinds;  // one per distinct solid key, sorted

  const std::set<std::string>& operator[](Category c) const {
    return keys[static_cast<std::size_t>(c)];
  }
  std::set<std::string>& operator[](Category c) { return keys[static_cast<std::size_t>(c)]; }

  bool operator==(const CanonicalDocument&) const = default;
};

CanonicalDocument canonicalize(const Document& doc, const CanonicalMode& mode = {});

/// Tagged rendering of the keys, one statement per line.
std::string render(const CanonicalDocument& doc);

/// Deterministic serialization of the document as written (names, point
/// order and statement order preserved). Tagged output always carries the
/// full tag set of the document's domain.
std::string render(const Document& doc, Dialect dialect = Dialect::tagged);

std::string render_statement(const Line& line);
std::string render_statement(const Circle& circle);
std::string render_statement(const Plane& plane);
std::string render_statement(const Solid& solid);
std::string render_statement(const SemanticClause& clause);

}  // namespace geoformal
