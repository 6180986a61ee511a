#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "geoformal/canonical.hpp"
#include "geoformal/document.hpp"

namespace geoformal {

struct Counts {
  std::size_t tp = 0;    // |pred ∩ ref|
  std::size_t pred = 0;
  std::size_t ref = 0;

  bool exact() const { return tp == pred && tp == ref; }
  bool operator==(const Counts&) const = default;
};

struct MatchResult {
  std::array<Counts, kCategoryCount> counts;
  bool solid_type_match = true;  // equal multisets of solid kinds

  const Counts& operator[](Category c) const { return counts[static_cast<std::size_t>(c)]; }
  Counts& operator[](Category c) { return counts[static_cast<std::size_t>(c)]; }
};

class ModeMismatch : public std::invalid_argument {
 public:
  ModeMismatch() : std::invalid_argument("documents were canonicalized with different modes") {}
};

class EmptyCorpus : public std::invalid_argument {
 public:
  EmptyCorpus() : std::invalid_argument("corpus is empty") {}
};

class MixedDomains : public std::invalid_argument {
 public:
  MixedDomains() : std::invalid_argument("corpus mixes plane and solid samples") {}
};

/// Per-category intersection counts. Throws ModeMismatch when the two
/// documents were canonicalized under different modes.
MatchResult match_pair(const CanonicalDocument& pred, const CanonicalDocument& ref);

/// Percentages. An empty side is judged against the other: P = 100 when
/// nothing was predicted and nothing was expected, 0 when something was
/// missed; R likewise. F1 is 0 when P + R is 0.
struct PRF {
  double precision = 0;
  double recall = 0;
  double f1 = 0;
};
PRF category_prf(std::size_t tp, std::size_t pred, std::size_t ref);
inline PRF category_prf(const Counts& c) { return category_prf(c.tp, c.pred, c.ref); }

enum class Aggregation { micro, macro };
std::string_view to_string(Aggregation aggregation);

struct ScoredPair {
  CanonicalDocument pred;
  CanonicalDocument ref;
  Domain domain = Domain::plane;
};

/// Parses and canonicalizes a text pair. Prediction statements that fail to
/// parse contribute nothing, so an unparseable prediction scores as empty.
ScoredPair prepare_pair(std::string_view prediction, std::string_view reference, Domain domain,
                        const CanonicalMode& mode = {});

/// Corpus-level report; every value is a percentage.
struct CorpusReport {
  Domain domain = Domain::plane;
  Aggregation aggregation = Aggregation::micro;
  std::size_t samples = 0;
  std::map<Category, PRF> categories;         // scored categories of the domain
  std::map<Category, Counts> totals;          // summed counts
  std::map<Category, double> sample_accuracy; // exact-match rate per category
  double ppr = 0;                             // all scored categories exact
  std::optional<double> solids_accuracy;      // solid kinds agree (solid domain)
  double overall = 0;
};

/// Throws EmptyCorpus or MixedDomains.
CorpusReport score_corpus(const std::vector<ScoredPair>& pairs,
                          Aggregation aggregation = Aggregation::micro);

/// Rounds a percentage to one decimal, half away from zero.
double round1(double percent);

/// Fixed-width text table of the report.
std::string render_table(const CorpusReport& report);

}  // namespace geoformal
