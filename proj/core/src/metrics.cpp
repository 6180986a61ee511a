#include "geoformal/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iterator>

#include "geoformal/parser.hpp"

namespace geoformal {

namespace {

std::size_t intersection_size(const std::set<std::string>& a, const std::set<std::string>& b) {
  std::size_t n = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++n;
      ++i;
      ++j;
    }
  }
  return n;
}

double percent(std::size_t num, std::size_t den) {
  return den ? 100.0 * static_cast<double>(num) / static_cast<double>(den) : 0.0;
}

std::string fixed1(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", round1(value));
  return buf;
}

}  // namespace

MatchResult match_pair(const CanonicalDocument& pred, const CanonicalDocument& ref) {
  if (!(pred.mode == ref.mode)) throw ModeMismatch();
  MatchResult out;
  for (Category c : kAllCategories) {
    out[c] = {intersection_size(pred[c], ref[c]), pred[c].size(), ref[c].size()};
  }
  out.solid_type_match = pred.solid_kinds == ref.solid_kinds;
  return out;
}

PRF category_prf(std::size_t tp, std::size_t pred, std::size_t ref) {
  PRF out;
  out.precision = pred ? percent(tp, pred) : (ref ? 0.0 : 100.0);
  out.recall = ref ? percent(tp, ref) : (pred ? 0.0 : 100.0);
  const double sum = out.precision + out.recall;
  out.f1 = sum > 0 ? 2.0 * out.precision * out.recall / sum : 0.0;
  return out;
}

ScoredPair prepare_pair(std::string_view prediction, std::string_view reference, Domain domain,
                        const CanonicalMode& mode) {
  return {canonicalize(parse_document(prediction, domain).document, mode),
          canonicalize(parse_document(reference, domain).document, mode), domain};
}

std::string_view to_string(Aggregation aggregation) {
  return aggregation == Aggregation::micro ? "micro" : "macro";
}

CorpusReport score_corpus(const std::vector<ScoredPair>& pairs, Aggregation aggregation) {
  if (pairs.empty()) throw EmptyCorpus();
  const Domain domain = pairs.front().domain;
  for (const auto& p : pairs)
    if (p.domain != domain) throw MixedDomains();

  const auto scored = scored_categories(domain);
  CorpusReport report;
  report.domain = domain;
  report.aggregation = aggregation;
  report.samples = pairs.size();

  std::map<Category, std::size_t> exact;
  std::map<Category, PRF> macro_sum;
  std::size_t perfect = 0;
  std::size_t kinds_agree = 0;
  for (const auto& pair : pairs) {
    const MatchResult m = match_pair(pair.pred, pair.ref);
    bool all_exact = true;
    for (Category c : scored) {
      Counts& t = report.totals[c];
      t.tp += m[c].tp;
      t.pred += m[c].pred;
      t.ref += m[c].ref;
      if (m[c].exact()) {
        ++exact[c];
      } else {
        all_exact = false;
      }
      const PRF s = category_prf(m[c]);
      PRF& acc = macro_sum[c];
      acc.precision += s.precision;
      acc.recall += s.recall;
      acc.f1 += s.f1;
    }
    perfect += all_exact ? 1 : 0;
    kinds_agree += m.solid_type_match ? 1 : 0;
  }

  const double n = static_cast<double>(pairs.size());
  for (Category c : scored) {
    if (aggregation == Aggregation::micro) {
      report.categories[c] = category_prf(report.totals[c]);
    } else {
      const PRF& s = macro_sum[c];
      report.categories[c] = {s.precision / n, s.recall / n, s.f1 / n};
    }
    report.sample_accuracy[c] = percent(exact[c], pairs.size());
  }
  report.ppr = percent(perfect, pairs.size());

  double overall = 0;
  std::size_t parts = 0;
  for (Category c : scored) {
    if (c == Category::solids) continue;
    overall += report.categories[c].f1;
    ++parts;
  }
  if (domain == Domain::solid) {
    report.solids_accuracy = percent(kinds_agree, pairs.size());
    overall += *report.solids_accuracy;
    ++parts;
  }
  report.overall = overall / static_cast<double>(parts);
  return report;
}

double round1(double percent) { return std::round(percent * 10.0) / 10.0; }

std::string render_table(const CorpusReport& report) {
  std::string out;
  char line[128];
  std::snprintf(line, sizeof line, "domain: %s  samples: %zu  aggregation: %s\n",
                std::string(to_string(report.domain)).c_str(), report.samples,
                std::string(to_string(report.aggregation)).c_str());
  out += line;
  std::snprintf(line, sizeof line, "%-10s %7s %7s %7s %7s\n", "category", "P", "R", "F1", "SA");
  out += line;
  for (const auto& [category, prf] : report.categories) {
    std::snprintf(line, sizeof line, "%-10s %7s %7s %7s %7s\n",
                  std::string(to_string(category)).c_str(), fixed1(prf.precision).c_str(),
                  fixed1(prf.recall).c_str(), fixed1(prf.f1).c_str(),
                  fixed1(report.sample_accuracy.at(category)).c_str());
    out += line;
  }
  if (report.solids_accuracy) out += "solids acc  " + fixed1(*report.solids_accuracy) + "\n";
  out += "PPR         " + fixed1(report.ppr) + "\n";
  out += "overall     " + fixed1(report.overall) + "\n";
  return out;
}

}  // namespace geoformal
