#pragma once

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace geoformal {

/// A vertex name: one uppercase letter, any number of primes, and an
/// optional numeric subscript (`A`, `B'`, `A_1`, `O_{12}`).
struct PointLabel {
  char base = 'A';
  int primes = 0;
  std::string subscript;  // digits only; empty when absent

  /// Renders as base, primes, then `_{subscript}`.
  std::string str() const;

  bool operator==(const PointLabel&) const = default;
  std::strong_ordering operator<=>(const PointLabel& other) const;
};

class MalformedPointRun : public std::runtime_error {
 public:
  MalformedPointRun(std::string run, std::size_t offset);

  const std::string& run() const noexcept { return run_; }
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::string run_;
  std::size_t offset_;
};

/// Splits a concatenation of labels ("A_{1}BC") greedily left to right.
/// Throws MalformedPointRun when a residue cannot start a new label.
std::vector<PointLabel> split_point_run(std::string_view run);

/// Non-throwing variant; returns false and leaves `out` unspecified on error.
bool try_split_point_run(std::string_view run, std::vector<PointLabel>& out);

/// Parses exactly one label; throws MalformedPointRun otherwise.
PointLabel parse_point_label(std::string_view text);

std::string join_labels(const std::vector<PointLabel>& labels, std::string_view sep = "");

}  // namespace geoformal
