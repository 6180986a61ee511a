#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace geoformal {

/// Exact rational with a positive denominator in lowest terms. Only values
/// parsed from decimal literals are ever constructed, so denominators are
/// products of 2s and 5s and always have a terminating decimal rendering.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_ == 0; }

  /// Parses `[-]digits[.digits]`; empty on anything else or on overflow.
  static std::optional<Rational> parse_decimal(std::string_view text);

  /// Shortest exact decimal rendering ("5", "2.5", "-0.125").
  std::string decimal() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a) { return Rational(-a.num_, a.den_); }
  bool operator==(const Rational&) const = default;
  std::strong_ordering operator<=>(const Rational& other) const;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// `coefficient * variable + constant`; a pure number has no variable.
struct LinearForm {
  Rational coefficient;
  std::string variable;
  Rational constant;

  bool is_number() const { return variable.empty(); }
  bool operator==(const LinearForm&) const = default;
};

/// Right-hand side of a measure clause. Numbers compare by value, univariate
/// linear forms by (coefficient, variable, constant), anything else by its
/// whitespace-stripped text.
struct Expr {
  std::string raw;  // whitespace-collapsed source text
  std::optional<LinearForm> parsed;

  static Expr from_text(std::string_view text);

  /// Canonical text; re-parsing it yields the same key.
  std::string key() const;
  bool is_number(const Rational& value) const;
};

}  // namespace geoformal
