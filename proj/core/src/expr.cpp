#include "geoformal/expr.hpp"

#include <cctype>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace geoformal {

namespace {

constexpr std::size_t kMaxDigits = 15;

bool mul_overflows(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  return __builtin_mul_overflow(a, b, &out);
}

std::string collapse_whitespace(std::string_view text) {
  std::string out;
  bool pending_space = false;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out += ' ';
    pending_space = false;
    out += c;
  }
  return out;
}

std::string strip_whitespace(std::string_view text) {
  std::string out;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

// Parses sums of terms `[+-] (NUM ['*'] [VAR] | VAR)` over at most one
// lowercase variable. Returns empty for anything outside that shape.
std::optional<LinearForm> parse_linear(std::string_view text) {
  if (text.empty()) return std::nullopt;
  LinearForm form;
  bool have_coefficient = false;
  std::size_t i = 0;
  bool first = true;
  while (i < text.size()) {
    bool negative = false;
    if (text[i] == '+' || text[i] == '-') {
      negative = text[i] == '-';
      ++i;
    } else if (!first) {
      return std::nullopt;
    }
    first = false;

    const std::size_t num_begin = i;
    while (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '.'))
      ++i;
    std::optional<Rational> number;
    if (i > num_begin) {
      number = Rational::parse_decimal(text.substr(num_begin, i - num_begin));
      if (!number) return std::nullopt;
      if (i < text.size() && text[i] == '*') {
        ++i;
        if (i >= text.size() || !std::islower(static_cast<unsigned char>(text[i])))
          return std::nullopt;
      }
    }

    const std::size_t var_begin = i;
    while (i < text.size() && std::islower(static_cast<unsigned char>(text[i]))) ++i;
    std::string variable(text.substr(var_begin, i - var_begin));
    if (!number && variable.empty()) return std::nullopt;

    Rational value = number.value_or(Rational(1));
    if (negative) value = -value;
    if (variable.empty()) {
      form.constant = form.constant + value;
    } else {
      if (have_coefficient && variable != form.variable) return std::nullopt;
      form.variable = variable;
      form.coefficient = form.coefficient + value;
      have_coefficient = true;
    }
  }
  if (form.coefficient.is_zero()) {
    form.variable.clear();
    form.coefficient = Rational(0);
  }
  return form;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  num_ = g ? num / g : 0;
  den_ = g ? den / g : 1;
}

std::optional<Rational> Rational::parse_decimal(std::string_view text) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  std::int64_t num = 0;
  std::int64_t den = 1;
  std::size_t digits = 0;
  bool seen_point = false;
  bool seen_digit_after_point = false;
  for (char c : text) {
    if (c == '.') {
      if (seen_point) return std::nullopt;
      seen_point = true;
      continue;
    }
    if (c < '0' || c > '9') return std::nullopt;
    if (num != 0 || c != '0') ++digits;
    if (digits > kMaxDigits) return std::nullopt;
    num = num * 10 + (c - '0');
    if (seen_point) {
      if (den > std::numeric_limits<std::int64_t>::max() / 10) return std::nullopt;
      den *= 10;
      seen_digit_after_point = true;
    }
  }
  if (text.empty() || text == ".") return std::nullopt;
  if (seen_point && !seen_digit_after_point && text.front() == '.') return std::nullopt;
  return Rational(negative ? -num : num, den);
}

std::string Rational::decimal() const {
  std::string sign = num_ < 0 ? "-" : "";
  std::int64_t num = num_ < 0 ? -num_ : num_;
  if (den_ == 1) return sign + std::to_string(num);
  // scale to a power of ten; den_ only has factors 2 and 5
  std::int64_t den = den_;
  std::int64_t scale = 1;
  int places = 0;
  while (scale % den_ != 0) {
    scale *= 10;
    ++places;
  }
  const std::int64_t scaled = num * (scale / den);
  std::string digits = std::to_string(scaled);
  if (static_cast<int>(digits.size()) <= places)
    digits.insert(0, static_cast<std::size_t>(places) - digits.size() + 1, '0');
  digits.insert(digits.size() - static_cast<std::size_t>(places), 1, '.');
  return sign + digits;
}

Rational operator+(const Rational& a, const Rational& b) {
  if (mul_overflows(a.num_, b.den_) || mul_overflows(b.num_, a.den_) ||
      mul_overflows(a.den_, b.den_))
    throw std::overflow_error("rational overflow");
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

std::strong_ordering Rational::operator<=>(const Rational& other) const {
  const __int128 lhs = static_cast<__int128>(num_) * other.den_;
  const __int128 rhs = static_cast<__int128>(other.num_) * den_;
  return lhs < rhs ? std::strong_ordering::less
                   : (lhs > rhs ? std::strong_ordering::greater : std::strong_ordering::equal);
}

Expr Expr::from_text(std::string_view text) {
  Expr expr;
  expr.raw = collapse_whitespace(text);
  try {
    expr.parsed = parse_linear(strip_whitespace(text));
  } catch (const std::overflow_error&) {
    expr.parsed.reset();
  }
  return expr;
}

std::string Expr::key() const {
  if (!parsed) return strip_whitespace(raw);
  const LinearForm& form = *parsed;
  if (form.is_number()) return form.constant.decimal();
  std::string out;
  if (form.coefficient == Rational(1)) {
    out = form.variable;
  } else if (form.coefficient == Rational(-1)) {
    out = "-" + form.variable;
  } else {
    out = form.coefficient.decimal() + form.variable;
  }
  if (!form.constant.is_zero()) {
    if (form.constant < Rational(0)) {
      out += " - " + (-form.constant).decimal();
    } else {
      out += " + " + form.constant.decimal();
    }
  }
  return out;
}

bool Expr::is_number(const Rational& value) const {
  return parsed && parsed->is_number() && parsed->constant == value;
}

}  // namespace geoformal
