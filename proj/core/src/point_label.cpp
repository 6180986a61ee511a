#include "geoformal/point_label.hpp"

#include <cctype>

namespace geoformal {

namespace {

bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

// Reads one label starting at `pos`; advances `pos` past it on success.
bool read_label(std::string_view run, std::size_t& pos, PointLabel& out) {
  std::size_t i = pos;
  if (i >= run.size() || !is_upper(run[i])) return false;
  PointLabel label;
  label.base = run[i++];
  while (i < run.size() && run[i] == '\'') {
    ++label.primes;
    ++i;
  }
  if (i < run.size() && run[i] == '_') {
    ++i;
    bool braced = false;
    if (i < run.size() && run[i] == '{') {
      braced = true;
      ++i;
    }
    const std::size_t digits_begin = i;
    while (i < run.size() && is_digit(run[i])) ++i;
    if (i == digits_begin) return false;
    label.subscript.assign(run.substr(digits_begin, i - digits_begin));
    if (braced) {
      if (i >= run.size() || run[i] != '}') return false;
      ++i;
    }
  }
  out = std::move(label);
  pos = i;
  return true;
}

}  // namespace

std::string PointLabel::str() const {
  std::string out(1, base);
  out.append(static_cast<std::size_t>(primes), '\'');
  if (!subscript.empty()) {
    out += "_{";
    out += subscript;
    out += '}';
  }
  return out;
}

std::strong_ordering PointLabel::operator<=>(const PointLabel& other) const {
  if (auto c = base <=> other.base; c != 0) return c;
  if (auto c = primes <=> other.primes; c != 0) return c;
  // numeric-looking order: shorter digit strings first, then lexical
  if (auto c = subscript.size() <=> other.subscript.size(); c != 0) return c;
  return subscript.compare(other.subscript) <=> 0;
}

MalformedPointRun::MalformedPointRun(std::string run, std::size_t offset)
    : std::runtime_error("malformed point run '" + run + "' at offset " +
                         std::to_string(offset)),
      run_(std::move(run)),
      offset_(offset) {}

bool try_split_point_run(std::string_view run, std::vector<PointLabel>& out) {
  out.clear();
  std::size_t pos = 0;
  while (pos < run.size()) {
    PointLabel label;
    if (!read_label(run, pos, label)) return false;
    out.push_back(std::move(label));
  }
  return !out.empty();
}

std::vector<PointLabel> split_point_run(std::string_view run) {
  std::vector<PointLabel> out;
  std::size_t pos = 0;
  while (pos < run.size()) {
    PointLabel label;
    if (!read_label(run, pos, label)) throw MalformedPointRun(std::string(run), pos);
    out.push_back(std::move(label));
  }
  if (out.empty()) throw MalformedPointRun(std::string(run), 0);
  return out;
}

PointLabel parse_point_label(std::string_view text) {
  auto labels = split_point_run(text);
  if (labels.size() != 1) throw MalformedPointRun(std::string(text), 0);
  return labels.front();
}

std::string join_labels(const std::vector<PointLabel>& labels, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += sep;
    out += labels[i].str();
  }
  return out;
}

}  // namespace geoformal
