#include "boolrep/ground_set.hpp"

#include <algorithm>
#include <set>

#include "boolrep/error.hpp"

namespace boolrep {

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.size() > kMaxSize)
    fail(ErrorKind::TooLarge, "ground set has " + std::to_string(labels_.size()) +
                                  " points, limit is 64");
  std::set<std::string_view> seen;
  for (const auto& l : labels_) {
    if (l.empty()) fail(ErrorKind::ParseError, "empty label");
    if (!seen.insert(l).second) fail(ErrorKind::ParseError, "duplicate label '" + l + "'");
    if (l.size() != 1) compact_ = false;
  }
}

GroundSet GroundSet::numbered(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return GroundSet(std::move(labels));
}

std::optional<std::size_t> GroundSet::find(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

std::size_t GroundSet::index_of(std::string_view label) const {
  if (auto i = find(label)) return *i;
  fail(ErrorKind::UnknownColumn, "unknown label '" + std::string(label) + "'");
}

Mask GroundSet::subset(std::span<const std::string> labels) const {
  Mask m = 0;
  for (const auto& l : labels) m |= bit(index_of(l));
  return m;
}

Mask GroundSet::parse_subset(std::string_view text) const {
  Mask m = 0;
  std::string token;
  auto flush = [&] {
    if (!token.empty()) m |= bit(index_of(token));
    token.clear();
  };
  for (char c : text) {
    if (c == '{' || c == '}' || c == ',' || c == ' ') {
      flush();
    } else if (compact_) {
      token = std::string(1, c);
      flush();
    } else {
      token += c;
    }
  }
  flush();
  return m;
}

std::vector<std::string> GroundSet::members(Mask m) const {
  std::vector<std::string> out;
  for_each_bit(m, [&](std::size_t i) { out.push_back(labels_.at(i)); });
  return out;
}

std::string GroundSet::format(Mask m) const {
  if (m == 0) return "{}";
  std::string out;
  if (compact_) {
    for_each_bit(m, [&](std::size_t i) { out += labels_.at(i); });
    return out;
  }
  out = "{";
  bool first = true;
  for_each_bit(m, [&](std::size_t i) {
    if (!first) out += ',';
    out += labels_.at(i);
    first = false;
  });
  return out + "}";
}

}  // namespace boolrep
