#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "boolrep/bits.hpp"

namespace boolrep {

// Ordered, labelled ground set; subsets are masks over label positions.
class GroundSet {
 public:
  static constexpr std::size_t kMaxSize = 64;

  GroundSet() = default;
  explicit GroundSet(std::vector<std::string> labels);

  // Points labelled "1".."n".
  static GroundSet numbered(std::size_t n);

  std::size_t size() const { return labels_.size(); }
  Mask full() const { return low_bits(labels_.size()); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }

  std::optional<std::size_t> find(std::string_view label) const;
  std::size_t index_of(std::string_view label) const;  // throws UnknownColumn

  Mask subset(std::span<const std::string> labels) const;
  // Accepts "124" when every label is one character, else comma/space separated.
  Mask parse_subset(std::string_view text) const;

  std::vector<std::string> members(Mask m) const;
  // "124" for one-character labels, "{a,bc}" otherwise; the empty set is "{}".
  std::string format(Mask m) const;

  bool compact() const { return compact_; }

  friend bool operator==(const GroundSet& a, const GroundSet& b) { return a.labels_ == b.labels_; }

 private:
  std::vector<std::string> labels_;
  bool compact_ = true;
};

}  // namespace boolrep
