#pragma once

#include <cstddef>
#include <vector>

#include "boolrep/bits.hpp"
#include "boolrep/ground_set.hpp"

namespace boolrep {

// Intersection-closed family of subsets of E that contains E.
class FlatFamily {
 public:
  FlatFamily() = default;
  FlatFamily(GroundSet ground, std::vector<Mask> members);  // throws NotIntersectionClosed

  // The intersection closure of `generators` together with E.
  static FlatFamily closure_of(GroundSet ground, const std::vector<Mask>& generators);

  const GroundSet& ground() const { return ground_; }
  // Sorted by subset_less.
  const std::vector<Mask>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(Mask m) const;
  bool full() const { return contains(0); }

  // Smallest member containing x.
  Mask closure(Mask x) const;

  friend bool operator==(const FlatFamily&, const FlatFamily&) = default;

 private:
  GroundSet ground_;
  std::vector<Mask> members_;
};

// Lexicographic comparison of sorted member lists.
bool family_less(const FlatFamily& a, const FlatFamily& b);

}  // namespace boolrep
