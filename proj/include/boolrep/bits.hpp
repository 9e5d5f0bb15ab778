#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace boolrep {

// Subsets of a ground set of at most 64 points, packed one bit per point.
using Mask = std::uint64_t;

constexpr Mask bit(std::size_t i) { return Mask{1} << i; }

constexpr Mask low_bits(std::size_t n) { return n >= 64 ? ~Mask{0} : bit(n) - 1; }

constexpr int popcount(Mask m) { return std::popcount(m); }

constexpr bool is_subset(Mask a, Mask b) { return (a & ~b) == 0; }

constexpr bool contains(Mask m, std::size_t i) { return (m >> i) & 1U; }

constexpr std::size_t lowest(Mask m) { return static_cast<std::size_t>(std::countr_zero(m)); }

template <class F>
void for_each_bit(Mask m, F&& f) {
  while (m) {
    f(lowest(m));
    m &= m - 1;
  }
}

inline std::vector<std::size_t> bits_of(Mask m) {
  std::vector<std::size_t> out;
  out.reserve(static_cast<std::size_t>(popcount(m)));
  for_each_bit(m, [&](std::size_t i) { out.push_back(i); });
  return out;
}

// Size first, then lexicographic on the sorted element lists.
constexpr bool subset_less(Mask a, Mask b) {
  if (popcount(a) != popcount(b)) return popcount(a) < popcount(b);
  if (a == b) return false;
  return contains(a, lowest(a ^ b));
}

}  // namespace boolrep
