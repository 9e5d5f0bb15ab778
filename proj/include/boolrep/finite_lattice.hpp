#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "boolrep/bits.hpp"
#include "boolrep/ground_set.hpp"

namespace boolrep {

using CoverPair = std::pair<std::size_t, std::size_t>;  // (lower, upper)

class FiniteLattice {
 public:
  static constexpr std::size_t kDefaultMaxElements = 64;

  FiniteLattice() = default;

  // covers are pairs (a, b) meaning a < b; they need not be a transitive reduction.
  static FiniteLattice from_covers(std::vector<std::string> labels, std::span<const CoverPair> covers,
                                   std::size_t max_elements = kDefaultMaxElements);
  static FiniteLattice from_order(std::vector<std::string> labels,
                                  const std::function<bool(std::size_t, std::size_t)>& leq,
                                  std::size_t max_elements = kDefaultMaxElements);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t x) const { return labels_.at(x); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<std::size_t> find(std::string_view label) const;
  std::size_t index_of(std::string_view label) const;

  bool leq(std::size_t a, std::size_t b) const { return leq_[a * size() + b] != 0; }
  bool less(std::size_t a, std::size_t b) const { return a != b && leq(a, b); }
  std::size_t join(std::size_t a, std::size_t b) const { return join_[a * size() + b]; }
  std::size_t meet(std::size_t a, std::size_t b) const { return meet_[a * size() + b]; }
  std::size_t join_all(std::span<const std::size_t> xs) const;  // bottom for an empty span
  std::size_t meet_all(std::span<const std::size_t> xs) const;  // top for an empty span
  std::size_t top() const { return top_; }
  std::size_t bottom() const { return bottom_; }

  const std::vector<std::size_t>& upper_covers(std::size_t x) const { return up_.at(x); }
  const std::vector<std::size_t>& lower_covers(std::size_t x) const { return down_.at(x); }
  std::vector<CoverPair> cover_pairs() const;
  bool covers(std::size_t upper, std::size_t lower) const;

  // Longest chain from the bottom to x, in edges.
  std::size_t rank_of(std::size_t x) const { return rank_.at(x); }
  std::size_t height() const { return rank_.at(top_); }

  std::vector<std::size_t> down_set(std::size_t x) const;
  std::vector<std::size_t> elements() const;

  friend bool operator==(const FiniteLattice& a, const FiniteLattice& b) {
    return a.labels_ == b.labels_ && a.leq_ == b.leq_;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<std::uint8_t> leq_;
  std::vector<std::uint16_t> join_;
  std::vector<std::uint16_t> meet_;
  std::vector<std::vector<std::size_t>> up_;
  std::vector<std::vector<std::size_t>> down_;
  std::vector<std::size_t> rank_;
  std::size_t top_ = 0;
  std::size_t bottom_ = 0;

  void build(std::size_t max_elements);
};

FiniteLattice lattice_from_covers(std::vector<std::string> elements, std::span<const CoverPair> covers);
std::size_t height(const FiniteLattice& l);
std::vector<std::size_t> sji_elements(const FiniteLattice& l);
std::vector<std::size_t> smi_elements(const FiniteLattice& l);
std::vector<std::size_t> atoms(const FiniteLattice& l);

// A lattice with a join-generating set E not containing the bottom.
class VGenLattice {
 public:
  VGenLattice() = default;
  VGenLattice(FiniteLattice lattice, std::vector<std::size_t> gens);

  const FiniteLattice& lattice() const { return lattice_; }
  // Sorted element indices; subsets of E are masks over positions in this list.
  const std::vector<std::size_t>& gens() const { return gens_; }
  std::size_t gen_count() const { return gens_.size(); }
  GroundSet ground() const;
  std::optional<std::size_t> gen_position(std::size_t element) const;

  // Z_x: generators below x.
  Mask gens_below(std::size_t x) const { return below_.at(x); }
  std::size_t join_of(Mask gen_subset) const;

  friend bool operator==(const VGenLattice&, const VGenLattice&) = default;

 private:
  FiniteLattice lattice_;
  std::vector<std::size_t> gens_;
  std::vector<Mask> below_;
};

}  // namespace boolrep
