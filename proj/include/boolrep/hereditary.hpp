#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "boolrep/bits.hpp"
#include "boolrep/flat_family.hpp"
#include "boolrep/ground_set.hpp"

namespace boolrep {

// A ground set E with a nonempty, downward closed family H of subsets.
class HereditaryCollection {
 public:
  static constexpr std::size_t kMaxGround = 24;

  HereditaryCollection() = default;

  static HereditaryCollection from_facets(GroundSet ground, std::span<const Mask> facets);
  static HereditaryCollection from_independents(GroundSet ground, std::span<const Mask> sets);
  // Keeps the subsets accepted by the predicate; the caller guarantees downward closure.
  template <class Pred>
  static HereditaryCollection from_predicate(GroundSet ground, Pred&& keep);

  const GroundSet& ground() const { return ground_; }
  std::size_t ground_size() const { return ground_.size(); }
  bool contains(Mask x) const { return x < member_.size() && member_[x]; }
  // Sorted by subset_less.
  const std::vector<Mask>& independents() const { return independents_; }
  std::vector<Mask> facets() const;
  std::size_t rank() const;

  const FlatFamily& flats() const;
  // Smallest flat containing x.
  Mask closure(Mask x) const;
  std::size_t rank_of(Mask x) const;

  friend bool operator==(const HereditaryCollection& a, const HereditaryCollection& b) {
    return a.ground_ == b.ground_ && a.independents_ == b.independents_;
  }

 private:
  struct Cache;

  GroundSet ground_;
  std::vector<Mask> independents_;
  std::vector<bool> member_;
  std::shared_ptr<Cache> cache_;

  static HereditaryCollection build(GroundSet ground, std::vector<bool> member);
  const Cache& cache() const;
};

template <class Pred>
HereditaryCollection HereditaryCollection::from_predicate(GroundSet ground, Pred&& keep) {
  std::vector<bool> member(std::size_t{1} << ground.size(), false);
  for (Mask x = 0; x < member.size(); ++x) member[x] = keep(x);
  return from_independents(ground, [&] {
    std::vector<Mask> sets;
    for (Mask x = 0; x < member.size(); ++x)
      if (member[x]) sets.push_back(x);
    return sets;
  }());
}

class RankFunction {
 public:
  RankFunction(std::size_t ground_size, std::vector<std::uint8_t> table)
      : n_(ground_size), table_(std::move(table)) {}

  std::size_t operator()(Mask x) const { return table_.at(x); }
  std::size_t ground_size() const { return n_; }

  bool monotone() const;
  // Every X has an independent subset I with |I| = r(I) = r(X).
  bool has_full_rank_subsets() const;
  // r(X) = |X| implies r(Y) = |Y| for Y inside X.
  bool full_rank_hereditary() const;
  bool satisfies_axioms() const { return monotone() && has_full_rank_subsets() && full_rank_hereditary(); }
  bool bounded_by_size() const;
  bool subadditive() const;
  bool submodular() const;

 private:
  std::size_t n_;
  std::vector<std::uint8_t> table_;
};

std::vector<Mask> circuits(const HereditaryCollection& hc);

bool is_flat(const HereditaryCollection& hc, Mask x);
bool is_flat_by_circuits(const HereditaryCollection& hc, Mask x);
const FlatFamily& flats(const HereditaryCollection& hc);
Mask closure(const HereditaryCollection& hc, Mask x);
// Repeatedly adds points p with p in C and C inside X+p for a circuit C.
Mask circuit_closure(const HereditaryCollection& hc, Mask x);

bool is_matroid(const HereditaryCollection& hc);
bool satisfies_pr(const HereditaryCollection& hc);
bool is_simple(const HereditaryCollection& hc);

RankFunction rank_function(const HereditaryCollection& hc);
std::vector<Mask> hyperplanes(const HereditaryCollection& hc);

struct Representability {
  bool representable = false;
  std::optional<Mask> counterexample;  // a smallest member of H with no closure ordering
};

Representability representability(const HereditaryCollection& hc);
bool is_boolean_representable(const HereditaryCollection& hc);
// x1..xk with Cl(x_i..x_k) strictly decreasing in i.
std::optional<std::vector<std::size_t>> closure_ordering(const HereditaryCollection& hc, Mask x);

HereditaryCollection truncation(const HereditaryCollection& hc, std::size_t k);
HereditaryCollection union_of(const HereditaryCollection& a, const HereditaryCollection& b);
HereditaryCollection intersection_of(const HereditaryCollection& a, const HereditaryCollection& b);
bool rank3_union_representable_hypothesis(const HereditaryCollection& a, const HereditaryCollection& b);

struct PavingClauses {
  bool no_small_circuits = false;
  bool lower_sets_independent = false;
  bool lower_sets_closed = false;
};

PavingClauses paving_clauses(const HereditaryCollection& hc);
bool is_paving(const HereditaryCollection& hc);
bool paving_representable(const HereditaryCollection& hc);

// Permutations of E (perm[e] = image of e) mapping H onto H.
std::vector<std::vector<std::size_t>> automorphisms(const HereditaryCollection& hc);
Mask apply_permutation(const std::vector<std::size_t>& perm, Mask x);

}  // namespace boolrep
