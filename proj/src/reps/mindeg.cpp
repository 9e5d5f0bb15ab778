#include <algorithm>
#include <set>

#include "boolrep/error.hpp"
#include "boolrep/hereditary_io.hpp"
#include "boolrep/reps.hpp"

namespace boolrep {
namespace {

// Dynamic bitset over candidate rows.
class RowSet {
 public:
  explicit RowSet(std::size_t n = 0) : words_((n + 63) / 64, 0) {}
  void set(std::size_t i) { words_[i / 64] |= bit(i % 64); }
  void reset(std::size_t i) { words_[i / 64] &= ~bit(i % 64); }
  bool test(std::size_t i) const { return contains(words_[i / 64], i % 64); }
  bool intersects(const RowSet& o) const {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w] & o.words_[w]) return true;
    return false;
  }
  std::size_t count_without(const RowSet& excluded) const {
    std::size_t c = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) c += static_cast<std::size_t>(popcount(words_[w] & ~excluded.words_[w]));
    return c;
  }
  template <class F>
  void for_each_without(const RowSet& excluded, F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w)
      for_each_bit(words_[w] & ~excluded.words_[w], [&](std::size_t b) { f(w * 64 + b); });
  }
  friend bool operator<(const RowSet& a, const RowSet& b) { return a.words_ < b.words_; }
  friend bool operator==(const RowSet&, const RowSet&) = default;

 private:
  std::vector<Mask> words_;
};

// Every independent X needs a row whose zero set misses exactly one point of X:
// that row is the marker of the last point in a triangular ordering of X.
// Conversely a row set hitting every such constraint gives every X a marker
// ordering, and dependent sets stay dependent because rows are flats.
class HittingSearch {
 public:
  HittingSearch(std::size_t rows, std::vector<RowSet> constraints)
      : rows_(rows), constraints_(std::move(constraints)) {}

  std::size_t solve(std::size_t lower_bound, bool all, std::size_t limit) {
    all_ = all;
    limit_ = limit;
    for (std::size_t budget = lower_bound;; ++budget) {
      RowSet chosen(rows_), excluded(rows_);
      std::vector<std::size_t> picked;
      if (search(chosen, excluded, picked, budget) || !solutions_.empty()) return budget;
    }
  }

  const std::vector<std::vector<std::size_t>>& solutions() const { return solutions_; }

 private:
  std::size_t rows_;
  std::vector<RowSet> constraints_;
  bool all_ = false;
  std::size_t limit_ = 0;
  std::vector<std::vector<std::size_t>> solutions_;

  // Greedy packing of pairwise disjoint unmet constraints bounds the rows still needed.
  std::size_t packing_bound(const RowSet& chosen, const RowSet& excluded) const {
    std::vector<const RowSet*> packed;
    for (const auto& c : constraints_) {
      if (c.intersects(chosen)) continue;
      bool disjoint = std::none_of(packed.begin(), packed.end(), [&](const RowSet* p) {
        bool meet = false;
        c.for_each_without(excluded, [&](std::size_t i) { meet = meet || p->test(i); });
        return meet;
      });
      if (disjoint) packed.push_back(&c);
    }
    return packed.size();
  }

  bool search(RowSet& chosen, RowSet excluded, std::vector<std::size_t>& picked, std::size_t budget) {
    const RowSet* target = nullptr;
    std::size_t best = SIZE_MAX;
    for (const auto& c : constraints_) {
      if (c.intersects(chosen)) continue;
      std::size_t avail = c.count_without(excluded);
      if (avail < best) {
        best = avail;
        target = &c;
      }
    }
    if (!target) {
      auto sol = picked;
      std::sort(sol.begin(), sol.end());
      solutions_.push_back(std::move(sol));
      return !all_ || solutions_.size() >= limit_;
    }
    if (budget == 0 || best == 0) return false;
    if (packing_bound(chosen, excluded) > budget) return false;
    std::vector<std::size_t> options;
    target->for_each_without(excluded, [&](std::size_t i) { options.push_back(i); });
    for (std::size_t i : options) {
      chosen.set(i);
      picked.push_back(i);
      bool stop = search(chosen, excluded, picked, budget - 1);
      picked.pop_back();
      chosen.reset(i);
      if (stop) return true;
      excluded.set(i);
    }
    return false;
  }
};

BoolMatrix witness_matrix(const GroundSet& g, const std::vector<Mask>& candidates,
                          const std::vector<std::size_t>& picked) {
  std::vector<Mask> zs;
  for (std::size_t i : picked) zs.push_back(candidates[i]);
  std::sort(zs.begin(), zs.end(), subset_less);
  std::vector<Mask> rows;
  std::vector<std::string> labels;
  for (Mask z : zs) {
    rows.push_back(g.full() & ~z);
    labels.push_back(g.format(z));
  }
  return BoolMatrix(g, std::move(rows), std::move(labels));
}

}  // namespace

MindegResult mindeg(const HereditaryCollection& hc, bool all_witnesses, std::size_t witness_limit) {
  if (!is_boolean_representable(hc))
    fail(ErrorKind::NotRepresentable, "the collection has no boolean representation");
  const GroundSet& g = hc.ground();
  std::vector<Mask> candidates;
  for (Mask z : hc.flats().members())
    if (z != g.full()) candidates.push_back(z);

  std::set<RowSet> unique;
  for (Mask x : hc.independents()) {
    if (x == 0) continue;
    RowSet c(candidates.size());
    for (std::size_t i = 0; i < candidates.size(); ++i)
      if (popcount(x & ~candidates[i]) == 1) c.set(i);
    unique.insert(std::move(c));
  }
  // A constraint containing another is implied by it.
  std::vector<RowSet> constraints(unique.begin(), unique.end());
  std::vector<RowSet> kept;
  RowSet none(candidates.size());
  for (std::size_t i = 0; i < constraints.size(); ++i) {
    bool implied = false;
    for (std::size_t j = 0; j < constraints.size() && !implied; ++j) {
      if (i == j) continue;
      bool subset = true;
      constraints[j].for_each_without(none, [&](std::size_t b) { subset = subset && constraints[i].test(b); });
      implied = subset && (constraints[i].count_without(none) > constraints[j].count_without(none) || j < i);
    }
    if (!implied) kept.push_back(constraints[i]);
  }

  HittingSearch search(candidates.size(), std::move(kept));
  MindegResult result;
  result.degree = search.solve(hc.rank(), all_witnesses, witness_limit);
  const auto& sols = search.solutions();
  result.witness = witness_matrix(g, candidates, sols.front());
  if (all_witnesses)
    for (const auto& s : sols) result.witnesses.push_back(witness_matrix(g, candidates, s));
  return result;
}

nlohmann::json report_json(const RepresentationSpace& space, const std::vector<FamilyCode>& codes,
                           std::optional<std::size_t> mindeg_value) {
  const auto& hc = space.collection();
  nlohmann::json families = nlohmann::json::array();
  for (FamilyCode c : codes) {
    FlatFamily f = space.family(c);
    RepRecord rec = make_record(hc, f);
    nlohmann::json matrix = nlohmann::json::array();
    for (std::size_t r = 0; r < rec.matrix.rows(); ++r) matrix.push_back(rec.matrix.row_string(r));
    families.push_back({{"members", family_json(hc.ground(), f.members())},
                        {"in_im_theta", space.in_im_theta(c)},
                        {"minimal", space.minimal(c)},
                        {"sji", space.sji(c)},
                        {"matrix", matrix}});
  }
  auto minimal = space.minimal_codes();
  auto sji = space.sji_codes();
  nlohmann::json counts = {{"minimal_raw", minimal.size()},
                           {"minimal_orbits", space.orbit_count(minimal)},
                           {"sji_raw", sji.size()},
                           {"sji_orbits", space.orbit_count(sji)}};
  counts["mindeg"] = mindeg_value ? nlohmann::json(*mindeg_value) : nlohmann::json(nullptr);
  return {{"ground", hc.ground().labels()}, {"families", families}, {"counts", counts}};
}

}  // namespace boolrep
