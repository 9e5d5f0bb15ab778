#include "boolrep/hereditary.hpp"

#include <algorithm>
#include <mutex>

#include "boolrep/error.hpp"

namespace boolrep {

struct HereditaryCollection::Cache {
  std::once_flag flats_once;
  FlatFamily flats;
  std::vector<Mask> closure;  // indexed by subset
  std::once_flag rank_once;
  std::vector<std::uint8_t> rank;
};

namespace {

void check_ground(const GroundSet& ground) {
  if (ground.size() > HereditaryCollection::kMaxGround)
    fail(ErrorKind::TooLarge, "ground set has " + std::to_string(ground.size()) +
                                  " points, limit is " + std::to_string(HereditaryCollection::kMaxGround));
}

}  // namespace

HereditaryCollection HereditaryCollection::build(GroundSet ground, std::vector<bool> member) {
  HereditaryCollection hc;
  hc.ground_ = std::move(ground);
  hc.member_ = std::move(member);
  for (Mask x = 0; x < hc.member_.size(); ++x)
    if (hc.member_[x]) hc.independents_.push_back(x);
  std::sort(hc.independents_.begin(), hc.independents_.end(), subset_less);
  hc.cache_ = std::make_shared<Cache>();
  return hc;
}

HereditaryCollection HereditaryCollection::from_facets(GroundSet ground, std::span<const Mask> facets) {
  check_ground(ground);
  std::vector<bool> member(std::size_t{1} << ground.size(), false);
  member[0] = true;
  for (Mask f : facets) {
    if (!is_subset(f, ground.full())) fail(ErrorKind::ParseError, "facet outside the ground set");
    member[f] = true;
  }
  // Larger masks are final before smaller ones are visited.
  for (Mask x = member.size(); x-- > 0;) {
    if (member[x]) continue;
    Mask outside = ground.full() & ~x;
    while (outside) {
      Mask b = outside & (~outside + 1);
      if (member[x | b]) {
        member[x] = true;
        break;
      }
      outside &= outside - 1;
    }
  }
  return build(std::move(ground), std::move(member));
}

HereditaryCollection HereditaryCollection::from_independents(GroundSet ground, std::span<const Mask> sets) {
  check_ground(ground);
  if (sets.empty()) fail(ErrorKind::EmptyFamily, "a hereditary collection needs at least one set");
  std::vector<bool> member(std::size_t{1} << ground.size(), false);
  for (Mask s : sets) {
    if (!is_subset(s, ground.full())) fail(ErrorKind::ParseError, "set outside the ground set");
    member[s] = true;
  }
  for (Mask s : sets)
    for_each_bit(s, [&](std::size_t i) {
      if (!member[s & ~bit(i)])
        fail(ErrorKind::NotDownwardClosed, ground.format(s) + " is present but " +
                                               ground.format(s & ~bit(i)) + " is not");
    });
  return build(std::move(ground), std::move(member));
}

std::vector<Mask> HereditaryCollection::facets() const {
  std::vector<Mask> out;
  for (Mask x : independents_) {
    bool maximal = true;
    for_each_bit(ground_.full() & ~x, [&](std::size_t i) {
      if (contains(x | bit(i))) maximal = false;
    });
    if (maximal) out.push_back(x);
  }
  return out;
}

std::size_t HereditaryCollection::rank() const {
  return static_cast<std::size_t>(popcount(independents_.back()));
}

const HereditaryCollection::Cache& HereditaryCollection::cache() const {
  if (!cache_) fail(ErrorKind::EmptyFamily, "empty hereditary collection");
  return *cache_;
}

const FlatFamily& HereditaryCollection::flats() const {
  auto& c = const_cast<Cache&>(cache());
  std::call_once(c.flats_once, [&] {
    const Mask full = ground_.full();
    const std::size_t count = member_.size();
    // blocked[X]: points p outside some I in H inside X with I+p not in H.
    std::vector<Mask> blocked(count, 0);
    for (Mask x = 0; x < count; ++x) {
      Mask b = 0;
      if (member_[x]) {
        for_each_bit(full & ~x, [&](std::size_t p) {
          if (!member_[x | bit(p)]) b |= bit(p);
        });
      }
      for_each_bit(x, [&](std::size_t i) { b |= blocked[x & ~bit(i)]; });
      blocked[x] = b;
    }
    std::vector<Mask> members;
    c.closure.assign(count, full);
    for (Mask x = 0; x < count; ++x)
      if (is_subset(blocked[x], x)) {
        members.push_back(x);
        c.closure[x] = x;
      }
    for (std::size_t e = 0; e < ground_.size(); ++e)
      for (Mask x = 0; x < count; ++x)
        if (!((x >> e) & 1U)) c.closure[x] &= c.closure[x | bit(e)];
    c.flats = FlatFamily(ground_, std::move(members));
  });
  return c.flats;
}

Mask HereditaryCollection::closure(Mask x) const {
  flats();
  return cache_->closure.at(x);
}

std::size_t HereditaryCollection::rank_of(Mask x) const {
  auto& c = const_cast<Cache&>(cache());
  std::call_once(c.rank_once, [&] {
    c.rank.assign(member_.size(), 0);
    for (Mask y = 0; y < member_.size(); ++y) {
      if (member_[y]) {
        c.rank[y] = static_cast<std::uint8_t>(popcount(y));
        continue;
      }
      std::uint8_t r = 0;
      for_each_bit(y, [&](std::size_t i) { r = std::max(r, c.rank[y & ~bit(i)]); });
      c.rank[y] = r;
    }
  });
  return c.rank.at(x);
}

bool RankFunction::monotone() const {
  for (Mask x = 0; x < table_.size(); ++x)
    for (std::size_t i = 0; i < n_; ++i)
      if (table_[x] > table_[x | bit(i)]) return false;
  return true;
}

bool RankFunction::has_full_rank_subsets() const {
  for (Mask x = 0; x < table_.size(); ++x) {
    bool found = false;
    for (Mask i = x;; i = (i - 1) & x) {
      if (popcount(i) == table_[i] && table_[i] == table_[x]) {
        found = true;
        break;
      }
      if (i == 0) break;
    }
    if (!found) return false;
  }
  return true;
}

bool RankFunction::full_rank_hereditary() const {
  for (Mask x = 0; x < table_.size(); ++x) {
    if (popcount(x) != table_[x]) continue;
    for (std::size_t i = 0; i < n_; ++i)
      if (contains(x, i) && table_[x & ~bit(i)] != popcount(x) - 1) return false;
  }
  return true;
}

bool RankFunction::bounded_by_size() const {
  for (Mask x = 0; x < table_.size(); ++x)
    if (table_[x] > popcount(x)) return false;
  return true;
}

bool RankFunction::subadditive() const {
  for (Mask x = 0; x < table_.size(); ++x)
    for (Mask y = 0; y < table_.size(); ++y)
      if (table_[x | y] > table_[x] + table_[y]) return false;
  return true;
}

bool RankFunction::submodular() const {
  for (Mask x = 0; x < table_.size(); ++x)
    for (Mask y = 0; y < table_.size(); ++y)
      if (table_[x | y] + table_[x & y] > table_[x] + table_[y]) return false;
  return true;
}

std::vector<Mask> circuits(const HereditaryCollection& hc) {
  std::vector<Mask> out;
  const Mask count = Mask{1} << hc.ground_size();
  for (Mask x = 0; x < count; ++x) {
    if (hc.contains(x)) continue;
    bool minimal = true;
    for_each_bit(x, [&](std::size_t i) {
      if (!hc.contains(x & ~bit(i))) minimal = false;
    });
    if (minimal) out.push_back(x);
  }
  std::sort(out.begin(), out.end(), subset_less);
  return out;
}

bool is_flat(const HereditaryCollection& hc, Mask x) {
  const Mask outside = hc.ground().full() & ~x;
  for (Mask i : hc.independents()) {
    if (!is_subset(i, x)) continue;
    for (std::size_t p = 0; p < hc.ground_size(); ++p)
      if (contains(outside, p) && !hc.contains(i | bit(p))) return false;
  }
  return true;
}

bool is_flat_by_circuits(const HereditaryCollection& hc, Mask x) {
  for (Mask c : circuits(hc))
    for (std::size_t p = 0; p < hc.ground_size(); ++p)
      if (contains(c, p) && !contains(x, p) && is_subset(c, x | bit(p))) return false;
  return true;
}

const FlatFamily& flats(const HereditaryCollection& hc) { return hc.flats(); }

Mask closure(const HereditaryCollection& hc, Mask x) { return hc.closure(x); }

Mask circuit_closure(const HereditaryCollection& hc, Mask x) {
  const auto cs = circuits(hc);
  for (;;) {
    Mask next = x;
    for (Mask c : cs)
      if (popcount(c & ~x) == 1) next |= c & ~x;
    if (next == x) return x;
    x = next;
  }
}

bool is_matroid(const HereditaryCollection& hc) {
  std::vector<std::vector<Mask>> levels(hc.ground_size() + 1);
  for (Mask i : hc.independents()) levels[static_cast<std::size_t>(popcount(i))].push_back(i);
  const Mask full = hc.ground().full();
  for (std::size_t k = 0; k + 1 < levels.size(); ++k)
    for (Mask j : levels[k]) {
      Mask ext = 0;
      for_each_bit(full & ~j, [&](std::size_t p) {
        if (hc.contains(j | bit(p))) ext |= bit(p);
      });
      for (Mask i : levels[k + 1])
        if ((i & ext) == 0) return false;
    }
  return true;
}

bool satisfies_pr(const HereditaryCollection& hc) {
  for (Mask j : hc.independents()) {
    if (j == 0) continue;
    for (std::size_t p = 0; p < hc.ground_size(); ++p) {
      if (!hc.contains(bit(p))) continue;
      bool ok = false;
      for_each_bit(j, [&](std::size_t x) {
        if (!ok && hc.contains((j & ~bit(x)) | bit(p))) ok = true;
      });
      if (!ok) return false;
    }
  }
  return true;
}

bool is_simple(const HereditaryCollection& hc) {
  for (std::size_t a = 0; a < hc.ground_size(); ++a)
    for (std::size_t b = a; b < hc.ground_size(); ++b)
      if (!hc.contains(bit(a) | bit(b))) return false;
  return true;
}

RankFunction rank_function(const HereditaryCollection& hc) {
  std::vector<std::uint8_t> table(std::size_t{1} << hc.ground_size());
  for (Mask x = 0; x < table.size(); ++x) table[x] = static_cast<std::uint8_t>(hc.rank_of(x));
  return RankFunction(hc.ground_size(), std::move(table));
}

std::vector<Mask> hyperplanes(const HereditaryCollection& hc) {
  const auto& members = hc.flats().members();
  const Mask full = hc.ground().full();
  std::vector<Mask> out;
  for (Mask z : members) {
    if (z == full) continue;
    bool maximal = true;
    for (Mask w : members)
      if (w != full && w != z && is_subset(z, w)) maximal = false;
    if (maximal) out.push_back(z);
  }
  return out;
}

namespace {

// good[X] for X in H: X admits a closure ordering.
std::vector<bool> closure_orderable(const HereditaryCollection& hc) {
  if (!is_simple(hc)) fail(ErrorKind::NotSimple, "representability requires a simple collection");
  std::vector<bool> good(std::size_t{1} << hc.ground_size(), false);
  for (Mask x : hc.independents()) {  // sorted by size
    if (x == 0) {
      good[0] = true;
      continue;
    }
    for_each_bit(x, [&](std::size_t i) {
      Mask rest = x & ~bit(i);
      if (!good[x] && good[rest] && !contains(hc.closure(rest), i)) good[x] = true;
    });
  }
  return good;
}

}  // namespace

Representability representability(const HereditaryCollection& hc) {
  auto good = closure_orderable(hc);
  for (Mask x : hc.independents())
    if (!good[x]) return {false, x};
  return {true, std::nullopt};
}

bool is_boolean_representable(const HereditaryCollection& hc) { return representability(hc).representable; }

std::optional<std::vector<std::size_t>> closure_ordering(const HereditaryCollection& hc, Mask x) {
  if (!hc.contains(x)) return std::nullopt;
  auto good = closure_orderable(hc);
  if (!good[x]) return std::nullopt;
  std::vector<std::size_t> order;
  while (x) {
    for_each_bit(x, [&](std::size_t i) {
      Mask rest = x & ~bit(i);
      if (popcount(rest) + 1 == popcount(x) && good[rest] && !contains(hc.closure(rest), i)) {
        order.push_back(i);
        x = rest;
      }
    });
  }
  return order;
}

HereditaryCollection truncation(const HereditaryCollection& hc, std::size_t k) {
  std::vector<Mask> kept;
  for (Mask x : hc.independents())
    if (static_cast<std::size_t>(popcount(x)) <= k) kept.push_back(x);
  return HereditaryCollection::from_independents(hc.ground(), kept);
}

namespace {

void same_ground(const HereditaryCollection& a, const HereditaryCollection& b) {
  if (!(a.ground() == b.ground())) fail(ErrorKind::GroundMismatch, "collections have different ground sets");
}

}  // namespace

HereditaryCollection union_of(const HereditaryCollection& a, const HereditaryCollection& b) {
  same_ground(a, b);
  std::vector<Mask> sets = a.independents();
  for (Mask x : b.independents())
    if (!a.contains(x)) sets.push_back(x);
  return HereditaryCollection::from_independents(a.ground(), sets);
}

HereditaryCollection intersection_of(const HereditaryCollection& a, const HereditaryCollection& b) {
  same_ground(a, b);
  std::vector<Mask> sets;
  for (Mask x : a.independents())
    if (b.contains(x)) sets.push_back(x);
  return HereditaryCollection::from_independents(a.ground(), sets);
}

bool rank3_union_representable_hypothesis(const HereditaryCollection& a, const HereditaryCollection& b) {
  same_ground(a, b);
  const Mask full = a.ground().full();
  for (const auto* hc : {&a, &b}) {
    if (hc->rank() != 3 || !is_simple(*hc) || !is_boolean_representable(*hc)) return false;
    for (Mask z : hc->flats().members())
      if (z != full && popcount(z) > 3) return false;
  }
  return true;
}

PavingClauses paving_clauses(const HereditaryCollection& hc) {
  const std::size_t r = hc.rank();
  if (r <= 2) fail(ErrorKind::RankTooSmall, "paving needs rank > 2, rank is " + std::to_string(r));
  PavingClauses out{true, true, true};
  for (Mask c : circuits(hc))
    if (static_cast<std::size_t>(popcount(c)) < r) out.no_small_circuits = false;
  const Mask count = Mask{1} << hc.ground_size();
  for (Mask x = 0; x < count; ++x) {
    auto size = static_cast<std::size_t>(popcount(x));
    if (size <= r - 1 && !hc.contains(x)) out.lower_sets_independent = false;
    if (size <= r - 2 && !hc.flats().contains(x)) out.lower_sets_closed = false;
  }
  return out;
}

bool is_paving(const HereditaryCollection& hc) {
  auto c = paving_clauses(hc);
  if (c.no_small_circuits != c.lower_sets_independent || c.no_small_circuits != c.lower_sets_closed)
    fail(ErrorKind::InvariantViolation, "paving clauses disagree");
  return c.no_small_circuits;
}

bool paving_representable(const HereditaryCollection& hc) {
  if (!is_paving(hc)) fail(ErrorKind::NotPaving, "collection is not paving");
  const std::size_t r = hc.rank();
  for (Mask x : hc.independents()) {
    if (static_cast<std::size_t>(popcount(x)) != r) continue;
    bool ok = false;
    for_each_bit(x, [&](std::size_t i) {
      if (!contains(hc.closure(x & ~bit(i)), i)) ok = true;
    });
    if (!ok) return false;
  }
  return true;
}

Mask apply_permutation(const std::vector<std::size_t>& perm, Mask x) {
  Mask y = 0;
  for_each_bit(x, [&](std::size_t i) { y |= bit(perm[i]); });
  return y;
}

namespace {

void extend_automorphism(const HereditaryCollection& hc, std::vector<std::size_t>& perm, Mask used,
                         std::vector<std::vector<std::size_t>>& out) {
  const std::size_t k = perm.size();
  const std::size_t n = hc.ground_size();
  if (k == n) {
    out.push_back(perm);
    return;
  }
  for (std::size_t c = 0; c < n; ++c) {
    if (contains(used, c)) continue;
    perm.push_back(c);
    // Every subset of the assigned points that contains the new one.
    bool ok = true;
    const Mask others = low_bits(k);
    for (Mask s = others;; s = (s - 1) & others) {
      Mask x = s | bit(k);
      if (hc.contains(x) != hc.contains(apply_permutation(perm, x))) {
        ok = false;
        break;
      }
      if (s == 0) break;
    }
    if (ok) extend_automorphism(hc, perm, used | bit(c), out);
    perm.pop_back();
  }
}

}  // namespace

std::vector<std::vector<std::size_t>> automorphisms(const HereditaryCollection& hc) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> perm;
  extend_automorphism(hc, perm, 0, out);
  return out;
}

}  // namespace boolrep
