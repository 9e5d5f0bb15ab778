#include "boolrep/finite_lattice.hpp"

#include <algorithm>
#include <set>

#include "boolrep/error.hpp"

namespace boolrep {
namespace {

void check_labels(const std::vector<std::string>& labels, std::size_t max_elements) {
  if (labels.empty()) fail(ErrorKind::NotALattice, "a lattice needs at least one element");
  if (labels.size() > max_elements)
    fail(ErrorKind::TooLarge, "lattice has " + std::to_string(labels.size()) +
                                  " elements, cap is " + std::to_string(max_elements));
  if (labels.size() > 65535) fail(ErrorKind::TooLarge, "lattice too large");
  std::set<std::string_view> seen;
  for (const auto& l : labels)
    if (!seen.insert(l).second) fail(ErrorKind::ParseError, "duplicate element '" + l + "'");
}

}  // namespace

FiniteLattice FiniteLattice::from_covers(std::vector<std::string> labels, std::span<const CoverPair> covers,
                                         std::size_t max_elements) {
  check_labels(labels, max_elements);
  const std::size_t n = labels.size();
  FiniteLattice l;
  l.labels_ = std::move(labels);
  l.leq_.assign(n * n, 0);
  std::vector<std::vector<std::size_t>> succ(n);
  for (auto [a, b] : covers) {
    if (a >= n || b >= n) fail(ErrorKind::ParseError, "cover pair references a missing element");
    if (a == b) fail(ErrorKind::CycleError, "element '" + l.labels_[a] + "' is below itself");
    succ[a].push_back(b);
  }
  // Reachability by DFS from every element.
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<std::size_t> stack{s};
    l.leq_[s * n + s] = 1;
    while (!stack.empty()) {
      auto x = stack.back();
      stack.pop_back();
      for (auto y : succ[x]) {
        if (y == s) fail(ErrorKind::CycleError, "cycle through '" + l.labels_[s] + "'");
        if (!l.leq_[s * n + y]) {
          l.leq_[s * n + y] = 1;
          stack.push_back(y);
        }
      }
    }
  }
  l.build(max_elements);
  return l;
}

FiniteLattice FiniteLattice::from_order(std::vector<std::string> labels,
                                        const std::function<bool(std::size_t, std::size_t)>& leq,
                                        std::size_t max_elements) {
  check_labels(labels, max_elements);
  const std::size_t n = labels.size();
  FiniteLattice l;
  l.labels_ = std::move(labels);
  l.leq_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) l.leq_[a * n + b] = leq(a, b) ? 1 : 0;
  for (std::size_t a = 0; a < n; ++a) {
    if (!l.leq(a, a)) fail(ErrorKind::NotALattice, "order is not reflexive at '" + l.labels_[a] + "'");
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && l.leq(a, b) && l.leq(b, a))
        fail(ErrorKind::CycleError, "'" + l.labels_[a] + "' and '" + l.labels_[b] + "' are mutually below");
      for (std::size_t c = 0; c < n; ++c)
        if (l.leq(a, b) && l.leq(b, c) && !l.leq(a, c))
          fail(ErrorKind::NotALattice, "order is not transitive");
    }
  }
  l.build(max_elements);
  return l;
}

void FiniteLattice::build(std::size_t) {
  const std::size_t n = size();
  join_.assign(n * n, 0);
  meet_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      std::optional<std::size_t> j, m;
      for (std::size_t z = 0; z < n; ++z) {
        if (leq(a, z) && leq(b, z) && (!j || leq(z, *j))) j = z;
        if (leq(z, a) && leq(z, b) && (!m || leq(*m, z))) m = z;
      }
      // The candidate must be below (above) every upper (lower) bound.
      for (std::size_t z = 0; z < n; ++z) {
        if (j && leq(a, z) && leq(b, z) && !leq(*j, z)) j.reset();
        if (m && leq(z, a) && leq(z, b) && !leq(z, *m)) m.reset();
      }
      if (!j) fail(ErrorKind::NotALattice, "'" + labels_[a] + "' and '" + labels_[b] + "' have no join");
      if (!m) fail(ErrorKind::NotALattice, "'" + labels_[a] + "' and '" + labels_[b] + "' have no meet");
      join_[a * n + b] = join_[b * n + a] = static_cast<std::uint16_t>(*j);
      meet_[a * n + b] = meet_[b * n + a] = static_cast<std::uint16_t>(*m);
    }
  }
  top_ = 0;
  bottom_ = 0;
  for (std::size_t x = 1; x < n; ++x) {
    top_ = join(top_, x);
    bottom_ = meet(bottom_, x);
  }
  up_.assign(n, {});
  down_.assign(n, {});
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (!less(a, b)) continue;
      bool cover = true;
      for (std::size_t z = 0; z < n && cover; ++z)
        if (less(a, z) && less(z, b)) cover = false;
      if (cover) {
        up_[a].push_back(b);
        down_[b].push_back(a);
      }
    }
  // Ranks in an order compatible with <: by size of the down set.
  std::vector<std::size_t> order(n);
  std::vector<std::size_t> below(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    order[x] = x;
    for (std::size_t z = 0; z < n; ++z) below[x] += leq(z, x);
  }
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return below[a] < below[b]; });
  rank_.assign(n, 0);
  for (auto x : order)
    for (auto y : down_[x]) rank_[x] = std::max(rank_[x], rank_[y] + 1);
}

std::optional<std::size_t> FiniteLattice::find(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

std::size_t FiniteLattice::index_of(std::string_view label) const {
  if (auto x = find(label)) return *x;
  fail(ErrorKind::ParseError, "unknown lattice element '" + std::string(label) + "'");
}

std::size_t FiniteLattice::join_all(std::span<const std::size_t> xs) const {
  std::size_t j = bottom_;
  for (auto x : xs) j = join(j, x);
  return j;
}

std::size_t FiniteLattice::meet_all(std::span<const std::size_t> xs) const {
  std::size_t m = top_;
  for (auto x : xs) m = meet(m, x);
  return m;
}

std::vector<CoverPair> FiniteLattice::cover_pairs() const {
  std::vector<CoverPair> out;
  for (std::size_t a = 0; a < size(); ++a)
    for (auto b : up_[a]) out.emplace_back(a, b);
  return out;
}

bool FiniteLattice::covers(std::size_t upper, std::size_t lower) const {
  const auto& d = down_.at(upper);
  return std::find(d.begin(), d.end(), lower) != d.end();
}

std::vector<std::size_t> FiniteLattice::down_set(std::size_t x) const {
  std::vector<std::size_t> out;
  for (std::size_t z = 0; z < size(); ++z)
    if (leq(z, x)) out.push_back(z);
  return out;
}

std::vector<std::size_t> FiniteLattice::elements() const {
  std::vector<std::size_t> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = i;
  return out;
}

FiniteLattice lattice_from_covers(std::vector<std::string> elements, std::span<const CoverPair> covers) {
  return FiniteLattice::from_covers(std::move(elements), covers);
}

std::size_t height(const FiniteLattice& l) { return l.height(); }

std::vector<std::size_t> sji_elements(const FiniteLattice& l) {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < l.size(); ++x)
    if (x != l.bottom() && l.lower_covers(x).size() <= 1) out.push_back(x);
  return out;
}

std::vector<std::size_t> smi_elements(const FiniteLattice& l) {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < l.size(); ++x)
    if (x != l.top() && l.upper_covers(x).size() <= 1) out.push_back(x);
  return out;
}

std::vector<std::size_t> atoms(const FiniteLattice& l) {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < l.size(); ++x)
    if (l.covers(x, l.bottom())) out.push_back(x);
  return out;
}

VGenLattice::VGenLattice(FiniteLattice lattice, std::vector<std::size_t> gens)
    : lattice_(std::move(lattice)), gens_(std::move(gens)) {
  if (lattice_.size() < 2) fail(ErrorKind::DegenerateLattice, "one-element lattices are not supported");
  std::sort(gens_.begin(), gens_.end());
  gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
  if (gens_.size() > GroundSet::kMaxSize) fail(ErrorKind::TooLarge, "more than 64 generators");
  for (auto g : gens_) {
    if (g >= lattice_.size()) fail(ErrorKind::ParseError, "generator out of range");
    if (g == lattice_.bottom())
      fail(ErrorKind::BottomElement, "bottom '" + lattice_.label(g) + "' cannot be a generator");
  }
  below_.assign(lattice_.size(), 0);
  for (std::size_t x = 0; x < lattice_.size(); ++x)
    for (std::size_t i = 0; i < gens_.size(); ++i)
      if (lattice_.leq(gens_[i], x)) below_[x] |= bit(i);
  for (std::size_t x = 0; x < lattice_.size(); ++x)
    if (join_of(below_[x]) != x)
      fail(ErrorKind::NotGenerating, "'" + lattice_.label(x) + "' is not a join of generators");
}

GroundSet VGenLattice::ground() const {
  std::vector<std::string> labels;
  for (auto g : gens_) labels.push_back(lattice_.label(g));
  return GroundSet(std::move(labels));
}

std::optional<std::size_t> VGenLattice::gen_position(std::size_t element) const {
  auto it = std::lower_bound(gens_.begin(), gens_.end(), element);
  if (it == gens_.end() || *it != element) return std::nullopt;
  return static_cast<std::size_t>(it - gens_.begin());
}

std::size_t VGenLattice::join_of(Mask gen_subset) const {
  std::size_t j = lattice_.bottom();
  for_each_bit(gen_subset, [&](std::size_t i) { j = lattice_.join(j, gens_.at(i)); });
  return j;
}

}  // namespace boolrep
