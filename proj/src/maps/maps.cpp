#include "boolrep/maps.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <unordered_set>

#include "boolrep/error.hpp"
#include "boolrep/matrix_lattice.hpp"

namespace boolrep {
namespace {

std::size_t room(std::size_t n) { return std::max(n, FiniteLattice::kDefaultMaxElements); }

std::size_t position_in(const std::vector<std::size_t>& sorted, std::size_t x) {
  return static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), x) - sorted.begin());
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
  std::vector<std::size_t> labels() {
    std::vector<std::size_t> out(parent.size());
    for (std::size_t x = 0; x < out.size(); ++x) out[x] = find(x);
    return out;
  }
};

}  // namespace

VMap::VMap(FiniteLattice source, FiniteLattice target, std::vector<std::size_t> assignment)
    : source_(std::move(source)), target_(std::move(target)), assignment_(std::move(assignment)) {
  if (assignment_.size() != source_.size())
    fail(ErrorKind::DimensionError, "map assigns " + std::to_string(assignment_.size()) + " values to " +
                                        std::to_string(source_.size()) + " elements");
  for (std::size_t y : assignment_)
    if (y >= target_.size()) fail(ErrorKind::DimensionError, "map value outside the target lattice");
}

VMap VMap::identity(const FiniteLattice& l) {
  std::vector<std::size_t> a(l.size());
  std::iota(a.begin(), a.end(), 0);
  return VMap(l, l, std::move(a));
}

bool VMap::surjective() const { return image().size() == target_.size(); }
bool VMap::injective() const { return image().size() == source_.size(); }

std::vector<std::size_t> VMap::image() const {
  std::vector<std::size_t> out(assignment_);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<std::pair<std::size_t, std::size_t>> join_violation(const VMap& phi) {
  const auto& s = phi.source();
  const auto& t = phi.target();
  if (phi(s.bottom()) != t.bottom()) return std::pair{s.bottom(), s.bottom()};
  for (std::size_t x = 0; x < s.size(); ++x)
    for (std::size_t y = x + 1; y < s.size(); ++y)
      if (phi(s.join(x, y)) != t.join(phi(x), phi(y))) return std::pair{x, y};
  return std::nullopt;
}

bool is_vmap(const VMap& phi) { return !join_violation(phi); }

void validate_vmap(const VMap& phi) {
  if (auto v = join_violation(phi)) {
    const auto& s = phi.source();
    if (v->first == v->second)
      fail(ErrorKind::JoinViolation, "bottom " + s.label(v->first) + " is not sent to the bottom");
    fail(ErrorKind::JoinViolation, "join of " + s.label(v->first) + " and " + s.label(v->second) + " is not preserved");
  }
}

VMap compose(const VMap& first, const VMap& second) {
  if (!(first.target() == second.source())) fail(ErrorKind::DimensionError, "maps are not composable");
  std::vector<std::size_t> a(first.source().size());
  for (std::size_t x = 0; x < a.size(); ++x) a[x] = second(first(x));
  return VMap(first.source(), second.target(), std::move(a));
}

bool is_flg_arrow(const VMap& phi, const VGenLattice& source, const VGenLattice& target) {
  for (std::size_t e : source.gens()) {
    std::size_t y = phi(e);
    if (y != target.lattice().bottom() && !target.gen_position(y)) return false;
  }
  return true;
}

VCongruence::VCongruence(FiniteLattice lattice, std::vector<std::size_t> block)
    : lattice_(std::move(lattice)), block_(lattice_.size()) {
  if (block.size() != lattice_.size()) fail(ErrorKind::DimensionError, "partition size differs from the lattice");
  std::map<std::size_t, std::size_t> renumber;
  for (std::size_t x = 0; x < block.size(); ++x) {
    auto [it, fresh] = renumber.emplace(block[x], renumber.size());
    block_[x] = it->second;
  }
  count_ = renumber.size();
}

VCongruence VCongruence::trivial(const FiniteLattice& l) {
  std::vector<std::size_t> b(l.size());
  std::iota(b.begin(), b.end(), 0);
  return VCongruence(l, std::move(b));
}

VCongruence VCongruence::kernel(const VMap& phi) { return VCongruence(phi.source(), phi.assignment()); }

VCongruence VCongruence::pair(const FiniteLattice& l, std::size_t a, std::size_t b) {
  std::vector<std::size_t> blocks(l.size());
  std::iota(blocks.begin(), blocks.end(), 0);
  blocks.at(b) = blocks.at(a);
  return VCongruence(l, std::move(blocks));
}

std::vector<std::size_t> VCongruence::members(std::size_t block) const {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < block_.size(); ++x)
    if (block_[x] == block) out.push_back(x);
  return out;
}

bool VCongruence::compatible() const {
  const std::size_t n = lattice_.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      if (same(x, y))
        for (std::size_t z = 0; z < n; ++z)
          if (!same(lattice_.join(x, z), lattice_.join(y, z))) return false;
  return true;
}

void VCongruence::validate() const {
  if (!compatible()) fail(ErrorKind::NotACongruence, "partition is not compatible with joins");
}

Quotient quotient(const VCongruence& rho) {
  rho.validate();
  const auto& l = rho.lattice();
  std::vector<std::size_t> top(rho.block_count(), l.bottom());
  for (std::size_t x = 0; x < l.size(); ++x) top[rho.block_of(x)] = l.join(top[rho.block_of(x)], x);
  std::vector<std::string> labels;
  for (std::size_t m : top) labels.push_back(l.label(m));
  auto q = FiniteLattice::from_order(
      std::move(labels), [&](std::size_t a, std::size_t b) { return l.leq(top[a], top[b]); }, room(top.size()));
  VMap projection(l, q, rho.blocks());
  return Quotient{std::move(q), std::move(projection)};
}

bool is_closure(const FiniteLattice& l, std::span<const std::size_t> map) {
  if (map.size() != l.size()) return false;
  for (std::size_t x = 0; x < l.size(); ++x) {
    if (map[x] >= l.size() || !l.leq(x, map[x]) || map[map[x]] != map[x]) return false;
    for (std::size_t y = 0; y < l.size(); ++y)
      if (l.leq(x, y) && !l.leq(map[x], map[y])) return false;
  }
  return true;
}

ClosureOp::ClosureOp(FiniteLattice lattice, std::vector<std::size_t> map)
    : lattice_(std::move(lattice)), map_(std::move(map)) {
  if (!is_closure(lattice_, map_)) fail(ErrorKind::NotAClosure, "map is not extensive, monotone and idempotent");
}

std::vector<std::size_t> ClosureOp::image() const {
  std::set<std::size_t> out(map_.begin(), map_.end());
  return {out.begin(), out.end()};
}

ClosureOp closure_from_congruence(const VCongruence& rho) {
  rho.validate();
  const auto& l = rho.lattice();
  std::vector<std::size_t> top(rho.block_count(), l.bottom());
  for (std::size_t x = 0; x < l.size(); ++x) top[rho.block_of(x)] = l.join(top[rho.block_of(x)], x);
  std::vector<std::size_t> map(l.size());
  for (std::size_t x = 0; x < l.size(); ++x) map[x] = top[rho.block_of(x)];
  return ClosureOp(l, std::move(map));
}

VCongruence congruence_from_closure(const ClosureOp& xi) { return VCongruence(xi.lattice(), xi.map()); }

ClosureOp closure_from_meet_subsemilattice(const FiniteLattice& l, std::span<const std::size_t> s) {
  std::set<std::size_t> members(s.begin(), s.end());
  for (std::size_t a : members)
    for (std::size_t b : members)
      if (!members.count(l.meet(a, b)))
        fail(ErrorKind::NotIntersectionClosed, "meet of " + l.label(a) + " and " + l.label(b) + " is missing");
  std::vector<std::size_t> map(l.size());
  for (std::size_t x = 0; x < l.size(); ++x) {
    std::size_t m = l.top();
    for (std::size_t y : members)
      if (l.leq(x, y)) m = l.meet(m, y);
    map[x] = m;
  }
  return ClosureOp(l, std::move(map));
}

FlatFamily family_from_congruence(const VGenLattice& vg, const VCongruence& rho) {
  auto xi = closure_from_congruence(rho);
  std::vector<Mask> members;
  for (std::size_t m : xi.image()) members.push_back(vg.gens_below(m));
  return FlatFamily(vg.ground(), std::move(members));
}

VCongruence congruence_from_family(const VGenLattice& vg, const FlatFamily& f) {
  if (!(f.ground() == vg.ground())) fail(ErrorKind::GroundMismatch, "family and lattice use different generators");
  auto flats = flats_of_lattice(vg);
  for (Mask z : f.members())
    if (!flats.contains(z))
      fail(ErrorKind::NotSubsemilattice, "member " + f.ground().format(z) + " is not a flat of the lattice");
  std::vector<std::size_t> block(vg.lattice().size());
  for (std::size_t x = 0; x < block.size(); ++x) block[x] = static_cast<std::size_t>(f.closure(vg.gens_below(x)));
  return VCongruence(vg.lattice(), std::move(block));
}

MpsFactorization mps_factorize(const VMap& phi) {
  if (!phi.surjective()) fail(ErrorKind::NotSurjective, "map is not onto");
  validate_vmap(phi);
  MpsFactorization out;
  FiniteLattice k = phi.source();
  std::vector<std::size_t> psi = phi.assignment();
  while (std::set<std::size_t>(psi.begin(), psi.end()).size() != psi.size()) {
    std::optional<std::pair<std::size_t, std::size_t>> found;
    for (std::size_t b = 0; b < k.size() && !found; ++b) {
      if (k.upper_covers(b).size() != 1) continue;
      std::size_t a = k.upper_covers(b).front();
      if (psi[a] == psi[b]) found = std::pair{a, b};
    }
    if (!found) fail(ErrorKind::InvariantViolation, "no collapsible cover pair with an smi lower element");
    auto [a, b] = *found;
    auto q = quotient(VCongruence::pair(k, a, b));
    std::vector<std::size_t> next(q.lattice.size());
    for (std::size_t x = 0; x < k.size(); ++x) next[q.projection(x)] = psi[x];
    out.steps.push_back(MpsStep{a, b, q});
    k = q.lattice;
    psi = std::move(next);
  }
  out.bridge = VMap(k, phi.target(), std::move(psi));
  return out;
}

FiniteLattice sub_join_semilattice(const FiniteLattice& l, std::span<const std::size_t> elements) {
  std::vector<std::size_t> members(elements.begin(), elements.end());
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (!std::binary_search(members.begin(), members.end(), l.bottom()))
    fail(ErrorKind::NotJoinClosed, "subset does not contain the bottom");
  for (std::size_t a : members)
    for (std::size_t b : members)
      if (!std::binary_search(members.begin(), members.end(), l.join(a, b)))
        fail(ErrorKind::NotJoinClosed, "join of " + l.label(a) + " and " + l.label(b) + " is missing");
  std::vector<std::string> labels;
  for (std::size_t m : members) labels.push_back(l.label(m));
  return FiniteLattice::from_order(
      std::move(labels), [&](std::size_t a, std::size_t b) { return l.leq(members[a], members[b]); },
      room(members.size()));
}

MpiFactorization mpi_factorize(const VMap& phi) {
  if (!phi.injective()) fail(ErrorKind::NotInjective, "map is not one-to-one");
  validate_vmap(phi);
  const auto& t = phi.target();
  const auto image = phi.image();
  std::vector<std::vector<std::size_t>> chain{t.elements()};  // from the target down to the image
  std::vector<std::size_t> removed;
  while (chain.back().size() > image.size()) {
    const auto& current = chain.back();
    std::vector<std::size_t> outside;
    std::set_difference(current.begin(), current.end(), image.begin(), image.end(), std::back_inserter(outside));
    std::size_t a = *std::find_if(outside.begin(), outside.end(), [&](std::size_t x) {
      return std::none_of(outside.begin(), outside.end(), [&](std::size_t y) { return t.less(y, x); });
    });
    std::vector<std::size_t> smaller;
    std::copy_if(current.begin(), current.end(), std::back_inserter(smaller), [&](std::size_t x) { return x != a; });
    removed.push_back(a);
    chain.push_back(std::move(smaller));
  }
  std::vector<FiniteLattice> lattices;
  for (const auto& members : chain) lattices.push_back(sub_join_semilattice(t, members));

  MpiFactorization out;
  std::vector<std::size_t> to_image(phi.source().size());
  for (std::size_t x = 0; x < to_image.size(); ++x) to_image[x] = position_in(image, phi(x));
  out.bridge = VMap(phi.source(), lattices.back(), std::move(to_image));
  for (std::size_t j = chain.size() - 1; j-- > 0;) {
    const auto& small = chain[j + 1];
    const auto& large = chain[j];
    std::vector<std::size_t> inc(small.size());
    for (std::size_t i = 0; i < small.size(); ++i) inc[i] = position_in(large, small[i]);
    out.steps.push_back(MpiStep{VMap(lattices[j + 1], lattices[j], std::move(inc)), position_in(large, removed[j])});
  }
  // The last lattice is the target itself; present it with the target's own indices.
  if (!out.steps.empty()) {
    auto& last = out.steps.back();
    last.inclusion = VMap(last.inclusion.source(), t, last.inclusion.assignment());
  } else {
    out.bridge = VMap(phi.source(), t, phi.assignment());
  }
  return out;
}

CsiFactorization csi_factorize(const VMap& phi) {
  validate_vmap(phi);
  const auto image = phi.image();
  auto k = sub_join_semilattice(phi.target(), image);
  std::vector<std::size_t> onto(phi.source().size());
  for (std::size_t x = 0; x < onto.size(); ++x) onto[x] = position_in(image, phi(x));
  CsiFactorization out;
  out.surjective = mps_factorize(VMap(phi.source(), k, std::move(onto)));
  out.injective = mpi_factorize(VMap(k, phi.target(), image));
  return out;
}

VMap recompose(const MpsFactorization& f) {
  if (f.steps.empty()) return f.bridge;
  VMap acc = f.steps.front().result.projection;
  for (std::size_t i = 1; i < f.steps.size(); ++i) acc = compose(acc, f.steps[i].result.projection);
  return compose(acc, f.bridge);
}

VMap recompose(const MpiFactorization& f) {
  VMap acc = f.bridge;
  for (const auto& step : f.steps) acc = compose(acc, step.inclusion);
  return acc;
}

VMap recompose(const CsiFactorization& f) { return compose(recompose(f.surjective), recompose(f.injective)); }

std::optional<std::vector<std::size_t>> generator_compatible_mpi_order(const VMap& phi, const VGenLattice& source,
                                                                       const VGenLattice& target) {
  validate_vmap(phi);
  if (!phi.injective()) fail(ErrorKind::NotInjective, "map is not one-to-one");
  const auto& t = target.lattice();
  if (t.size() > 64) fail(ErrorKind::TooLarge, "target lattice has more than 64 elements");
  Mask allowed = bit(t.bottom());
  for (std::size_t g : target.gens()) allowed |= bit(g);
  for (std::size_t e : source.gens())
    if (!contains(allowed, phi(e))) return std::nullopt;

  auto sji_inside = [&](Mask k) {
    Mask out = 0;
    for_each_bit(k, [&](std::size_t a) {
      if (a == t.bottom()) return;
      std::size_t lower = 0;
      for_each_bit(k, [&](std::size_t c) {
        if (!t.less(c, a)) return;
        bool cover = true;
        for_each_bit(k, [&](std::size_t d) { cover = cover && !(t.less(c, d) && t.less(d, a)); });
        if (cover) ++lower;
      });
      if (lower <= 1) out |= bit(a);
    });
    return out;
  };

  Mask start = 0;
  for (std::size_t y : phi.image()) start |= bit(y);
  const Mask full = low_bits(t.size());
  std::unordered_set<Mask> dead;
  std::vector<std::size_t> order;
  std::function<bool(Mask)> search = [&](Mask k) {
    if (!is_subset(sji_inside(k), allowed)) return false;
    if (k == full) return true;
    if (dead.count(k)) return false;
    for (std::size_t a = 0; a < t.size(); ++a) {
      if (contains(k, a)) continue;
      bool closed = true;
      for_each_bit(k, [&](std::size_t x) { closed = closed && (t.join(a, x) == a || contains(k, t.join(a, x))); });
      if (!closed) continue;
      order.push_back(a);
      if (search(k | bit(a))) return true;
      order.pop_back();
    }
    dead.insert(k);
    return false;
  };
  if (!search(start)) return std::nullopt;
  return order;
}

FiniteLattice rees_quotient(const FiniteLattice& l, std::span<const std::size_t> ideal) {
  std::vector<bool> in(l.size(), false);
  for (std::size_t x : ideal) in.at(x) = true;
  if (ideal.empty()) fail(ErrorKind::NotADownset, "ideal is empty");
  if (in[l.top()]) fail(ErrorKind::TopInIdeal, "ideal contains the top");
  for (std::size_t x = 0; x < l.size(); ++x)
    if (in[x])
      for (std::size_t y = 0; y < l.size(); ++y)
        if (l.leq(y, x) && !in[y])
          fail(ErrorKind::NotADownset, l.label(y) + " lies below " + l.label(x) + " but outside the ideal");
  std::vector<std::size_t> kept{l.bottom()};
  for (std::size_t x = 0; x < l.size(); ++x)
    if (!in[x]) kept.push_back(x);
  std::vector<std::string> labels;
  for (std::size_t x : kept) labels.push_back(l.label(x));
  return FiniteLattice::from_order(
      std::move(labels), [&](std::size_t a, std::size_t b) { return a == 0 || (b != 0 && l.leq(kept[a], kept[b])); },
      room(kept.size()));
}

SubsemilatticeQuotient quotient_by_subsemilattice(const FiniteLattice& l, std::span<const std::size_t> s) {
  std::set<std::size_t> members(s.begin(), s.end());
  if (members.empty()) fail(ErrorKind::NotJoinClosed, "subsemilattice is empty");
  for (std::size_t a : members)
    for (std::size_t b : members)
      if (!members.count(l.join(a, b)))
        fail(ErrorKind::NotJoinClosed, "join of " + l.label(a) + " and " + l.label(b) + " is missing");
  const std::size_t n = l.size();
  std::vector<std::set<std::size_t>> reach(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t m : members) reach[x].insert(l.join(x, m));
  auto related = [&](std::size_t x, std::size_t y) {
    return std::any_of(reach[x].begin(), reach[x].end(), [&](std::size_t v) { return reach[y].count(v) > 0; });
  };
  SubsemilatticeQuotient out;
  out.raw_transitive = true;
  UnionFind uf(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (!related(x, y)) continue;
      uf.unite(x, y);
      for (std::size_t z = 0; z < n && out.raw_transitive; ++z)
        if (related(y, z) && !related(x, z)) out.raw_transitive = false;
    }
  out.raw_compatible = VCongruence(l, uf.labels()).compatible();
  for (bool grew = true; grew;) {
    grew = false;
    auto labels = uf.labels();
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = x + 1; y < n; ++y)
        if (labels[x] == labels[y])
          for (std::size_t z = 0; z < n; ++z) grew = uf.unite(l.join(x, z), l.join(y, z)) || grew;
  }
  out.congruence = VCongruence(l, uf.labels());
  out.quotient = quotient(out.congruence);
  return out;
}

bool is_strong_lattice_map(const VGenLattice& source, const VGenLattice& target,
                           std::span<const std::size_t> assignment) {
  const auto& sl = source.lattice();
  const auto& tl = target.lattice();
  if (assignment.size() != sl.size()) fail(ErrorKind::DimensionError, "map does not cover the source lattice");
  std::set<Mask> flats;
  for (std::size_t x = 0; x < sl.size(); ++x) flats.insert(source.gens_below(x));
  for (std::size_t y = 0; y < tl.size(); ++y) {
    Mask z = target.gens_below(y);
    Mask pre = 0;
    for (std::size_t i = 0; i < source.gen_count(); ++i) {
      std::size_t img = assignment[source.gens()[i]];
      auto p = target.gen_position(img);
      if (img == tl.bottom() || (p && contains(z, *p))) pre |= bit(i);
    }
    if (!flats.count(pre)) return false;
  }
  return true;
}

FlatMap induced_flat_map(const VMap& phi, const VGenLattice& source, const VGenLattice& target) {
  if (!(phi.source() == source.lattice()) || !(phi.target() == target.lattice()))
    fail(ErrorKind::DimensionError, "map and generated lattices disagree");
  if (!is_flg_arrow(phi, source, target))
    fail(ErrorKind::InvariantViolation, "generators are not sent to generators or the bottom");
  FlatMap out{flats_of_lattice(source), flats_of_lattice(target), {}};
  const auto& tm = out.target.members();
  for (Mask z : out.source.members()) {
    Mask image = 0;
    for_each_bit(z, [&](std::size_t i) {
      if (auto p = target.gen_position(phi(source.gens()[i]))) image |= bit(*p);
    });
    Mask closed = target.gens_below(target.join_of(image));
    out.assignment.push_back(
        static_cast<std::size_t>(std::lower_bound(tm.begin(), tm.end(), closed, subset_less) - tm.begin()));
  }
  return out;
}

bool preserves_joins(const FlatMap& m) {
  const auto& sm = m.source.members();
  const auto& tm = m.target.members();
  auto index = [](const std::vector<Mask>& ms, Mask z) {
    return static_cast<std::size_t>(std::lower_bound(ms.begin(), ms.end(), z, subset_less) - ms.begin());
  };
  if (m.assignment[index(sm, m.source.closure(0))] != index(tm, m.target.closure(0))) return false;
  for (std::size_t a = 0; a < sm.size(); ++a)
    for (std::size_t b = a + 1; b < sm.size(); ++b) {
      std::size_t lhs = m.assignment[index(sm, m.source.closure(sm[a] | sm[b]))];
      std::size_t rhs = index(tm, m.target.closure(tm[m.assignment[a]] | tm[m.assignment[b]]));
      if (lhs != rhs) return false;
    }
  return true;
}

namespace {

void require_representable(const HereditaryCollection& hc) {
  if (!is_simple(hc)) fail(ErrorKind::NotSimple, "collection is not simple");
  if (!is_boolean_representable(hc)) fail(ErrorKind::NotRepresentable, "collection is not boolean representable");
}

void require_ground_map(std::span<const std::size_t> image, const HereditaryCollection& from,
                        const HereditaryCollection& to) {
  if (image.size() != from.ground_size()) fail(ErrorKind::DimensionError, "map does not cover the ground set");
  for (std::size_t y : image)
    if (y >= to.ground_size()) fail(ErrorKind::DimensionError, "map value outside the target ground set");
}

}  // namespace

bool hc_strong_map(std::span<const std::size_t> image, const HereditaryCollection& from,
                   const HereditaryCollection& to) {
  require_ground_map(image, from, to);
  require_representable(from);
  require_representable(to);
  for (Mask z : to.flats().members()) {
    Mask pre = 0;
    for (std::size_t e = 0; e < image.size(); ++e)
      if (contains(z, image[e])) pre |= bit(e);
    if (!from.flats().contains(pre)) return false;
  }
  return true;
}

bool hc_weak_map(std::span<const std::size_t> image, const HereditaryCollection& from,
                 const HereditaryCollection& to) {
  require_ground_map(image, from, to);
  for (Mask x = 0; x <= from.ground().full(); ++x) {
    Mask mapped = 0;
    bool injective = true;
    for_each_bit(x, [&](std::size_t e) {
      injective = injective && !contains(mapped, image[e]);
      mapped |= bit(image[e]);
    });
    if (injective && to.contains(mapped) && !from.contains(x)) return false;
  }
  return true;
}

}  // namespace boolrep
