#include "boolrep/matrix_lattice.hpp"

#include <algorithm>
#include <unordered_set>

#include "boolrep/error.hpp"

namespace boolrep {

BoolMatrix matrix_of(const VGenLattice& vg, MatrixColumns columns) {
  const auto& l = vg.lattice();
  std::vector<std::size_t> cols;
  if (columns == MatrixColumns::Generators) {
    cols = vg.gens();
  } else {
    for (std::size_t x = 0; x < l.size(); ++x)
      if (x != l.bottom()) cols.push_back(x);
  }
  std::vector<std::string> col_labels;
  for (auto c : cols) col_labels.push_back(l.label(c));
  std::vector<Mask> rows;
  for (std::size_t r = 0; r < l.size(); ++r) {
    Mask ones = 0;
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (!l.leq(cols[j], r)) ones |= bit(j);
    rows.push_back(ones);
  }
  return BoolMatrix(GroundSet(std::move(col_labels)), std::move(rows), l.labels());
}

BoolMatrix matrix_of(const FiniteLattice& l) {
  std::vector<std::size_t> all;
  for (std::size_t x = 0; x < l.size(); ++x)
    if (x != l.bottom()) all.push_back(x);
  return matrix_of(VGenLattice(l, all), MatrixColumns::AllNonBottom);
}

MatrixFlats flats_of_matrix(const BoolMatrix& m) {
  const Mask full = m.columns().full();
  Mask covered = 0;
  for (Mask r : m.row_masks()) covered |= r;
  if (covered != full)
    fail(ErrorKind::ZeroColumn, "column '" + m.columns().label(lowest(full & ~covered)) + "' is zero");
  std::vector<Mask> zeros;
  for (std::size_t r = 0; r < m.rows(); ++r) zeros.push_back(m.zero_set(r));
  MatrixFlats out{FlatFamily::closure_of(m.columns(), zeros), {}};
  for (std::size_t j = 0; j < m.cols(); ++j) {
    Mask y = full;
    for (Mask z : zeros)
      if (contains(z, j)) y &= z;
    out.y.push_back(y);
  }
  return out;
}

VGenLattice lattice_of_family(const FlatFamily& f) {
  const auto& members = f.members();
  std::vector<std::string> labels;
  for (Mask z : members) labels.push_back(f.ground().format(z));
  auto lattice = FiniteLattice::from_order(
      std::move(labels), [&](std::size_t a, std::size_t b) { return is_subset(members[a], members[b]); },
      std::max(members.size(), FiniteLattice::kDefaultMaxElements));
  std::vector<std::size_t> gens;
  for (std::size_t e = 0; e < f.ground().size(); ++e) {
    Mask c = f.closure(bit(e));
    gens.push_back(static_cast<std::size_t>(
        std::lower_bound(members.begin(), members.end(), c, subset_less) - members.begin()));
  }
  return VGenLattice(std::move(lattice), std::move(gens));
}

VGenLattice lattice_from_matrix(const BoolMatrix& m) { return lattice_of_family(flats_of_matrix(m).flats); }

BoolMatrix nu_matrix(const BoolMatrix& m) {
  auto [flats, y] = flats_of_matrix(m);
  std::vector<Mask> rows;
  std::vector<std::string> labels;
  for (Mask z : flats.members()) {
    Mask ones = 0;
    for (std::size_t j = 0; j < y.size(); ++j)
      if (!is_subset(y[j], z)) ones |= bit(j);
    rows.push_back(ones);
    labels.push_back(m.columns().format(z));
  }
  return BoolMatrix(m.columns(), std::move(rows), std::move(labels));
}

FlatFamily flats_of_lattice(const VGenLattice& vg) {
  std::vector<Mask> members;
  for (std::size_t x = 0; x < vg.lattice().size(); ++x) members.push_back(vg.gens_below(x));
  return FlatFamily(vg.ground(), std::move(members));
}

namespace {

struct CongruenceSearch {
  const BoolMatrix& a;
  const BoolMatrix& b;
  std::vector<std::vector<std::size_t>> candidates;
  std::vector<std::size_t> image;  // image[i]: column of b assigned to column i of a
  Mask used = 0;

  static std::vector<std::size_t> signature(const BoolMatrix& m, std::size_t c) {
    std::vector<std::size_t> sig;
    for (Mask r : m.row_masks())
      if (contains(r, c)) sig.push_back(static_cast<std::size_t>(popcount(r)));
    std::sort(sig.begin(), sig.end());
    return sig;
  }

  bool rows_agree(std::size_t k) const {
    std::vector<Mask> ra, rb;
    for (Mask r : a.row_masks()) {
      Mask p = 0;
      for (std::size_t i = 0; i < k; ++i)
        if (contains(r, i)) p |= bit(i);
      ra.push_back(p);
    }
    for (Mask r : b.row_masks()) {
      Mask p = 0;
      for (std::size_t i = 0; i < k; ++i)
        if (contains(r, image[i])) p |= bit(i);
      rb.push_back(p);
    }
    std::sort(ra.begin(), ra.end());
    std::sort(rb.begin(), rb.end());
    return ra == rb;
  }

  bool extend(std::size_t k) {
    if (k == a.cols()) return true;
    for (auto c : candidates[k]) {
      if (contains(used, c)) continue;
      image[k] = c;
      used |= bit(c);
      if (rows_agree(k + 1) && extend(k + 1)) return true;
      used &= ~bit(c);
    }
    return false;
  }
};

}  // namespace

bool congruent(const BoolMatrix& a, const BoolMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  CongruenceSearch s{a, b, {}, std::vector<std::size_t>(a.cols()), 0};
  for (std::size_t i = 0; i < a.cols(); ++i) {
    auto sig = CongruenceSearch::signature(a, i);
    s.candidates.emplace_back();
    for (std::size_t j = 0; j < b.cols(); ++j)
      if (CongruenceSearch::signature(b, j) == sig) s.candidates.back().push_back(j);
    if (s.candidates.back().empty()) return false;
  }
  return s.rows_agree(0) && s.extend(0);
}

namespace {

bool peel_chain(const FiniteLattice& l, const std::vector<std::size_t>& xs, Mask remaining,
                std::unordered_set<Mask>& dead, std::vector<std::size_t>& chain) {
  if (popcount(remaining) <= 1) {
    if (remaining) chain.push_back(xs[lowest(remaining)]);
    return true;
  }
  if (dead.contains(remaining)) return false;
  auto join_of = [&](Mask m) {
    std::size_t j = l.bottom();
    for_each_bit(m, [&](std::size_t i) { j = l.join(j, xs[i]); });
    return j;
  };
  const std::size_t whole = join_of(remaining);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!contains(remaining, i)) continue;
    Mask rest = remaining & ~bit(i);
    if (join_of(rest) == whole) continue;
    chain.push_back(xs[i]);
    if (peel_chain(l, xs, rest, dead, chain)) return true;
    chain.pop_back();
  }
  dead.insert(remaining);
  return false;
}

}  // namespace

std::optional<std::vector<std::size_t>> c_independence_chain(const FiniteLattice& l,
                                                             std::span<const std::size_t> x) {
  std::vector<std::size_t> xs(x.begin(), x.end());
  std::sort(xs.begin(), xs.end(), [&](auto p, auto q) { return l.label(p) < l.label(q); });
  if (std::adjacent_find(xs.begin(), xs.end()) != xs.end())
    fail(ErrorKind::ParseError, "repeated element in c-independence query");
  if (xs.size() > 64) fail(ErrorKind::TooLarge, "c-independence query larger than 64");
  for (auto e : xs) {
    if (e >= l.size()) fail(ErrorKind::ParseError, "element out of range");
    if (e == l.bottom()) fail(ErrorKind::BottomElement, "the bottom cannot be c-independent");
  }
  std::unordered_set<Mask> dead;
  std::vector<std::size_t> chain;
  if (!peel_chain(l, xs, low_bits(xs.size()), dead, chain)) return std::nullopt;
  return chain;
}

bool c_independent(const FiniteLattice& l, std::span<const std::size_t> x) {
  return c_independence_chain(l, x).has_value();
}

bool c_independent(const VGenLattice& vg, std::span<const std::size_t> x) {
  return c_independent(vg.lattice(), x);
}

bool c_independent_gens(const VGenLattice& vg, Mask x) {
  std::vector<std::size_t> elems;
  for_each_bit(x, [&](std::size_t i) { elems.push_back(vg.gens().at(i)); });
  return c_independent(vg.lattice(), elems);
}

Mask closure_in_lattice(const VGenLattice& vg, Mask x) { return vg.gens_below(vg.join_of(x)); }

}  // namespace boolrep
