#include "boolrep/reps.hpp"

#include <algorithm>
#include <set>
#include <thread>

#include "boolrep/error.hpp"
#include "boolrep/independence.hpp"
#include "boolrep/matrix_lattice.hpp"

namespace boolrep {
namespace {

// Cl_F for every subset: out[X] = intersection of the members containing X.
void closure_table(std::size_t n, const std::vector<Mask>& members, std::vector<Mask>& out) {
  const Mask full = low_bits(n);
  out.assign(std::size_t{1} << n, full);
  for (Mask z : members) out[z] = z;
  for (std::size_t e = 0; e < n; ++e)
    for (Mask x = out.size(); x-- > 0;)
      if (!contains(x, e)) out[x] &= out[x | bit(e)];
}

bool closure_orderable(const HereditaryCollection& hc, const std::vector<Mask>& cl) {
  std::vector<bool> good(cl.size(), false);
  for (Mask x : hc.independents()) {  // sorted by size
    if (x == 0) {
      good[0] = true;
      continue;
    }
    for (Mask rest = x; rest && !good[x]; rest &= rest - 1) {
      std::size_t i = lowest(rest);
      Mask smaller = x & ~bit(i);
      if (good[smaller] && !contains(cl[smaller], i)) good[x] = true;
    }
    if (!good[x]) return false;
  }
  return true;
}

bool members_less(const std::vector<Mask>& a, const std::vector<Mask>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), subset_less);
}

std::vector<Mask> sorted_members(std::vector<Mask> members) {
  std::sort(members.begin(), members.end(), subset_less);
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return members;
}

bool smi_in(const std::vector<Mask>& members, Mask z, Mask full) {
  if (z == full) return false;
  Mask above = full;
  for (Mask w : members)
    if (w != z && is_subset(z, w)) above &= w;
  return above != z;
}

}  // namespace

void require_subfamily(const HereditaryCollection& hc, const FlatFamily& f) {
  if (!(f.ground() == hc.ground())) fail(ErrorKind::GroundMismatch, "family and collection use different ground sets");
  if (!f.full()) fail(ErrorKind::NotIntersectionClosed, "family must contain the empty set");
  const auto& fl = hc.flats();
  for (Mask z : f.members())
    if (!fl.contains(z))
      fail(ErrorKind::NotSubsemilattice, "member " + hc.ground().format(z) + " is not a flat");
}

bool represents(const HereditaryCollection& hc, const FlatFamily& f) {
  require_subfamily(hc, f);
  std::vector<Mask> cl;
  closure_table(hc.ground_size(), f.members(), cl);
  return closure_orderable(hc, cl);
}

RepRecord make_record(const HereditaryCollection& hc, const FlatFamily& f) {
  require_subfamily(hc, f);
  const GroundSet& g = f.ground();
  std::vector<Mask> rows;
  std::vector<std::string> labels;
  std::vector<std::size_t> smi;
  for (Mask z : f.members()) {
    if (smi_in(f.members(), z, g.full())) smi.push_back(rows.size());
    rows.push_back(g.full() & ~z);
    labels.push_back(g.format(z));
  }
  return RepRecord{f, lattice_of_family(f), BoolMatrix(g, std::move(rows), std::move(labels)), std::move(smi)};
}

RepresentationSpace::RepresentationSpace(const HereditaryCollection& hc, EnumerationOptions options) : hc_(hc) {
  const Mask full = hc.ground().full();
  for (Mask z : hc.flats().members())
    if (z != 0 && z != full) flats_.push_back(z);
  const std::size_t k = flats_.size();
  if (k > options.max_flats || k > 30)
    fail(ErrorKind::TooLarge, std::to_string(k) + " nontrivial flats exceed the enumeration cap of " +
                                  std::to_string(std::min<std::size_t>(options.max_flats, 30)));

  std::vector<std::vector<int>> meets(k, std::vector<int>(k, -1));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      auto it = std::find(flats_.begin(), flats_.end(), flats_[i] & flats_[j]);
      if (it != flats_.end()) meets[i][j] = static_cast<int>(it - flats_.begin());
    }

  const std::size_t total = std::size_t{1} << k;
  state_.assign(total, kOpen);
  const std::size_t jobs = std::max<std::size_t>(1, options.jobs);
  auto work = [&](std::size_t first, std::size_t last) {
    std::vector<Mask> scratch;
    for (std::size_t code = first; code < last; ++code) {
      auto c = static_cast<FamilyCode>(code);
      if (!closed(c, meets)) continue;
      state_[code] = family_represents(c, scratch) ? kRepresents : kClosed;
    }
  };
  if (jobs == 1 || total < 4096) {
    work(0, total);
  } else {
    std::vector<std::jthread> threads;
    const std::size_t chunk = (total + jobs - 1) / jobs;
    for (std::size_t t = 0; t < jobs; ++t) {
      std::size_t first = t * chunk, last = std::min(total, first + chunk);
      if (first < last) threads.emplace_back(work, first, last);
    }
  }

  std::vector<std::pair<std::vector<Mask>, FamilyCode>> keyed;
  for (std::size_t code = 0; code < total; ++code)
    if (state_[code] != kOpen) keyed.emplace_back(family(static_cast<FamilyCode>(code)).members(), code);
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return members_less(a.first, b.first); });
  fisfl_.reserve(keyed.size());
  for (auto& [members, code] : keyed) fisfl_.push_back(code);
}

bool RepresentationSpace::closed(FamilyCode code, const std::vector<std::vector<int>>& meets) const {
  for (Mask a = code; a; a &= a - 1) {
    std::size_t i = lowest(a);
    for (Mask b = a & (a - 1); b; b &= b - 1) {
      int m = meets[i][lowest(b)];
      if (m >= 0 && !contains(code, static_cast<std::size_t>(m))) return false;
    }
  }
  return true;
}

bool RepresentationSpace::family_represents(FamilyCode code, std::vector<Mask>& scratch) const {
  std::vector<Mask> members{0};
  for_each_bit(code, [&](std::size_t i) { members.push_back(flats_[i]); });
  closure_table(hc_.ground_size(), members, scratch);
  return closure_orderable(hc_, scratch);
}

FlatFamily RepresentationSpace::family(FamilyCode code) const {
  std::vector<Mask> members{0, hc_.ground().full()};
  for_each_bit(code, [&](std::size_t i) { members.push_back(flats_[i]); });
  return FlatFamily(hc_.ground(), std::move(members));
}

bool RepresentationSpace::smi_member(FamilyCode code, std::size_t i) const {
  Mask above = hc_.ground().full();
  for_each_bit(code, [&](std::size_t j) {
    if (j != i && is_subset(flats_[i], flats_[j])) above &= flats_[j];
  });
  return above != flats_[i];
}

std::size_t RepresentationSpace::removable_smi(FamilyCode code) const {
  std::size_t count = 0;
  for_each_bit(code, [&](std::size_t i) {
    if (smi_member(code, i) && state_[code & ~bit(i)] == kRepresents) ++count;
  });
  return count;
}

std::vector<FamilyCode> RepresentationSpace::im_theta() const {
  std::vector<FamilyCode> out;
  for (FamilyCode c : fisfl_)
    if (in_im_theta(c)) out.push_back(c);
  return out;
}

std::vector<FamilyCode> RepresentationSpace::minimal_codes() const {
  std::vector<FamilyCode> out;
  for (FamilyCode c : fisfl_)
    if (minimal(c)) out.push_back(c);
  return out;
}

std::vector<FamilyCode> RepresentationSpace::sji_codes() const {
  std::vector<FamilyCode> out;
  for (FamilyCode c : fisfl_)
    if (sji(c)) out.push_back(c);
  return out;
}

std::size_t RepresentationSpace::orbit_count(const std::vector<FamilyCode>& codes) const {
  if (flat_perms_.empty()) {
    for (const auto& perm : automorphisms(hc_)) {
      std::vector<std::size_t> image(flats_.size());
      for (std::size_t i = 0; i < flats_.size(); ++i)
        image[i] = static_cast<std::size_t>(
            std::find(flats_.begin(), flats_.end(), apply_permutation(perm, flats_[i])) - flats_.begin());
      flat_perms_.push_back(std::move(image));
    }
  }
  std::set<FamilyCode> canonical;
  for (FamilyCode c : codes) {
    FamilyCode best = c;
    for (const auto& image : flat_perms_) {
      FamilyCode mapped = 0;
      for_each_bit(c, [&](std::size_t i) { mapped |= FamilyCode{1} << image[i]; });
      best = std::min(best, mapped);
    }
    canonical.insert(best);
  }
  return canonical.size();
}

std::vector<FlatFamily> enumerate_fisfl(const HereditaryCollection& hc, EnumerationOptions options) {
  RepresentationSpace space(hc, options);
  std::vector<FlatFamily> out;
  for (FamilyCode c : space.fisfl()) out.push_back(space.family(c));
  return out;
}

namespace {

std::vector<RepRecord> records_of(const RepresentationSpace& space, const std::vector<FamilyCode>& codes) {
  std::vector<RepRecord> out;
  out.reserve(codes.size());
  for (FamilyCode c : codes) out.push_back(make_record(space.collection(), space.family(c)));
  return out;
}

}  // namespace

std::vector<RepRecord> enumerate_im_theta(const HereditaryCollection& hc, EnumerationOptions options) {
  RepresentationSpace space(hc, options);
  return records_of(space, space.im_theta());
}

std::vector<RepRecord> minimal_representations(const HereditaryCollection& hc, EnumerationOptions options) {
  RepresentationSpace space(hc, options);
  return records_of(space, space.minimal_codes());
}

std::vector<RepRecord> sji_representations(const HereditaryCollection& hc, EnumerationOptions options) {
  RepresentationSpace space(hc, options);
  return records_of(space, space.sji_codes());
}

std::size_t count_up_to_e_bijection(const HereditaryCollection& hc, const std::vector<FlatFamily>& families) {
  auto perms = automorphisms(hc);
  std::set<std::vector<Mask>, decltype(&members_less)> canonical(&members_less);
  for (const auto& f : families) {
    std::vector<Mask> best = f.members();
    for (const auto& perm : perms) {
      std::vector<Mask> image;
      for (Mask z : f.members()) image.push_back(apply_permutation(perm, z));
      image = sorted_members(std::move(image));
      if (members_less(image, best)) best = std::move(image);
    }
    canonical.insert(std::move(best));
  }
  return canonical.size();
}

std::size_t count_up_to_e_bijection(const HereditaryCollection& hc, const std::vector<RepRecord>& records) {
  std::vector<FlatFamily> families;
  for (const auto& r : records) families.push_back(r.family);
  return count_up_to_e_bijection(hc, families);
}

FlatFamily join(const FlatFamily& a, const FlatFamily& b) {
  if (!(a.ground() == b.ground())) fail(ErrorKind::GroundMismatch, "families use different ground sets");
  std::vector<Mask> members = a.members();
  members.insert(members.end(), b.members().begin(), b.members().end());
  for (Mask x : a.members())
    for (Mask y : b.members()) members.push_back(x & y);
  return FlatFamily(a.ground(), sorted_members(std::move(members)));
}

BoolMatrix stack_matrices(const BoolMatrix& a, const BoolMatrix& b) {
  if (!(a.columns() == b.columns())) fail(ErrorKind::GroundMismatch, "matrices have different columns");
  std::vector<Mask> rows;
  std::vector<std::string> labels;
  const bool labelled = a.labelled() && b.labelled();
  auto take = [&](const BoolMatrix& m) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (std::find(rows.begin(), rows.end(), m.row(r)) != rows.end()) continue;
      rows.push_back(m.row(r));
      if (labelled) labels.push_back(m.row_label(r));
    }
  };
  take(a);
  take(b);
  if (std::set<std::string>(labels.begin(), labels.end()).size() != labels.size()) labels.clear();
  return BoolMatrix(a.columns(), std::move(rows), std::move(labels));
}

BoolMatrix rowsum_closure(const BoolMatrix& m) {
  std::set<Mask> sums{0};
  for (Mask r : m.row_masks()) {
    std::vector<Mask> grown(sums.begin(), sums.end());
    for (Mask s : grown) sums.insert(s | r);
  }
  std::vector<Mask> rows;
  for (Mask r : m.row_masks())
    if (std::find(rows.begin(), rows.end(), r) == rows.end()) rows.push_back(r);
  std::vector<Mask> extra;
  for (Mask s : sums)
    if (std::find(rows.begin(), rows.end(), s) == rows.end()) extra.push_back(s);
  std::sort(extra.begin(), extra.end(), subset_less);
  rows.insert(rows.end(), extra.begin(), extra.end());
  return BoolMatrix(m.columns(), std::move(rows));
}

bool order_le(const RepRecord& a, const RepRecord& b) {
  if (!(a.family.ground() == b.family.ground())) fail(ErrorKind::GroundMismatch, "records use different ground sets");
  return std::includes(b.family.members().begin(), b.family.members().end(), a.family.members().begin(),
                       a.family.members().end(), subset_less);
}

HereditaryCollection collection_of_matrix(const BoolMatrix& m) {
  const auto table = independence_table(m);
  return HereditaryCollection::from_predicate(m.columns(), [&](Mask x) { return table[x]; });
}

bool matrix_represents(const HereditaryCollection& hc, const BoolMatrix& m) {
  if (!(m.columns() == hc.ground())) fail(ErrorKind::GroundMismatch, "matrix columns differ from the ground set");
  auto table = independence_table(m);
  for (Mask x = 0; x < table.size(); ++x)
    if (table[x] != hc.contains(x)) return false;
  return true;
}

bool is_rowmin(const HereditaryCollection& hc, const BoolMatrix& m) {
  if (!matrix_represents(hc, m)) fail(ErrorKind::NotARepresentation, "matrix does not represent the collection");
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::vector<std::size_t> keep;
    for (std::size_t s = 0; s < m.rows(); ++s)
      if (s != r) keep.push_back(s);
    if (matrix_represents(hc, m.select_rows(keep))) return false;
  }
  return true;
}

}  // namespace boolrep
