#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include <json.hpp>

#include "boolrep/bool_matrix.hpp"
#include "boolrep/finite_lattice.hpp"
#include "boolrep/flat_family.hpp"
#include "boolrep/hereditary.hpp"

namespace boolrep {

struct EnumerationOptions {
  std::size_t max_flats = 24;  // cap on flats other than the empty set and E
  std::size_t jobs = 1;
};

// Full intersection-closed subfamilies of the flats are encoded as bitmasks
// over the nontrivial flats.
using FamilyCode = std::uint32_t;

struct RepRecord {
  FlatFamily family;
  VGenLattice lattice;
  BoolMatrix matrix;                  // one row per member, zero exactly on the member
  std::vector<std::size_t> smi_rows;  // rows that are not sums of other rows, zero row excluded
};

// Every member of f is a flat, f is intersection closed and contains the empty set and E.
void require_subfamily(const HereditaryCollection& hc, const FlatFamily& f);
bool represents(const HereditaryCollection& hc, const FlatFamily& f);

RepRecord make_record(const HereditaryCollection& hc, const FlatFamily& f);

class RepresentationSpace {
 public:
  explicit RepresentationSpace(const HereditaryCollection& hc, EnumerationOptions options = {});

  const HereditaryCollection& collection() const { return hc_; }
  const std::vector<Mask>& nontrivial_flats() const { return flats_; }
  FlatFamily family(FamilyCode code) const;

  // All codes in canonical family order.
  const std::vector<FamilyCode>& fisfl() const { return fisfl_; }
  bool in_im_theta(FamilyCode code) const { return state_.at(code) == kRepresents; }
  // Smi members other than the empty set whose removal stays in Im theta.
  std::size_t removable_smi(FamilyCode code) const;
  bool minimal(FamilyCode code) const { return in_im_theta(code) && removable_smi(code) == 0; }
  bool sji(FamilyCode code) const { return in_im_theta(code) && removable_smi(code) <= 1; }

  std::vector<FamilyCode> im_theta() const;
  std::vector<FamilyCode> minimal_codes() const;
  std::vector<FamilyCode> sji_codes() const;

  // Orbits of the given codes under the automorphisms of the collection.
  std::size_t orbit_count(const std::vector<FamilyCode>& codes) const;

 private:
  static constexpr std::uint8_t kOpen = 0, kClosed = 1, kRepresents = 2;

  HereditaryCollection hc_;
  std::vector<Mask> flats_;
  std::vector<std::uint8_t> state_;
  std::vector<FamilyCode> fisfl_;
  mutable std::vector<std::vector<std::size_t>> flat_perms_;

  bool closed(FamilyCode code, const std::vector<std::vector<int>>& meets) const;
  bool family_represents(FamilyCode code, std::vector<Mask>& scratch) const;
  bool smi_member(FamilyCode code, std::size_t i) const;
};

std::vector<FlatFamily> enumerate_fisfl(const HereditaryCollection& hc, EnumerationOptions options = {});
std::vector<RepRecord> enumerate_im_theta(const HereditaryCollection& hc, EnumerationOptions options = {});
std::vector<RepRecord> minimal_representations(const HereditaryCollection& hc, EnumerationOptions options = {});
std::vector<RepRecord> sji_representations(const HereditaryCollection& hc, EnumerationOptions options = {});

std::size_t count_up_to_e_bijection(const HereditaryCollection& hc, const std::vector<FlatFamily>& families);
std::size_t count_up_to_e_bijection(const HereditaryCollection& hc, const std::vector<RepRecord>& records);

FlatFamily join(const FlatFamily& a, const FlatFamily& b);
// Rows of a then rows of b, keeping the first occurrence of each row.
BoolMatrix stack_matrices(const BoolMatrix& a, const BoolMatrix& b);
// All sums of sets of rows, the zero row included.
BoolMatrix rowsum_closure(const BoolMatrix& m);
bool order_le(const RepRecord& a, const RepRecord& b);

// The collection of independent column sets of m.
HereditaryCollection collection_of_matrix(const BoolMatrix& m);
// Independent column sets of m equal H.
bool matrix_represents(const HereditaryCollection& hc, const BoolMatrix& m);
bool is_rowmin(const HereditaryCollection& hc, const BoolMatrix& m);

struct MindegResult {
  std::size_t degree = 0;
  BoolMatrix witness;
  std::vector<BoolMatrix> witnesses;  // every optimal row set, when requested
};

// Rows are complements of flats other than E. With all_witnesses set, every
// optimal row set is listed, up to `witness_limit`.
MindegResult mindeg(const HereditaryCollection& hc, bool all_witnesses = false,
                    std::size_t witness_limit = 100000);

nlohmann::json report_json(const RepresentationSpace& space, const std::vector<FamilyCode>& codes,
                           std::optional<std::size_t> mindeg_value);

}  // namespace boolrep
