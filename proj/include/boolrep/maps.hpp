#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "boolrep/finite_lattice.hpp"
#include "boolrep/flat_family.hpp"
#include "boolrep/hereditary.hpp"

namespace boolrep {

// A total map between finite lattices; join preservation is checked separately.
class VMap {
 public:
  VMap() = default;
  VMap(FiniteLattice source, FiniteLattice target, std::vector<std::size_t> assignment);  // throws DimensionError

  static VMap identity(const FiniteLattice& l);

  const FiniteLattice& source() const { return source_; }
  const FiniteLattice& target() const { return target_; }
  const std::vector<std::size_t>& assignment() const { return assignment_; }
  std::size_t operator()(std::size_t x) const { return assignment_.at(x); }

  bool surjective() const;
  bool injective() const;
  std::vector<std::size_t> image() const;  // sorted, distinct

 private:
  FiniteLattice source_;
  FiniteLattice target_;
  std::vector<std::size_t> assignment_;
};

// A pair (x, y) with (x v y)phi != xphi v yphi, or (B, B) when B is not sent to B.
std::optional<std::pair<std::size_t, std::size_t>> join_violation(const VMap& phi);
bool is_vmap(const VMap& phi);
void validate_vmap(const VMap& phi);  // throws JoinViolation
// x -> second(first(x)); throws DimensionError unless first's target equals second's source.
VMap compose(const VMap& first, const VMap& second);
// E phi lies in E' together with the bottom.
bool is_flg_arrow(const VMap& phi, const VGenLattice& source, const VGenLattice& target);

class VCongruence {
 public:
  VCongruence() = default;
  // block[x] names the class of x; ids are renumbered by first occurrence.
  VCongruence(FiniteLattice lattice, std::vector<std::size_t> block);

  static VCongruence trivial(const FiniteLattice& l);
  static VCongruence kernel(const VMap& phi);
  // Classes {a, b} and singletons.
  static VCongruence pair(const FiniteLattice& l, std::size_t a, std::size_t b);

  const FiniteLattice& lattice() const { return lattice_; }
  std::size_t block_of(std::size_t x) const { return block_.at(x); }
  std::size_t block_count() const { return count_; }
  const std::vector<std::size_t>& blocks() const { return block_; }
  bool same(std::size_t x, std::size_t y) const { return block_.at(x) == block_.at(y); }
  std::vector<std::size_t> members(std::size_t block) const;
  bool compatible() const;   // x ~ y implies x v z ~ y v z
  void validate() const;     // throws NotACongruence
  bool trivial_relation() const { return count_ == lattice_.size(); }

  friend bool operator==(const VCongruence& a, const VCongruence& b) { return a.block_ == b.block_; }

 private:
  FiniteLattice lattice_;
  std::vector<std::size_t> block_;
  std::size_t count_ = 0;
};

struct Quotient {
  FiniteLattice lattice;  // one element per class, labelled by the class maximum
  VMap projection;
};

// Requires a join congruence; the classes are ordered by their maxima.
Quotient quotient(const VCongruence& rho);

class ClosureOp {
 public:
  ClosureOp() = default;
  ClosureOp(FiniteLattice lattice, std::vector<std::size_t> map);  // throws NotAClosure

  const FiniteLattice& lattice() const { return lattice_; }
  const std::vector<std::size_t>& map() const { return map_; }
  std::size_t operator()(std::size_t x) const { return map_.at(x); }
  std::vector<std::size_t> image() const;  // sorted closed elements

  friend bool operator==(const ClosureOp& a, const ClosureOp& b) { return a.map_ == b.map_; }

 private:
  FiniteLattice lattice_;
  std::vector<std::size_t> map_;
};

bool is_closure(const FiniteLattice& l, std::span<const std::size_t> map);
// x -> max of its class.
ClosureOp closure_from_congruence(const VCongruence& rho);
VCongruence congruence_from_closure(const ClosureOp& xi);
// x -> meet of the members of s above x; s must be closed under meets (NotIntersectionClosed).
ClosureOp closure_from_meet_subsemilattice(const FiniteLattice& l, std::span<const std::size_t> s);

// {Z_max(x rho)}; always contains E.
FlatFamily family_from_congruence(const VGenLattice& vg, const VCongruence& rho);
// x ~ y when the smallest members of f above Z_x and Z_y agree. f must contain E
// and consist of flats of vg (NotSubsemilattice otherwise).
VCongruence congruence_from_family(const VGenLattice& vg, const FlatFamily& f);

struct MpsStep {
  std::size_t upper;  // a, in the lattice before the step
  std::size_t lower;  // b, smi and covered by a
  Quotient result;
};

struct MpsFactorization {
  std::vector<MpsStep> steps;
  VMap bridge;  // isomorphism from the last quotient onto the target
};

struct MpiStep {
  VMap inclusion;     // K \ {a} into K
  std::size_t added;  // a, sji in K, as an index of K
};

struct MpiFactorization {
  VMap bridge;  // isomorphism from the source onto its image
  std::vector<MpiStep> steps;
};

struct CsiFactorization {
  MpsFactorization surjective;  // onto the image
  MpiFactorization injective;   // image into the target
};

MpsFactorization mps_factorize(const VMap& phi);  // throws NotSurjective
MpiFactorization mpi_factorize(const VMap& phi);  // throws NotInjective
CsiFactorization csi_factorize(const VMap& phi);
// Composition of all steps in order.
VMap recompose(const MpsFactorization& f);
VMap recompose(const MpiFactorization& f);
VMap recompose(const CsiFactorization& f);

// The lattice on a subset of elements that is closed under joins and contains the bottom.
FiniteLattice sub_join_semilattice(const FiniteLattice& l, std::span<const std::size_t> elements);

// Order in which the elements outside the image can be added one at a time,
// keeping every intermediate lattice generated inside E' (together with the image of E).
// Empty when no such chain of MPIs exists.
std::optional<std::vector<std::size_t>> generator_compatible_mpi_order(const VMap& phi, const VGenLattice& source,
                                                                       const VGenLattice& target);

// Collapses a downset not containing the top to a new bottom.
FiniteLattice rees_quotient(const FiniteLattice& l, std::span<const std::size_t> ideal);

struct SubsemilatticeQuotient {
  VCongruence congruence;
  Quotient quotient;
  bool raw_transitive = false;  // the defining relation was already an equivalence
  bool raw_compatible = false;  // its transitive closure was already a join congruence
};

// Quotient by the congruence generated by x ~ y iff x v s = y v s' for some s, s' in S.
SubsemilatticeQuotient quotient_by_subsemilattice(const FiniteLattice& l, std::span<const std::size_t> s);

// For every flat Z of the target, (Z + {B'}) phi^-1 meets E in a flat of the source.
bool is_strong_lattice_map(const VGenLattice& source, const VGenLattice& target,
                           std::span<const std::size_t> assignment);

struct FlatMap {
  FlatFamily source;
  FlatFamily target;
  std::vector<std::size_t> assignment;  // member index to member index
};

// Z -> closure of (Z phi minus B'); requires an FLg arrow.
FlatMap induced_flat_map(const VMap& phi, const VGenLattice& source, const VGenLattice& target);
bool preserves_joins(const FlatMap& m);

// Preimages of flats are flats. The map on ground sets is e -> image[e]; both
// collections must be simple and boolean representable (NotRepresentable).
bool hc_strong_map(std::span<const std::size_t> image, const HereditaryCollection& from,
                   const HereditaryCollection& to);
// X is in H whenever phi is injective on X and X phi is in H'.
bool hc_weak_map(std::span<const std::size_t> image, const HereditaryCollection& from,
                 const HereditaryCollection& to);

}  // namespace boolrep
