#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "boolrep/bits.hpp"
#include "boolrep/finite_lattice.hpp"
#include "boolrep/ground_set.hpp"
#include "boolrep/hereditary.hpp"

namespace boolrep {

// Points and lines; lines are point masks.
struct Peg {
  GroundSet points;
  std::vector<Mask> lines;

  friend bool operator==(const Peg&, const Peg&) = default;
};

// Strata P_1..P_m of subsets of the ground, P_m = {E}.
struct MPeg {
  GroundSet ground;
  std::vector<std::vector<Mask>> strata;

  friend bool operator==(const MPeg&, const MPeg&) = default;
};

struct AxiomCheck {
  std::string axiom;
  bool holds = true;
  std::string witness;  // first violation, empty when the axiom holds
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;

  bool valid() const;
  // The first failing check, or nullptr.
  const AxiomCheck* first_violation() const;
};

AxiomReport validate_peg(const Peg& g);
AxiomReport validate_mpeg(const MPeg& g);

// Lines sorted by subset_less, strata likewise.
Peg normalized(Peg g);
MPeg normalized(MPeg g);

// Points become singletons, P_2 the lines and P_3 = {E}.
MPeg mpeg_of_peg(const Peg& g);

Peg geo_of_lattice(const VGenLattice& vg);  // throws WrongHeight
// Points below their lines; lines are labelled "{a,b}", the bottom "{}" and
// the top by the full point set. Throws TooFewLines, NotALattice on a bad PEG.
VGenLattice lat_of_peg(const Peg& g);

// Ground L \ {B} in element order, labelled by the element labels.
GroundSet nonbottom_ground(const FiniteLattice& l);
std::vector<std::size_t> nonbottom_elements(const FiniteLattice& l);
// Subsets of size <= 2 and 3-subsets joining to T. Throws WrongHeight.
HereditaryCollection mat_of_lattice(const FiniteLattice& l);
// 3-subsets of L \ {B} whose pairs all join to T, as masks over nonbottom_ground.
std::vector<Mask> potential_lines(const FiniteLattice& l);
// x is a set of non-bottom elements. Height 3 only.
bool c_indep_via_geometry(const FiniteLattice& l, std::span<const std::size_t> x);
// In Mat_0 L and not a potential line.
bool c_indep_via_matroid(const FiniteLattice& l, std::span<const std::size_t> x);

// Atoms as ground, P_i the atom sets of the elements of height i. Throws
// NotAtomic, WrongHeight (height below 3).
MPeg mpeg_of_atomic_lattice(const FiniteLattice& l);
// Inclusion order on {} and the strata, atoms as generators. Throws BadMpeg.
VGenLattice lattice_of_mpeg(const MPeg& g);

// Maximal members of Fl(L,E) other than E.
std::vector<Mask> hyperplanes_of(const VGenLattice& vg);
// x is a 4-subset of the generators. Throws WrongHeight, WrongSize.
bool four_subset_independent_via_hyperplane(const VGenLattice& vg, Mask x);

nlohmann::json to_json(const Peg& g);
nlohmann::json to_json(const MPeg& g);
nlohmann::json to_json(const AxiomReport& r);
Peg peg_from_json(const nlohmann::json& j);  // throws ParseError
Peg peg_from_json_text(std::string_view text);
// Levi graph: line nodes ranked above point nodes.
std::string to_dot(const Peg& g);

}  // namespace boolrep
