#pragma once

#include <string>
#include <string_view>

#include "boolrep/finite_lattice.hpp"

namespace boolrep {

std::string to_text(const FiniteLattice& l);
std::string to_text(const VGenLattice& vg);

FiniteLattice lattice_from_text(std::string_view text,
                                std::size_t max_elements = FiniteLattice::kDefaultMaxElements);
// Requires a `gens:` line.
VGenLattice vgen_lattice_from_text(std::string_view text,
                                   std::size_t max_elements = FiniteLattice::kDefaultMaxElements);

// Hasse diagram, drawn bottom-up; generators are marked with '*'.
std::string to_dot(const FiniteLattice& l);
std::string to_dot(const VGenLattice& vg);

}  // namespace boolrep
