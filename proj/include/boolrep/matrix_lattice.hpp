#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "boolrep/bool_matrix.hpp"
#include "boolrep/finite_lattice.hpp"
#include "boolrep/flat_family.hpp"

namespace boolrep {

enum class MatrixColumns { Generators, AllNonBottom };

// Rows are the lattice elements; entry 0 exactly when the column element is
// below the row element.
BoolMatrix matrix_of(const VGenLattice& vg, MatrixColumns columns = MatrixColumns::Generators);
// The matrix with every non-bottom element as a column.
BoolMatrix matrix_of(const FiniteLattice& l);

struct MatrixFlats {
  FlatFamily flats;
  std::vector<Mask> y;  // y[j]: intersection of the zero sets of rows vanishing at column j
};

MatrixFlats flats_of_matrix(const BoolMatrix& m);
VGenLattice lattice_from_matrix(const BoolMatrix& m);

// Rows are the flats of m, columns keep m's labels (column j stands for y[j]).
BoolMatrix nu_matrix(const BoolMatrix& m);

// The family ordered by inclusion, generated by the closures of points.
VGenLattice lattice_of_family(const FlatFamily& f);
// {Z_x : x in L} over the generators.
FlatFamily flats_of_lattice(const VGenLattice& vg);

// Equal up to a permutation of rows and a permutation of columns.
bool congruent(const BoolMatrix& a, const BoolMatrix& b);

// Ordering of x with strictly decreasing suffix joins, if one exists.
std::optional<std::vector<std::size_t>> c_independence_chain(const FiniteLattice& l,
                                                             std::span<const std::size_t> x);
bool c_independent(const FiniteLattice& l, std::span<const std::size_t> x);
bool c_independent(const VGenLattice& vg, std::span<const std::size_t> x);
// Same, with x given as a subset of the generators.
bool c_independent_gens(const VGenLattice& vg, Mask x);

// Generators below the join of x.
Mask closure_in_lattice(const VGenLattice& vg, Mask x);

}  // namespace boolrep
