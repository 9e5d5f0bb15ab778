#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "boolrep/bool_matrix.hpp"
#include "boolrep/sb_value.hpp"

namespace boolrep {

// rows[k] is the marker row for cols[k]; under this pairing the square
// submatrix is lower triangular with a unit diagonal.
struct Witness {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
};

inline constexpr std::size_t kPermanentLimit = 12;

SBValue permanent(const BoolMatrix& m);

std::optional<Witness> nonsingular_certificate(const BoolMatrix& m);
bool is_nonsingular(const BoolMatrix& m);

std::optional<Witness> independence_witness(const BoolMatrix& m, Mask cols);
bool columns_independent(const BoolMatrix& m, Mask cols);

std::size_t matrix_rank(const BoolMatrix& m);

// Literal triangular-form check of a witness against m.
bool is_triangular_witness(const BoolMatrix& m, const Witness& w);

// Independence of every column subset, indexed by mask (at most 24 columns).
std::vector<bool> independence_table(const BoolMatrix& m);

}  // namespace boolrep
