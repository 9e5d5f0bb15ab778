#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "boolrep/bits.hpp"
#include "boolrep/ground_set.hpp"

namespace boolrep {

// 0/1 matrix whose columns are a labelled ground set. Each row is stored as
// the mask of columns holding a 1; its complement is the row's zero set.
class BoolMatrix {
 public:
  BoolMatrix() = default;
  // row_labels may be empty, in which case rows print unlabelled.
  BoolMatrix(GroundSet columns, std::vector<Mask> rows, std::vector<std::string> row_labels = {});

  // Rows given as strings of '0'/'1'.
  static BoolMatrix from_strings(GroundSet columns, const std::vector<std::string>& rows);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return columns_.size(); }
  const GroundSet& columns() const { return columns_; }

  bool at(std::size_t r, std::size_t c) const { return contains(rows_.at(r), c); }
  Mask row(std::size_t r) const { return rows_.at(r); }
  Mask zero_set(std::size_t r) const { return columns_.full() & ~rows_.at(r); }
  const std::vector<Mask>& row_masks() const { return rows_; }

  bool labelled() const { return !row_labels_.empty(); }
  const std::vector<std::string>& row_labels() const { return row_labels_; }
  std::string row_label(std::size_t r) const;
  std::string row_string(std::size_t r) const;

  // Requires at most 64 rows.
  BoolMatrix transpose() const;
  BoolMatrix select_rows(const std::vector<std::size_t>& which) const;

  friend bool operator==(const BoolMatrix&, const BoolMatrix&) = default;

 private:
  GroundSet columns_;
  std::vector<Mask> rows_;
  std::vector<std::string> row_labels_;
};

std::string to_text(const BoolMatrix& m);
BoolMatrix matrix_from_text(std::string_view text);

}  // namespace boolrep
