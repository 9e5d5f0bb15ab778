#include "boolrep/independence.hpp"

#include <unordered_set>

#include "boolrep/error.hpp"

namespace boolrep {
namespace {

void require_square(const BoolMatrix& m) {
  if (m.rows() != m.cols())
    fail(ErrorKind::DimensionError, "matrix is " + std::to_string(m.rows()) + "x" +
                                        std::to_string(m.cols()) + ", expected square");
}

SBValue permanent_from(const BoolMatrix& m, std::size_t r, Mask free_cols) {
  if (r == m.rows()) return SBValue::One;
  SBValue sum = SBValue::Zero;
  Mask candidates = m.row(r) & free_cols;
  for_each_bit(candidates, [&](std::size_t c) {
    if (sum == SBValue::OneNu) return;  // saturated
    sum += permanent_from(m, r + 1, free_cols & ~bit(c));
  });
  return sum;
}

// Peels marker rows off the column set `remaining`. A row that served as a
// marker is zero on everything left afterwards, so rows never need tracking.
bool peel(const BoolMatrix& m, Mask remaining, std::unordered_set<Mask>& dead, Witness& w) {
  if (remaining == 0) return true;
  if (dead.contains(remaining)) return false;
  Mask tried = 0;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Mask hit = m.row(r) & remaining;
    if (popcount(hit) != 1 || (hit & tried)) continue;
    tried |= hit;
    w.rows.push_back(r);
    w.cols.push_back(lowest(hit));
    if (peel(m, remaining & ~hit, dead, w)) return true;
    w.rows.pop_back();
    w.cols.pop_back();
  }
  dead.insert(remaining);
  return false;
}

}  // namespace

SBValue permanent(const BoolMatrix& m) {
  require_square(m);
  if (m.rows() == 0) fail(ErrorKind::DimensionError, "permanent of an empty matrix");
  if (m.rows() > kPermanentLimit)
    fail(ErrorKind::SizeError, "permanent limited to n <= 12");
  return permanent_from(m, 0, m.columns().full());
}

std::optional<Witness> nonsingular_certificate(const BoolMatrix& m) {
  require_square(m);
  Witness w;
  Mask cols = m.columns().full();
  std::vector<bool> used(m.rows(), false);
  while (cols) {
    bool found = false;
    for (std::size_t r = 0; r < m.rows() && !found; ++r) {
      if (used[r]) continue;
      Mask hit = m.row(r) & cols;
      if (popcount(hit) != 1) continue;
      used[r] = true;
      w.rows.push_back(r);
      w.cols.push_back(lowest(hit));
      cols &= ~hit;
      found = true;
    }
    if (!found) return std::nullopt;
  }
  return w;
}

bool is_nonsingular(const BoolMatrix& m) { return nonsingular_certificate(m).has_value(); }

std::optional<Witness> independence_witness(const BoolMatrix& m, Mask cols) {
  if (!is_subset(cols, m.columns().full())) fail(ErrorKind::UnknownColumn, "column outside matrix");
  std::unordered_set<Mask> dead;
  Witness w;
  if (!peel(m, cols, dead, w)) return std::nullopt;
  return w;
}

bool columns_independent(const BoolMatrix& m, Mask cols) {
  return independence_witness(m, cols).has_value();
}

std::size_t matrix_rank(const BoolMatrix& m) {
  // Independent sets are downward closed, so each level is reached by
  // extending the previous one.
  std::unordered_set<Mask> level{0};
  std::size_t rank = 0;
  while (!level.empty()) {
    std::unordered_set<Mask> next;
    for (Mask s : level) {
      Mask outside = m.columns().full() & ~s;
      for_each_bit(outside, [&](std::size_t c) {
        Mask t = s | bit(c);
        if (!next.contains(t) && columns_independent(m, t)) next.insert(t);
      });
    }
    if (next.empty()) break;
    ++rank;
    level = std::move(next);
  }
  return rank;
}

bool is_triangular_witness(const BoolMatrix& m, const Witness& w) {
  if (w.rows.size() != w.cols.size()) return false;
  for (std::size_t i = 0; i < w.rows.size(); ++i) {
    if (!m.at(w.rows[i], w.cols[i])) return false;
    for (std::size_t j = i + 1; j < w.cols.size(); ++j)
      if (m.at(w.rows[i], w.cols[j])) return false;
  }
  return true;
}

std::vector<bool> independence_table(const BoolMatrix& m) {
  if (m.cols() > 24) fail(ErrorKind::TooLarge, "independence table limited to 24 columns");
  const Mask n = Mask{1} << m.cols();
  std::vector<bool> ind(n, false);
  ind[0] = true;
  for (Mask x = 1; x < n; ++x) {
    for (Mask r : m.row_masks()) {
      Mask hit = r & x;
      if (popcount(hit) == 1 && ind[x & ~hit]) {
        ind[x] = true;
        break;
      }
    }
  }
  return ind;
}

}  // namespace boolrep
