#include "support/lattice_enum.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "boolrep/error.hpp"

namespace boolrep::testing {
namespace {

using Relation = std::vector<std::vector<bool>>;  // strict order on the middle elements

std::vector<bool> encode(const Relation& rel, const std::vector<std::size_t>& perm) {
  const std::size_t k = rel.size();
  std::vector<bool> code(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) code[perm[i] * k + perm[j]] = rel[i][j];
  return code;
}

std::optional<FiniteLattice> bounded_lattice(const Relation& rel) {
  const std::size_t k = rel.size();
  std::vector<std::string> labels{"B"};
  for (std::size_t i = 0; i < k; ++i) labels.push_back(std::string(1, static_cast<char>('a' + i)));
  labels.push_back("T");
  const std::size_t top = k + 1;
  try {
    return FiniteLattice::from_order(labels, [&](std::size_t x, std::size_t y) {
      if (x == y || x == 0 || y == top) return true;
      if (y == 0 || x == top) return false;
      return static_cast<bool>(rel[x - 1][y - 1]);
    });
  } catch (const Error&) {
    return std::nullopt;
  }
}

// Keeps the first member of each class under the permutations in `perms`.
void collect(const Relation& rel, const std::vector<std::vector<std::size_t>>& perms,
             std::set<std::vector<bool>>& seen, std::vector<FiniteLattice>& out) {
  std::vector<bool> best;
  for (const auto& p : perms) {
    auto c = encode(rel, p);
    if (best.empty() || c < best) best = c;
  }
  if (best.empty()) best.push_back(false);
  if (!seen.insert(best).second) return;
  if (auto l = bounded_lattice(rel)) out.push_back(std::move(*l));
}

std::vector<std::vector<std::size_t>> all_permutations(std::size_t k) {
  std::vector<std::size_t> p(k);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<std::size_t>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

std::vector<FiniteLattice> lattices_of_size(std::size_t n) {
  if (n == 1) return {FiniteLattice::from_covers({"B"}, {})};
  const std::size_t k = n - 2;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) pairs.emplace_back(i, j);
  const auto perms = all_permutations(k);
  std::set<std::vector<bool>> seen;
  std::vector<FiniteLattice> out;
  for (std::size_t s = 0; s < (std::size_t{1} << pairs.size()); ++s) {
    Relation rel(k, std::vector<bool>(k, false));
    for (std::size_t t = 0; t < pairs.size(); ++t)
      if (s >> t & 1) rel[pairs[t].first][pairs[t].second] = true;
    bool transitive = true;
    for (std::size_t a = 0; a < k && transitive; ++a)
      for (std::size_t b = 0; b < k && transitive; ++b)
        for (std::size_t c = 0; c < k && transitive; ++c)
          if (rel[a][b] && rel[b][c] && !rel[a][c]) transitive = false;
    if (transitive) collect(rel, perms, seen, out);
  }
  return out;
}

std::vector<FiniteLattice> lattices_up_to(std::size_t n) {
  std::vector<FiniteLattice> out;
  for (std::size_t m = 1; m <= n; ++m)
    for (auto& l : lattices_of_size(m)) out.push_back(std::move(l));
  return out;
}

std::vector<FiniteLattice> height3_lattices_up_to(std::size_t n) {
  std::vector<FiniteLattice> out;
  for (std::size_t total = 4; total <= n; ++total) {
    const std::size_t k = total - 2;
    for (std::size_t lower = 1; lower < k; ++lower) {
      const std::size_t upper = k - lower;
      // Canonical form: permute the smaller side, sort the other side's neighbour masks.
      const bool permute_lower = lower <= upper;
      const std::size_t small = permute_lower ? lower : upper;
      const std::size_t large = k - small;
      const auto perms = all_permutations(small);
      std::set<std::vector<Mask>> seen;
      for (Mask s = 0; s < (Mask{1} << (lower * upper)); ++s) {
        // Bit u * lower + l: lower element l is below upper element u.
        auto edge = [&](std::size_t l, std::size_t u) { return (s >> (u * lower + l) & 1) != 0; };
        bool every_upper_covered = true;
        for (std::size_t u = 0; u < upper; ++u) {
          bool any = false;
          for (std::size_t l = 0; l < lower; ++l) any = any || edge(l, u);
          every_upper_covered = every_upper_covered && any;
        }
        if (!every_upper_covered) continue;
        std::vector<Mask> best;
        for (const auto& p : perms) {
          std::vector<Mask> rows(large, 0);
          for (std::size_t b = 0; b < large; ++b)
            for (std::size_t a = 0; a < small; ++a)
              if (permute_lower ? edge(a, b) : edge(b, a)) rows[b] |= bit(p[a]);
          std::sort(rows.begin(), rows.end());
          if (best.empty() || rows < best) best = rows;
        }
        if (!seen.insert(best).second) continue;
        Relation rel(k, std::vector<bool>(k, false));
        for (std::size_t u = 0; u < upper; ++u)
          for (std::size_t l = 0; l < lower; ++l) rel[l][lower + u] = edge(l, u);
        if (auto l = bounded_lattice(rel); l && l->height() == 3) out.push_back(std::move(*l));
      }
    }
  }
  return out;
}

std::vector<VGenLattice> generating_sets(const FiniteLattice& l) {
  std::vector<VGenLattice> out;
  if (l.size() < 2) return out;
  auto required = sji_elements(l);
  std::vector<std::size_t> optional;
  for (std::size_t x = 0; x < l.size(); ++x)
    if (x != l.bottom() && std::find(required.begin(), required.end(), x) == required.end())
      optional.push_back(x);
  for (std::size_t s = 0; s < (std::size_t{1} << optional.size()); ++s) {
    auto gens = required;
    for (std::size_t i = 0; i < optional.size(); ++i)
      if (s >> i & 1) gens.push_back(optional[i]);
    out.emplace_back(l, gens);
  }
  return out;
}

FiniteLattice boolean_lattice(std::size_t k) {
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < (std::size_t{1} << k); ++x) {
    std::string s;
    for (std::size_t i = 0; i < k; ++i)
      if (x >> i & 1) s += static_cast<char>('a' + i);
    labels.push_back(s.empty() ? "0" : s);
  }
  return FiniteLattice::from_order(labels, [](std::size_t a, std::size_t b) { return (a & ~b) == 0; });
}

FiniteLattice chain(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("c" + std::to_string(i));
  return FiniteLattice::from_order(labels, [](std::size_t a, std::size_t b) { return a <= b; });
}

}  // namespace boolrep::testing
