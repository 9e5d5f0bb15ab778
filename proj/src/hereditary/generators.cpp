#include "boolrep/generators.hpp"

#include <algorithm>
#include <set>

#include "boolrep/error.hpp"

namespace boolrep {
namespace {

BoolMatrix digits_matrix(std::size_t n, const std::vector<std::string>& rows) {
  return BoolMatrix::from_strings(GroundSet::numbered(n), rows);
}

HereditaryCollection without(std::size_t n, std::size_t k, const std::vector<std::string>& removed,
                             const std::vector<std::string>& added = {}) {
  auto ground = GroundSet::numbered(n);
  auto drop = subsets_from_strings(ground, removed);
  std::vector<Mask> sets;
  for (Mask x : subsets_of_size_at_most(n, k))
    if (std::find(drop.begin(), drop.end(), x) == drop.end()) sets.push_back(x);
  for (Mask x : subsets_from_strings(ground, added)) sets.push_back(x);
  return HereditaryCollection::from_independents(ground, sets);
}

}  // namespace

std::vector<Mask> subsets_from_strings(const GroundSet& ground, const std::vector<std::string>& sets) {
  std::vector<Mask> out;
  for (const auto& s : sets) out.push_back(ground.parse_subset(s));
  return out;
}

std::vector<Mask> subsets_of_size_at_most(std::size_t n, std::size_t k) {
  std::vector<Mask> out;
  for (Mask x = 0; x < (Mask{1} << n); ++x)
    if (static_cast<std::size_t>(popcount(x)) <= k) out.push_back(x);
  return out;
}

HereditaryCollection uniform(std::size_t a, std::size_t b) {
  return HereditaryCollection::from_independents(GroundSet::numbered(b), subsets_of_size_at_most(b, a));
}

std::vector<Mask> fano_lines() {
  return subsets_from_strings(GroundSet::numbered(7), {"125", "137", "146", "236", "247", "345", "567"});
}

HereditaryCollection fano() {
  return without(7, 3, {"125", "137", "146", "236", "247", "345", "567"});
}

HereditaryCollection example_bigex() { return without(4, 3, {"123"}); }

BoolMatrix example_libourne_matrix() { return digits_matrix(4, {"1011", "0110", "0001"}); }

HereditaryCollection example_unio_first() {
  return without(6, 3, {"123", "125", "135", "235", "146", "246", "346", "456"});
}

HereditaryCollection example_unio_second() {
  return without(6, 2, {}, {"123", "124", "125", "126"});
}

HereditaryCollection example_truno() {
  return without(6, 3, {"135", "235", "146", "246", "346", "456"}, {"1234", "1236", "1245", "1256"});
}

HereditaryCollection example_fourpoints(unsigned triples) {
  const std::vector<std::string> all{"123", "124", "134", "234"};
  std::vector<std::string> kept;
  for (std::size_t t = 0; t < all.size(); ++t)
    if (triples & (1U << t)) kept.push_back(all[t]);
  if (kept.size() == 4) kept.push_back("1234");
  return without(4, 2, {}, kept);
}

HereditaryCollection example_equal_bases_nonmatroid() { return without(6, 4, {"2456", "3456"}); }

BoolMatrix section3_matrix() { return digits_matrix(5, {"10101", "10011", "11000"}); }

BoolMatrix section3_nu_matrix() {
  return digits_matrix(5, {"10101", "10011", "11000", "10111", "11011", "11101", "00000", "11111"});
}

BoolMatrix bigex_mindeg_witness() { return digits_matrix(4, {"0110", "1010", "1111"}); }

BoolMatrix bigex_full_matrix() {
  return digits_matrix(4, {"0000", "0001", "0110", "1010", "1100", "0111", "1011", "1101", "1110", "1111"});
}

BoolMatrix bigex_stack_first() {
  return digits_matrix(4, {"0000", "0001", "1100", "1011", "1101", "1111"});
}

BoolMatrix bigex_stack_second() {
  return digits_matrix(4, {"0000", "0110", "1010", "0111", "1110", "1111"});
}

BoolMatrix fano_mindeg_witness() {
  return digits_matrix(7, {"0011011", "0110101", "1001101", "1100011"});
}

BoolMatrix fano_stack_first() {
  return digits_matrix(7, {"0011011", "0110101", "1001101", "1100011", "1111000"});
}

BoolMatrix fano_stack_second() {
  return digits_matrix(7, {"0101110", "0110101", "1001101", "1010110", "1111000"});
}

BoolMatrix fano_stack_result() {
  return digits_matrix(7, {"0011011", "0101110", "0110101", "1001101", "1010110", "1100011", "1111000"});
}

HereditaryCollection random_hereditary(std::size_t n, std::size_t facet_count, std::mt19937_64& rng) {
  std::uniform_int_distribution<Mask> pick(0, low_bits(n));
  std::vector<Mask> facets;
  for (std::size_t i = 0; i < facet_count; ++i) facets.push_back(pick(rng));
  return HereditaryCollection::from_facets(GroundSet::numbered(n), facets);
}

HereditaryCollection random_linear_matroid(std::size_t n, std::size_t dim, unsigned p, std::mt19937_64& rng) {
  std::size_t space = 1;
  for (std::size_t i = 0; i < dim; ++i) space *= p;
  // Distinct projective points keep the matroid simple.
  if ((space - 1) / (p - 1) < n) fail(ErrorKind::TooLarge, "not enough projective points");
  std::uniform_int_distribution<unsigned> coord(0, p - 1);
  std::vector<std::vector<unsigned>> vecs;
  auto normalize = [&](std::vector<unsigned> v) {
    unsigned lead = 0;
    for (auto c : v)
      if (c) {
        lead = c;
        break;
      }
    unsigned inv = 1;
    while (lead * inv % p != 1) ++inv;
    for (auto& c : v) c = c * inv % p;
    return v;
  };
  std::set<std::vector<unsigned>> seen;
  while (vecs.size() < n) {
    std::vector<unsigned> v(dim);
    for (auto& c : v) c = coord(rng);
    if (std::all_of(v.begin(), v.end(), [](unsigned c) { return c == 0; })) continue;
    v = normalize(v);
    if (seen.insert(v).second) vecs.push_back(v);
  }
  auto independent = [&](Mask x) {
    std::vector<std::vector<unsigned>> rows;
    for_each_bit(x, [&](std::size_t i) { rows.push_back(vecs[i]); });
    std::size_t rank = 0;
    for (std::size_t col = 0; col < dim && rank < rows.size(); ++col) {
      std::size_t piv = rank;
      while (piv < rows.size() && rows[piv][col] == 0) ++piv;
      if (piv == rows.size()) continue;
      std::swap(rows[piv], rows[rank]);
      unsigned inv = 1;
      while (rows[rank][col] * inv % p != 1) ++inv;
      for (auto& c : rows[rank]) c = c * inv % p;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r == rank || rows[r][col] == 0) continue;
        unsigned f = rows[r][col];
        for (std::size_t k = 0; k < dim; ++k) rows[r][k] = (rows[r][k] + p * p - f * rows[rank][k] % p) % p;
      }
      ++rank;
    }
    return rank == rows.size();
  };
  return HereditaryCollection::from_predicate(GroundSet::numbered(n), independent);
}

}  // namespace boolrep
