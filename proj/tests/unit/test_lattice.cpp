#include <doctest.h>

#include <random>
#include <set>

#include "boolrep/error.hpp"
#include "boolrep/generators.hpp"
#include "boolrep/independence.hpp"
#include "boolrep/lattice_io.hpp"
#include "boolrep/matrix_lattice.hpp"
#include "support/lattice_enum.hpp"
#include "support/oracles.hpp"

using namespace boolrep;
using boolrep::testing::boolean_lattice;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InvariantViolation;
}

std::vector<Mask> members(const GroundSet& g, std::vector<std::string> sets) {
  std::vector<Mask> out;
  for (auto& s : sets) out.push_back(s == "0" ? 0 : g.parse_subset(s));
  return out;
}

bool propma(const BoolMatrix& m) {
  std::set<Mask> rows(m.row_masks().begin(), m.row_masks().end());
  if (rows.size() != m.rows()) return false;
  if (!rows.contains(0) || !rows.contains(m.columns().full())) return false;
  for (Mask a : rows)
    for (Mask b : rows)
      if (!rows.contains(a | b)) return false;
  std::set<std::vector<bool>> cols;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    std::vector<bool> col;
    for (std::size_t r = 0; r < m.rows(); ++r) col.push_back(m.at(r, c));
    cols.insert(col);
  }
  return cols.size() == m.cols();
}

}  // namespace

TEST_SUITE("lattice") {
  TEST_CASE("construction from covers") {
    std::vector<CoverPair> chain{{0, 1}, {1, 2}};
    auto c = lattice_from_covers({"B", "a", "T"}, chain);
    CHECK(c.height() == 2);
    std::vector<CoverPair> diamond{{0, 1}, {0, 2}, {1, 3}, {2, 3}};
    auto d = lattice_from_covers({"B", "a", "b", "T"}, diamond);
    CHECK(d.join(1, 2) == 3);
    CHECK(d.meet(1, 2) == 0);
    std::vector<CoverPair> bowtie{{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 5}, {4, 5}};
    CHECK(kind_of([&] { lattice_from_covers({"B", "a", "b", "c", "d", "T"}, bowtie); }) ==
          ErrorKind::NotALattice);
    std::vector<CoverPair> cycle{{0, 1}, {1, 0}};
    CHECK(kind_of([&] { lattice_from_covers({"a", "b"}, cycle); }) == ErrorKind::CycleError);
  }

  TEST_CASE("redundant cover pairs are reduced") {
    std::vector<CoverPair> pairs{{0, 1}, {1, 2}, {0, 2}};
    auto l = lattice_from_covers({"B", "a", "T"}, pairs);
    CHECK(l.cover_pairs().size() == 2);
  }

  TEST_CASE("height, sji and smi") {
    std::vector<CoverPair> two{{0, 1}};
    auto c2 = lattice_from_covers({"B", "T"}, two);
    CHECK(height(c2) == 1);
    CHECK(sji_elements(c2) == std::vector<std::size_t>{1});
    CHECK(smi_elements(c2) == std::vector<std::size_t>{0});
    auto b3 = boolean_lattice(3);
    CHECK(height(b3) == 3);
    CHECK(sji_elements(b3) == atoms(b3));
    CHECK(sji_elements(b3).size() == 3);
  }

  TEST_CASE("one-element lattice and bottom generator are rejected") {
    auto one = FiniteLattice::from_covers({"B"}, {});
    CHECK(kind_of([&] { VGenLattice(one, {}); }) == ErrorKind::DegenerateLattice);
    auto b2 = boolean_lattice(2);
    CHECK(kind_of([&] { VGenLattice(b2, {0, 1, 2}); }) == ErrorKind::BottomElement);
    CHECK(kind_of([&] { VGenLattice(b2, {1}); }) == ErrorKind::NotGenerating);
  }

  TEST_CASE("matrix of a 2-chain") {
    std::vector<CoverPair> two{{0, 1}};
    VGenLattice vg(lattice_from_covers({"B", "T"}, two), {1});
    auto m = matrix_of(vg);
    CHECK(m.rows() == 2);
    CHECK(m.row_string(0) == "1");
    CHECK(m.row_string(1) == "0");
  }

  TEST_CASE("worked 3x5 example") {
    auto m = section3_matrix();
    auto [fl, y] = flats_of_matrix(m);
    const auto& g = m.columns();
    auto expected = members(g, {"0", "2", "3", "4", "23", "24", "345", "12345"});
    std::sort(expected.begin(), expected.end(), subset_less);
    CHECK(fl.members() == expected);
    CHECK(y == members(g, {"12345", "2", "3", "4", "345"}));
    auto vg = lattice_from_matrix(m);
    CHECK(height(vg.lattice()) == 3);
    CHECK(congruent(nu_matrix(m), section3_nu_matrix()));
    CHECK(congruent(matrix_of(vg), section3_nu_matrix()));
    // Cl {2,3} = 23; the generator positions follow the sorted element order.
    Mask two_three = 0;
    for (std::size_t i = 0; i < vg.gen_count(); ++i) {
      auto lbl = vg.lattice().label(vg.gens()[i]);
      if (lbl == "2" || lbl == "3") two_three |= bit(i);
    }
    CHECK(vg.lattice().label(vg.join_of(closure_in_lattice(vg, two_three))) == "23");
    CHECK(closure_in_lattice(vg, 0) == 0);
  }

  TEST_CASE("flats of the identity complement") {
    auto m = BoolMatrix::from_strings(GroundSet::numbered(3), {"011", "101", "110"});
    auto fl = flats_of_matrix(m).flats;
    CHECK(fl.size() == 5);
    CHECK(fl.full());
    auto z = BoolMatrix::from_strings(GroundSet::numbered(2), {"10", "00"});
    CHECK(kind_of([&] { flats_of_matrix(z); }) == ErrorKind::ZeroColumn);
  }

  TEST_CASE("congruence detects row and column permutations") {
    auto a = BoolMatrix::from_strings(GroundSet::numbered(3), {"110", "001", "011"});
    auto b = BoolMatrix::from_strings(GroundSet::numbered(3), {"100", "011", "110"});
    CHECK(congruent(a, b));
    auto c = BoolMatrix::from_strings(GroundSet::numbered(3), {"110", "001", "111"});
    CHECK_FALSE(congruent(a, c));
  }

  TEST_CASE("c-independence examples") {
    auto b3 = boolean_lattice(3);
    auto at = atoms(b3);
    CHECK(c_independent(b3, at));
    for (std::size_t x = 1; x < b3.size(); ++x)
      for (std::size_t y = x + 1; y < b3.size(); ++y) {
        std::vector<std::size_t> pair{x, y};
        CHECK(c_independent(b3, pair));
      }
    std::vector<std::size_t> with_bottom{b3.bottom(), at[0]};
    CHECK(kind_of([&] { c_independent(b3, with_bottom); }) == ErrorKind::BottomElement);
  }

  TEST_CASE("lattice text and DOT") {
    auto vg = lattice_from_matrix(section3_matrix());
    auto text = to_text(vg);
    auto back = vgen_lattice_from_text(text);
    CHECK(back == vg);
    auto dot = to_dot(vg);
    CHECK(dot.find("rankdir=BT") != std::string::npos);
    CHECK(dot.find("345*") != std::string::npos);
  }

  TEST_CASE("small lattice counts") {
    std::vector<std::size_t> expected{1, 1, 1, 2, 5, 15, 53};
    for (std::size_t n = 1; n <= 7; ++n) CHECK(testing::lattices_of_size(n).size() == expected[n - 1]);
  }

  TEST_CASE("properties on every lattice with at most 6 elements") {
    for (const auto& l : testing::lattices_up_to(6)) {
      if (l.size() < 2) continue;
      for (const auto& vg : testing::generating_sets(l)) {
        auto m = matrix_of(vg);
        CHECK(propma(m));
        CHECK(matrix_rank(m) == height(l));
        auto back = lattice_from_matrix(m);
        CHECK(flats_of_matrix(m).flats == flats_of_lattice(vg));
        CHECK(back.lattice().size() == l.size());
        CHECK(congruent(nu_matrix(m), m));
        for (Mask x = 0; x <= low_bits(vg.gen_count()); ++x) {
          Mask c = closure_in_lattice(vg, x);
          CHECK(is_subset(x, c));
          CHECK(closure_in_lattice(vg, c) == c);
        }
        // Three-element criterion on subsets of the generators.
        for (Mask x = 0; x <= low_bits(vg.gen_count()); ++x) {
          if (popcount(x) != 3) continue;
          bool some = false;
          for_each_bit(x, [&](std::size_t i) {
            if (!contains(closure_in_lattice(vg, x & ~bit(i)), i)) some = true;
          });
          CHECK(some == c_independent_gens(vg, x));
        }
      }
    }
  }

  TEST_CASE("c-independence agrees with orderings oracle and matrix witnesses") {
    for (const auto& l : testing::lattices_up_to(6)) {
      if (l.size() < 2) continue;
      auto ml = matrix_of(l);
      std::vector<std::size_t> nonbottom;
      for (std::size_t x = 0; x < l.size(); ++x)
        if (x != l.bottom()) nonbottom.push_back(x);
      for (Mask s = 0; s <= low_bits(nonbottom.size()); ++s) {
        std::vector<std::size_t> x;
        for_each_bit(s, [&](std::size_t i) { x.push_back(nonbottom[i]); });
        bool ci = c_independent(l, x);
        CHECK(ci == testing::c_independent_by_orderings(l, x));
        CHECK(ci == columns_independent(ml, s));
        if (x.size() <= 2) CHECK(ci);
      }
    }
  }
}
