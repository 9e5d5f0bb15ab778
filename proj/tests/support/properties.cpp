#include "support/properties.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "boolrep/geometry.hpp"
#include "boolrep/hereditary.hpp"
#include "boolrep/independence.hpp"
#include "boolrep/maps.hpp"
#include "boolrep/matrix_lattice.hpp"
#include "support/collections.hpp"
#include "support/lattice_enum.hpp"
#include "support/oracles.hpp"

namespace boolrep::testing {

void PropertyResult::check(bool ok, const std::string& what) {
  ++checked;
  if (ok) return;
  if (violations++ == 0) first_violation = what;
}

namespace {

BoolMatrix square(std::size_t n, std::uint64_t bits) {
  std::vector<Mask> rows(n);
  for (std::size_t r = 0; r < n; ++r) rows[r] = (bits >> (r * n)) & low_bits(n);
  return BoolMatrix(GroundSet::numbered(n), rows);
}

std::vector<std::size_t> elements_of(const std::vector<std::size_t>& pool, Mask pick) {
  std::vector<std::size_t> out;
  for_each_bit(pick, [&](std::size_t i) { out.push_back(pool[i]); });
  return out;
}

std::vector<std::size_t> nonzero_sji(const FiniteLattice& l) {
  std::vector<std::size_t> out;
  for (std::size_t x : sji_elements(l))
    if (x != l.bottom()) out.push_back(x);
  return out;
}

// Restricted growth strings give every partition of the elements once.
std::vector<VCongruence> congruences(const FiniteLattice& l) {
  std::vector<VCongruence> out;
  std::vector<std::size_t> block(l.size(), 0);
  auto rec = [&](auto&& self, std::size_t i, std::size_t used) -> void {
    if (i == l.size()) {
      VCongruence rho(l, block);
      if (rho.compatible()) out.push_back(std::move(rho));
      return;
    }
    for (std::size_t b = 0; b <= used; ++b) {
      block[i] = b;
      self(self, i + 1, std::max(used, b + 1));
    }
  };
  if (!l.size()) return out;
  rec(rec, 1, 1);
  return out;
}

// Sets of flats containing E and closed under intersection.
std::vector<FlatFamily> subfamilies(const VGenLattice& vg) {
  const auto flats = flats_of_lattice(vg).members();
  const Mask full = vg.ground().full();
  std::vector<FlatFamily> out;
  for (Mask pick = 0; pick < bit(flats.size()); ++pick) {
    std::set<Mask> members;
    for_each_bit(pick, [&](std::size_t i) { members.insert(flats[i]); });
    if (!members.contains(full)) continue;
    bool closed = true;
    for (Mask a : members)
      for (Mask b : members) closed = closed && members.contains(a & b);
    if (closed) out.emplace_back(vg.ground(), std::vector<Mask>(members.begin(), members.end()));
  }
  return out;
}

std::string describe(const BoolMatrix& m) { return to_text(m); }

}  // namespace

PropertyResult nonsingular_iff_permanent(std::uint64_t seed) {
  PropertyResult r{"nonsingular iff permanent is one"};
  auto one = [&](const BoolMatrix& m) {
    r.check(is_nonsingular(m) == (permanent_by_permutations(m) == SBValue::One), describe(m));
  };
  for (std::size_t n : {3, 4})
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (n * n)); ++bits) one(square(n, bits));
  std::mt19937_64 rng(seed);
  for (int i = 0; i < 20000; ++i) one(square(5, rng() & low_bits(25)));
  return r;
}

PropertyResult c_independence_iff_matrix_witness() {
  PropertyResult r{"c-independence iff independent columns of M(L)"};
  for (const auto& l : lattices_up_to(7)) {
    if (l.size() < 2) continue;
    const auto m = matrix_of(l);
    std::vector<std::size_t> nonbottom;
    for (std::size_t x = 0; x < l.size(); ++x)
      if (x != l.bottom()) nonbottom.push_back(x);
    for (Mask s = 0; s <= low_bits(nonbottom.size()); ++s) {
      const auto x = elements_of(nonbottom, s);
      const bool ci = c_independent(l, x);
      r.check(ci == columns_independent(m, s) && ci == c_independent_by_orderings(l, x),
              "lattice of size " + std::to_string(l.size()) + ", subset mask " + std::to_string(s));
    }
  }
  return r;
}

PropertyResult representability_iff_flat_matrix() {
  PropertyResult r{"representable iff the flat matrix represents H"};
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& hc : simple_collections(n)) {
      const auto m = matrix_of(lattice_of_family(flats(hc)));
      bool matches = true;
      for (Mask x = 0; x <= hc.ground().full(); ++x) matches = matches && hc.contains(x) == columns_independent(m, x);
      const bool rep = is_boolean_representable(hc);
      r.check(rep == matches && rep == representable_by_orderings(hc),
              "collection with facets count " + std::to_string(hc.facets().size()) + " on " + std::to_string(n));
    }
  return r;
}

PropertyResult rank_equals_height() {
  PropertyResult r{"rank of M(L,E) equals height"};
  for (const auto& l : lattices_up_to(7)) {
    if (l.size() < 2) continue;
    const std::size_t ml_rank = matrix_rank(matrix_of(l));
    for (const auto& vg : generating_sets(l))
      r.check(matrix_rank(matrix_of(vg)) == l.height() && ml_rank == l.height(),
              "lattice of size " + std::to_string(l.size()) + " with " + std::to_string(vg.gen_count()) +
                  " generators");
  }
  return r;
}

PropertyResult matrix_lattice_round_trips(std::uint64_t seed) {
  PropertyResult r{"matrix and lattice round trips"};
  for (const auto& l : lattices_up_to(7)) {
    if (l.size() < 2) continue;
    for (const auto& vg : generating_sets(l)) {
      const auto m = matrix_of(vg);
      const auto back = lattice_from_matrix(m);
      const std::string where = "lattice of size " + std::to_string(l.size());
      r.check(flats_of_matrix(m).flats == flats_of_lattice(vg), where + ": Fl of M(L) differs");
      r.check(back.lattice().size() == l.size(), where + ": size changed");
      r.check(congruent(nu_matrix(m), m), where + ": nu matrix not congruent");
      r.check(congruent(matrix_of(back), m), where + ": matrix of lattice not congruent");
    }
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> dim(2, 6);
  for (int i = 0; i < 5000; ++i) {
    const std::size_t cols = dim(rng);
    std::vector<Mask> rows(dim(rng));
    for (auto& row : rows) row = rng() & low_bits(cols);
    // Every column needs a nonzero entry.
    rows.push_back(low_bits(cols));
    const BoolMatrix m(GroundSet::numbered(cols), rows);
    const auto nu = nu_matrix(m);
    r.check(flats_of_matrix(nu).flats == flats_of_matrix(m).flats, describe(m) + ": flats of nu matrix differ");
    r.check(congruent(nu_matrix(nu), nu), describe(m) + ": nu matrix not idempotent");
  }
  return r;
}

PropertyResult closure_congruence_round_trips() {
  PropertyResult r{"closure, congruence and flat family round trips"};
  for (const auto& l : lattices_up_to(6)) {
    const std::string where = "lattice of size " + std::to_string(l.size());
    const auto all = congruences(l);
    for (const auto& rho : all) {
      const auto xi = closure_from_congruence(rho);
      r.check(congruence_from_closure(xi) == rho, where + ": congruence round trip");
      r.check(closure_from_meet_subsemilattice(l, xi.image()) == xi, where + ": subsemilattice round trip");
    }
    if (l.size() < 2) continue;
    for (const auto& vg : generating_sets(l)) {
      for (const auto& rho : all)
        r.check(congruence_from_family(vg, family_from_congruence(vg, rho)) == rho, where + ": via flat families");
      for (const auto& f : subfamilies(vg))
        r.check(family_from_congruence(vg, congruence_from_family(vg, f)) == f, where + ": flat family round trip");
    }
  }
  return r;
}

PropertyResult height3_matroid_and_independence() {
  PropertyResult r{"Mat L is a matroid and c-independence characterisations agree"};
  for (const auto& l : height3_lattices_up_to(9)) {
    const std::string where = "height-3 lattice of size " + std::to_string(l.size());
    const auto mat = mat_of_lattice(l);
    r.check(is_matroid(mat), where + ": Mat L not a matroid");
    const auto elems = nonbottom_elements(l);
    const auto pl = potential_lines(l);
    for (Mask x = 0; x < bit(elems.size()); ++x) {
      if (popcount(x) > 4) continue;
      const auto xs = elements_of(elems, x);
      const bool direct = c_independent(l, xs);
      const bool in_pl = std::find(pl.begin(), pl.end(), x) != pl.end();
      r.check(direct == c_indep_via_geometry(l, xs) && direct == (mat.contains(x) && !in_pl),
              where + ", subset mask " + std::to_string(x));
    }
    // The matroid route builds Mat L each time, so sample it on 3-subsets.
    std::size_t sampled = 0;
    for (Mask x = 0; x < bit(elems.size()) && sampled < 8; ++x) {
      if (popcount(x) != 3) continue;
      const auto xs = elements_of(elems, x);
      r.check(c_independent(l, xs) == c_indep_via_matroid(l, xs), where + ", matroid clause, mask " + std::to_string(x));
      ++sampled;
    }
  }
  return r;
}

std::vector<PropertyResult> all_properties() {
  return {nonsingular_iff_permanent(),  c_independence_iff_matrix_witness(), representability_iff_flat_matrix(),
          rank_equals_height(),         matrix_lattice_round_trips(),        closure_congruence_round_trips(),
          height3_matroid_and_independence()};
}

}  // namespace boolrep::testing
