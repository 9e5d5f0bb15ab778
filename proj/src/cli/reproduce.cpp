#include <algorithm>
#include <array>
#include <string>

#include "boolrep/cli.hpp"
#include "boolrep/error.hpp"
#include "boolrep/generators.hpp"
#include "boolrep/hereditary.hpp"
#include "boolrep/hereditary_io.hpp"
#include "boolrep/matrix_lattice.hpp"

namespace boolrep::cli {
namespace {

class Checks {
 public:
  explicit Checks(std::string_view target) : target_(target) {}

  void add(std::string name, const nlohmann::json& expected, const nlohmann::json& computed) {
    checks_.push_back({{"name", std::move(name)},
                       {"expected", expected},
                       {"computed", computed},
                       {"pass", expected == computed}});
  }

  nlohmann::json report() const {
    const bool pass = std::all_of(checks_.begin(), checks_.end(), [](const auto& c) { return c["pass"] == true; });
    return {{"target", target_}, {"status", pass ? "PASS" : "FAIL"}, {"checks", checks_}};
  }

 private:
  std::string target_;
  nlohmann::json checks_ = nlohmann::json::array();
};

std::vector<Mask> sets(const GroundSet& g, const std::vector<std::string>& text) {
  std::vector<Mask> out;
  for (const auto& s : text) out.push_back(s == "0" ? 0 : g.parse_subset(s));
  std::sort(out.begin(), out.end(), subset_less);
  return out;
}

void add_rep_counts(Checks& c, const RepresentationSpace& space, std::size_t minimal, std::size_t minimal_orbits,
                    std::size_t sji, std::size_t sji_orbits) {
  const auto min_codes = space.minimal_codes();
  const auto sji_codes = space.sji_codes();
  c.add("minimal", minimal, min_codes.size());
  c.add("minimal_orbits", minimal_orbits, space.orbit_count(min_codes));
  c.add("sji", sji, sji_codes.size());
  c.add("sji_orbits", sji_orbits, space.orbit_count(sji_codes));
}

void add_mindeg(Checks& c, const HereditaryCollection& hc, std::size_t degree, const BoolMatrix& witness) {
  const auto result = mindeg(hc, true);
  c.add("mindeg", degree, result.degree);
  c.add("witness_found", true, std::any_of(result.witnesses.begin(), result.witnesses.end(),
                                           [&](const BoolMatrix& w) { return congruent(w, witness); }));
}

nlohmann::json bigex(const EnumerationOptions& options) {
  Checks c("bigex");
  const auto hc = example_bigex();
  c.add("flats", family_json(hc.ground(), sets(hc.ground(), {"0", "1", "2", "3", "4", "14", "24", "34", "123", "1234"})),
        to_json(flats(hc)));
  RepresentationSpace space(hc, options);
  add_rep_counts(c, space, 6, 2, 24, 5);
  add_mindeg(c, hc, 3, bigex_mindeg_witness());
  return c.report();
}

nlohmann::json fano_target(const EnumerationOptions& options) {
  Checks c("fano");
  const auto hc = fano();
  RepresentationSpace space(hc, options);
  const auto lines = fano_lines();
  std::size_t disagreements = 0;
  for (FamilyCode code : space.fisfl()) {
    const auto f = space.family(code);
    std::vector<Mask> present;
    for (Mask l : lines)
      if (f.contains(l)) present.push_back(l);
    bool concurrent = false;
    for (std::size_t p = 0; p < 7; ++p)
      concurrent = concurrent ||
                   std::count_if(present.begin(), present.end(), [&](Mask l) { return contains(l, p); }) >= 3;
    const bool expected = present.size() >= 5 || (present.size() == 4 && !concurrent);
    if (expected != space.in_im_theta(code)) ++disagreements;
  }
  c.add("im_theta_line_criterion_disagreements", 0, disagreements);
  add_rep_counts(c, space, 7, 1, 35, 3);
  add_mindeg(c, hc, 4, fano_mindeg_witness());
  return c.report();
}

// Missing pairs form a triangle-free graph and at most one point is missing.
bool u36_criterion(const FlatFamily& f) {
  std::size_t missing_points = 0;
  for (std::size_t p = 0; p < 6; ++p)
    if (!f.contains(bit(p))) ++missing_points;
  std::array<std::array<bool, 6>, 6> edge{};
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) edge[a][b] = a != b && !f.contains(bit(a) | bit(b));
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = a + 1; b < 6; ++b)
      for (std::size_t d = b + 1; d < 6; ++d)
        if (edge[a][b] && edge[b][d] && edge[a][d]) return false;
  return missing_points <= 1;
}

nlohmann::json u36(const EnumerationOptions& options) {
  Checks c("u3-6");
  const auto hc = uniform(3, 6);
  RepresentationSpace space(hc, options);
  std::size_t disagreements = 0;
  for (FamilyCode code : space.fisfl())
    if (u36_criterion(space.family(code)) != space.in_im_theta(code)) ++disagreements;
  c.add("im_theta_graph_criterion_disagreements", 0, disagreements);
  add_rep_counts(c, space, 221, 4, 527, 7);
  c.add("mindeg", 6, mindeg(hc).degree);
  return c.report();
}

nlohmann::json libourne(const EnumerationOptions& options) {
  Checks c("libourne");
  const auto m = example_libourne_matrix();
  const auto hc = collection_of_matrix(m);
  c.add("rowmin", true, is_rowmin(hc, m));
  const auto f = flats_of_matrix(m).flats;
  c.add("flats", family_json(hc.ground(), sets(hc.ground(), {"0", "1", "2", "14", "123", "1234"})), to_json(f));
  RepresentationSpace space(hc, options);
  const auto& all = space.fisfl();
  const auto it = std::find_if(all.begin(), all.end(), [&](FamilyCode code) { return space.family(code) == f; });
  c.add("sji", true, it != all.end() && space.sji(*it));
  c.add("minimal", false, it != all.end() && space.minimal(*it));
  return c.report();
}

nlohmann::json unio() {
  Checks c("unio");
  const auto first = example_unio_first();
  const auto second = example_unio_second();
  const auto u = union_of(first, second);
  c.add("first_representable", true, is_boolean_representable(first));
  c.add("second_representable", true, is_boolean_representable(second));
  c.add("union_representable", false, is_boolean_representable(u));
  c.add("union_paving", true, is_paving(u));
  c.add("union_paving_representable", false, paving_representable(u));
  return c.report();
}

nlohmann::json truno() {
  Checks c("truno");
  const auto hc = example_truno();
  c.add("representable", true, is_boolean_representable(hc));
  c.add("truncation_3_representable", false, is_boolean_representable(truncation(hc, 3)));
  c.add("truncation_3_is_unio_union", true,
        truncation(hc, 3) == union_of(example_unio_first(), example_unio_second()));
  return c.report();
}

nlohmann::json fourpoints() {
  Checks c("fourpoints");
  auto classify = [](const HereditaryCollection& hc) -> std::string {
    if (is_matroid(hc)) return "matroid";
    if (!satisfies_pr(hc)) return "pr_fails";
    if (is_boolean_representable(hc)) return "representable_non_matroid";
    return "other";
  };
  nlohmann::json expected = nlohmann::json::object();
  nlohmann::json computed = nlohmann::json::object();
  for (unsigned triples = 0; triples < 16; ++triples) {
    const auto hc = example_fourpoints(triples);
    const auto key = std::to_string(triples);
    const int count = popcount(Mask{triples});
    expected[key] = count == 1 ? "pr_fails" : count == 2 ? "representable_non_matroid" : "matroid";
    computed[key] = classify(hc);
  }
  c.add("trichotomy", expected, computed);
  return c.report();
}

nlohmann::json section3() {
  Checks c("section3");
  const auto m = section3_matrix();
  const auto& g = m.columns();
  const auto fl = flats_of_matrix(m).flats;
  c.add("flats", family_json(g, sets(g, {"0", "2", "3", "4", "23", "24", "345", "12345"})), to_json(fl));
  c.add("nu_matrix_congruent", true, congruent(nu_matrix(m), section3_nu_matrix()));
  return c.report();
}

}  // namespace

const std::vector<std::string>& reproduce_targets() {
  static const std::vector<std::string> targets{"bigex", "libourne", "fano",       "u3-6",
                                                "unio",  "truno",    "fourpoints", "section3"};
  return targets;
}

nlohmann::json reproduce(std::string_view target, const EnumerationOptions& options) {
  if (target == "bigex") return bigex(options);
  if (target == "libourne") return libourne(options);
  if (target == "fano") return fano_target(options);
  if (target == "u3-6") return u36(options);
  if (target == "unio") return unio();
  if (target == "truno") return truno();
  if (target == "fourpoints") return fourpoints();
  if (target == "section3") return section3();
  fail(ErrorKind::InvariantViolation, "unknown reproduce target '" + std::string(target) + "'");
}

}  // namespace boolrep::cli
