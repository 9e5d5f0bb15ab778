#include "boolrep/geometry.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "boolrep/error.hpp"
#include "boolrep/hereditary_io.hpp"
#include "boolrep/matrix_lattice.hpp"

namespace boolrep {
namespace {

std::string braced(const GroundSet& ground, Mask m) {
  std::string out = "{";
  bool first = true;
  for_each_bit(m, [&](std::size_t i) {
    if (!first) out += ",";
    out += ground.label(i);
    first = false;
  });
  return out + "}";
}

void sort_family(std::vector<Mask>& sets) { std::sort(sets.begin(), sets.end(), subset_less); }

AxiomCheck violated(std::string axiom, std::string witness) {
  return {std::move(axiom), false, std::move(witness)};
}

void require_height(const FiniteLattice& l, std::size_t h) {
  if (l.height() != h)
    fail(ErrorKind::WrongHeight,
         "expected height " + std::to_string(h) + ", got " + std::to_string(l.height()));
}

Mask nonbottom_mask(const FiniteLattice& l, std::span<const std::size_t> x) {
  Mask m = 0;
  for (auto e : x) {
    if (e >= l.size()) fail(ErrorKind::ParseError, "element out of range");
    if (e == l.bottom()) fail(ErrorKind::BottomElement, "the bottom cannot be c-independent");
    const std::size_t pos = e < l.bottom() ? e : e - 1;
    if (contains(m, pos)) fail(ErrorKind::ParseError, "repeated element");
    m |= bit(pos);
  }
  return m;
}

}  // namespace

bool AxiomReport::valid() const { return first_violation() == nullptr; }

const AxiomCheck* AxiomReport::first_violation() const {
  for (const auto& c : checks)
    if (!c.holds) return &c;
  return nullptr;
}

AxiomReport validate_peg(const Peg& g) {
  const auto& p = g.points;
  AxiomCheck g1{"G1", true, ""};
  for (std::size_t i = 0; i < g.lines.size() && g1.holds; ++i)
    for (std::size_t j = i + 1; j < g.lines.size() && g1.holds; ++j)
      if (popcount(g.lines[i] & g.lines[j]) > 1)
        g1 = violated("G1", "lines " + braced(p, g.lines[i]) + " and " + braced(p, g.lines[j]) +
                                " share " + braced(p, g.lines[i] & g.lines[j]));
  AxiomCheck g2{"G2", true, ""};
  for (Mask l : g.lines)
    if (popcount(l) < 2) {
      g2 = violated("G2", "line " + braced(p, l) + " has fewer than 2 points");
      break;
    }
  return {{g1, g2}};
}

AxiomReport validate_mpeg(const MPeg& g) {
  const auto& e = g.ground;
  const auto& s = g.strata;
  const std::size_t m = s.size();
  auto name = [&](Mask x) { return braced(e, x); };
  AxiomReport r;

  AxiomCheck j1{"J1", true, ""};
  if (m < 3) j1 = violated("J1", "fewer than 3 strata");
  else if (s[m - 1] != std::vector<Mask>{e.full()}) j1 = violated("J1", "the last stratum is not {E}");
  std::map<Mask, std::size_t> level;
  for (std::size_t i = 0; i < m && j1.holds; ++i)
    for (Mask x : s[i]) {
      if (!is_subset(x, e.full())) {
        j1 = violated("J1", "a member of P" + std::to_string(i + 1) + " leaves the ground");
        break;
      }
      auto [it, fresh] = level.emplace(x, i);
      if (!fresh) {
        j1 = violated("J1", name(x) + " lies in P" + std::to_string(it->second + 1) + " and P" +
                                std::to_string(i + 1));
        break;
      }
    }
  r.checks.push_back(j1);

  AxiomCheck j2{"J2", true, ""};
  if (m > 0)
    for (Mask x : s[0])
      if (popcount(x) != 1) {
        j2 = violated("J2", name(x) + " in P1 is not a singleton");
        break;
      }
  r.checks.push_back(j2);

  Mask points = 0;
  if (m > 0)
    for (Mask x : s[0]) points |= x;
  AxiomCheck j3{"J3", true, ""};
  for (std::size_t i = 1; i < m && j3.holds; ++i)
    for (Mask x : s[i])
      if (!is_subset(x, points)) {
        j3 = violated("J3", name(x) + " in P" + std::to_string(i + 1) + " has a point outside P1");
        break;
      }
  r.checks.push_back(j3);

  AxiomCheck j4{"J4", true, ""};
  for (std::size_t i = 1; i < m && j4.holds; ++i)
    for (Mask x : s[i]) {
      const bool covered = std::any_of(s[i - 1].begin(), s[i - 1].end(),
                                       [&](Mask q) { return q != x && is_subset(q, x); });
      if (!covered) {
        j4 = violated("J4", name(x) + " in P" + std::to_string(i + 1) + " contains no member of P" +
                                std::to_string(i));
        break;
      }
    }
  r.checks.push_back(j4);

  // Strata are 0-based here, so P_r with r < i, j means an index below both.
  AxiomCheck j5{"J5", true, ""};
  auto in_lower_stratum = [&](Mask x, std::size_t bound) {
    for (std::size_t k = 0; k < bound; ++k)
      if (std::find(s[k].begin(), s[k].end(), x) != s[k].end()) return true;
    return false;
  };
  for (std::size_t i = 1; i < m && j5.holds; ++i)
    for (std::size_t j = 1; j < m && j5.holds; ++j)
      for (Mask p : s[i]) {
        for (Mask q : s[j]) {
          const Mask meet = p & q;
          const bool ok = meet == 0 || in_lower_stratum(meet, std::min(i, j)) ||
                          (i < j && p != q && is_subset(p, q)) ||
                          (i > j && p != q && is_subset(q, p)) || p == q;
          if (!ok) {
            j5 = violated("J5", name(p) + " in P" + std::to_string(i + 1) + " and " + name(q) + " in P" +
                                    std::to_string(j + 1));
            break;
          }
        }
        if (!j5.holds) break;
      }
  r.checks.push_back(j5);
  return r;
}

Peg normalized(Peg g) {
  sort_family(g.lines);
  return g;
}

MPeg normalized(MPeg g) {
  for (auto& s : g.strata) sort_family(s);
  return g;
}

MPeg mpeg_of_peg(const Peg& g) {
  MPeg out{g.points, {{}, g.lines, {g.points.full()}}};
  for (std::size_t i = 0; i < g.points.size(); ++i) out.strata[0].push_back(bit(i));
  return normalized(std::move(out));
}

Peg geo_of_lattice(const VGenLattice& vg) {
  const auto& l = vg.lattice();
  require_height(l, 3);
  Peg g{vg.ground(), {}};
  std::set<Mask> seen;
  for (std::size_t x = 0; x < l.size(); ++x) {
    if (x == l.top() || x == l.bottom()) continue;
    const Mask below = vg.gens_below(x);
    if (popcount(below) < 2) continue;
    // At height 3 two elements cannot share two generators.
    if (!seen.insert(below).second)
      fail(ErrorKind::InvariantViolation, "two lattice elements induce the line " + braced(g.points, below));
    g.lines.push_back(below);
  }
  return normalized(std::move(g));
}

VGenLattice lat_of_peg(const Peg& g) {
  if (g.lines.size() < 2) fail(ErrorKind::TooFewLines, "a PEG needs at least two lines");
  const auto report = validate_peg(g);
  if (const auto* bad = report.first_violation())
    fail(ErrorKind::NotALattice, "not a PEG: " + bad->axiom + ", " + bad->witness);
  const std::size_t n = g.points.size();
  const auto lines = normalized(g).lines;
  // Elements: points, lines, bottom, top.
  std::vector<std::string> labels = g.points.labels();
  for (Mask l : lines) labels.push_back(braced(g.points, l));
  const std::size_t bottom = labels.size();
  labels.push_back("{}");
  labels.push_back(braced(g.points, g.points.full()));
  const std::size_t top = bottom + 1;
  auto leq = [&](std::size_t x, std::size_t y) {
    if (x == y || x == bottom || y == top) return true;
    return x < n && y >= n && y < bottom && contains(lines[y - n], x);
  };
  auto lattice = FiniteLattice::from_order(std::move(labels), leq, std::max<std::size_t>(n + lines.size() + 2,
                                                                                      FiniteLattice::kDefaultMaxElements));
  std::vector<std::size_t> gens(n);
  for (std::size_t i = 0; i < n; ++i) gens[i] = i;
  return VGenLattice(std::move(lattice), std::move(gens));
}

std::vector<std::size_t> nonbottom_elements(const FiniteLattice& l) {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < l.size(); ++x)
    if (x != l.bottom()) out.push_back(x);
  return out;
}

GroundSet nonbottom_ground(const FiniteLattice& l) {
  std::vector<std::string> labels;
  for (auto x : nonbottom_elements(l)) labels.push_back(l.label(x));
  return GroundSet(std::move(labels));
}

HereditaryCollection mat_of_lattice(const FiniteLattice& l) {
  require_height(l, 3);
  const auto elems = nonbottom_elements(l);
  if (elems.size() > 20) fail(ErrorKind::TooLarge, "Mat L is limited to 20 non-bottom elements");
  return HereditaryCollection::from_predicate(nonbottom_ground(l), [&](Mask x) {
    if (popcount(x) <= 2) return true;
    if (popcount(x) > 3) return false;
    std::size_t j = l.bottom();
    for_each_bit(x, [&](std::size_t i) { j = l.join(j, elems[i]); });
    return j == l.top();
  });
}

std::vector<Mask> potential_lines(const FiniteLattice& l) {
  require_height(l, 3);
  const auto elems = nonbottom_elements(l);
  std::vector<Mask> out;
  const std::size_t n = elems.size();
  auto top_join = [&](std::size_t a, std::size_t b) { return l.join(elems[a], elems[b]) == l.top(); };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      if (!top_join(a, b)) continue;
      for (std::size_t c = b + 1; c < n; ++c)
        if (top_join(a, c) && top_join(b, c)) out.push_back(bit(a) | bit(b) | bit(c));
    }
  sort_family(out);
  return out;
}

bool c_indep_via_geometry(const FiniteLattice& l, std::span<const std::size_t> x) {
  require_height(l, 3);
  nonbottom_mask(l, x);
  if (x.size() <= 2) return true;
  if (x.size() > 3) return false;
  if (l.join(l.join(x[0], x[1]), x[2]) != l.top()) return false;
  return l.join(x[0], x[1]) != l.top() || l.join(x[0], x[2]) != l.top() || l.join(x[1], x[2]) != l.top();
}

bool c_indep_via_matroid(const FiniteLattice& l, std::span<const std::size_t> x) {
  const Mask m = nonbottom_mask(l, x);
  if (!mat_of_lattice(l).contains(m)) return false;
  const auto pl = potential_lines(l);
  return std::find(pl.begin(), pl.end(), m) == pl.end();
}

MPeg mpeg_of_atomic_lattice(const FiniteLattice& l) {
  const auto atom_list = atoms(l);
  std::vector<std::string> labels;
  for (auto a : atom_list) labels.push_back(l.label(a));
  GroundSet ground(std::move(labels));
  auto atoms_below = [&](std::size_t x) {
    Mask m = 0;
    for (std::size_t i = 0; i < atom_list.size(); ++i)
      if (l.leq(atom_list[i], x)) m |= bit(i);
    return m;
  };
  for (std::size_t x = 0; x < l.size(); ++x) {
    std::vector<std::size_t> below;
    for_each_bit(atoms_below(x), [&](std::size_t i) { below.push_back(atom_list[i]); });
    if (l.join_all(below) != x) fail(ErrorKind::NotAtomic, "'" + l.label(x) + "' is not a join of atoms");
  }
  if (l.height() < 3) fail(ErrorKind::WrongHeight, "an m-PEG needs height at least 3");
  MPeg g{ground, std::vector<std::vector<Mask>>(l.height())};
  for (std::size_t x = 0; x < l.size(); ++x)
    if (x != l.bottom()) g.strata[l.rank_of(x) - 1].push_back(atoms_below(x));
  return normalized(std::move(g));
}

VGenLattice lattice_of_mpeg(const MPeg& g) {
  const auto report = validate_mpeg(g);
  if (const auto* bad = report.first_violation())
    fail(ErrorKind::BadMpeg, bad->axiom + ": " + bad->witness);
  const auto& e = g.ground;
  std::vector<Mask> sets{0};
  for (std::size_t i = 0; i < e.size(); ++i) sets.push_back(bit(i));
  for (std::size_t k = 1; k < g.strata.size(); ++k) {
    auto stratum = g.strata[k];
    sort_family(stratum);
    sets.insert(sets.end(), stratum.begin(), stratum.end());
  }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < sets.size(); ++i)
    labels.push_back(popcount(sets[i]) == 1 ? e.label(lowest(sets[i])) : braced(e, sets[i]));
  auto lattice = FiniteLattice::from_order(
      std::move(labels), [&](std::size_t x, std::size_t y) { return is_subset(sets[x], sets[y]); },
      std::max(sets.size(), FiniteLattice::kDefaultMaxElements));
  std::vector<std::size_t> gens(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) gens[i] = i + 1;
  return VGenLattice(std::move(lattice), std::move(gens));
}

std::vector<Mask> hyperplanes_of(const VGenLattice& vg) {
  const auto fl = flats_of_lattice(vg);
  const Mask full = vg.ground().full();
  std::vector<Mask> out;
  for (Mask z : fl.members()) {
    if (z == full) continue;
    const bool maximal = std::none_of(fl.members().begin(), fl.members().end(),
                                      [&](Mask w) { return w != full && w != z && is_subset(z, w); });
    if (maximal) out.push_back(z);
  }
  return out;
}

bool four_subset_independent_via_hyperplane(const VGenLattice& vg, Mask x) {
  require_height(vg.lattice(), 4);
  if (popcount(x) != 4 || !is_subset(x, vg.ground().full()))
    fail(ErrorKind::WrongSize, "expected a 4-subset of the generators");
  bool triples = true;
  for_each_bit(x, [&](std::size_t i) { triples = triples && c_independent_gens(vg, x & ~bit(i)); });
  if (!triples) return false;
  const auto hs = hyperplanes_of(vg);
  return std::any_of(hs.begin(), hs.end(), [&](Mask h) { return popcount(x & h) == 3; });
}

nlohmann::json to_json(const Peg& g) {
  return {{"points", g.points.labels()}, {"lines", family_json(g.points, normalized(g).lines)}};
}

nlohmann::json to_json(const MPeg& g) {
  auto strata = nlohmann::json::array();
  for (const auto& s : normalized(g).strata) strata.push_back(family_json(g.ground, s));
  return {{"ground", g.ground.labels()}, {"strata", strata}};
}

nlohmann::json to_json(const AxiomReport& r) {
  auto checks = nlohmann::json::array();
  for (const auto& c : r.checks) {
    nlohmann::json j{{"axiom", c.axiom}, {"holds", c.holds}};
    if (!c.holds) j["witness"] = c.witness;
    checks.push_back(j);
  }
  return {{"valid", r.valid()}, {"checks", checks}};
}

Peg peg_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("points") || !j["points"].is_array() || !j.contains("lines") ||
      !j["lines"].is_array())
    fail(ErrorKind::ParseError, "expected an object with 'points' and 'lines' arrays");
  std::vector<std::string> labels;
  for (const auto& v : j["points"]) {
    if (v.is_string()) labels.push_back(v.get<std::string>());
    else if (v.is_number_integer()) labels.push_back(std::to_string(v.get<long long>()));
    else fail(ErrorKind::ParseError, "point labels must be strings or integers");
  }
  Peg g{GroundSet(std::move(labels)), {}};
  for (const auto& line : j["lines"]) {
    if (!line.is_array()) fail(ErrorKind::ParseError, "each line must be an array of points");
    Mask m = 0;
    for (const auto& v : line)
      m |= bit(g.points.index_of(v.is_string() ? v.get<std::string>() : v.dump()));
    g.lines.push_back(m);
  }
  return normalized(std::move(g));
}

Peg peg_from_json_text(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorKind::ParseError, e.what());
  }
  return peg_from_json(j);
}

std::string to_dot(const Peg& g) {
  const auto lines = normalized(g).lines;
  std::string out = "graph peg {\n";
  out += "  { rank=same;";
  for (std::size_t k = 0; k < lines.size(); ++k) out += " l" + std::to_string(k) + ";";
  out += " }\n  { rank=same;";
  for (std::size_t i = 0; i < g.points.size(); ++i) out += " p" + std::to_string(i) + ";";
  out += " }\n";
  for (std::size_t k = 0; k < lines.size(); ++k)
    out += "  l" + std::to_string(k) + " [shape=box,label=\"" + braced(g.points, lines[k]) + "\"];\n";
  for (std::size_t i = 0; i < g.points.size(); ++i)
    out += "  p" + std::to_string(i) + " [shape=circle,label=\"" + g.points.label(i) + "\"];\n";
  for (std::size_t k = 0; k < lines.size(); ++k)
    for_each_bit(lines[k], [&](std::size_t i) {
      out += "  l" + std::to_string(k) + " -- p" + std::to_string(i) + ";\n";
    });
  return out + "}\n";
}

}  // namespace boolrep
