#include "boolrep/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "boolrep/error.hpp"
#include "boolrep/generators.hpp"
#include "boolrep/geometry.hpp"
#include "boolrep/hereditary.hpp"
#include "boolrep/hereditary_io.hpp"
#include "boolrep/lattice_io.hpp"
#include "boolrep/maps.hpp"
#include "boolrep/matrix_lattice.hpp"

namespace boolrep::cli {
namespace {

// Bad invocation detected after parsing, e.g. an unreadable input file.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Settings {
  std::string format = "json";
  std::string dot_path;
  std::size_t max_flats = 24;
  std::size_t max_subsets = std::size_t{1} << 16;
  std::size_t jobs = 1;
  std::uint64_t seed = 1;
  std::size_t max_ground = 12;
};

struct Output {
  Output(nlohmann::json j = {}, std::optional<std::string> t = std::nullopt)
      : json(std::move(j)), table(std::move(t)) {}

  nlohmann::json json;
  std::optional<std::string> table;  // replaces render_table(json) when set
  std::optional<std::string> raw;    // printed verbatim in every format
  std::optional<std::string> dot;
  int code = kOk;
};

std::string read_all(std::istream& in) {
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

class Inputs {
 public:
  Inputs(std::istream& in, const Settings& settings) : in_(in), settings_(settings) {}

  // An empty path or "-" reads the piped input.
  std::string text(const std::string& path) const {
    if (path.empty() || path == "-") return read_all(in_);
    std::ifstream f(path);
    if (!f) throw UsageError("cannot read '" + path + "'");
    return read_all(f);
  }

  HereditaryCollection collection(const std::string& path) const {
    if (auto named = builtin(path)) return checked(*named);
    const auto body = text(path);
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(body);
    } catch (const nlohmann::json::parse_error& e) {
      fail(ErrorKind::ParseError, e.what());
    }
    if (j.is_object() && j.contains("ground") && j["ground"].is_array()) check_ground(j["ground"].size());
    return checked(hereditary_from_json(j));
  }

  BoolMatrix matrix(const std::string& path) const {
    if (path == "libourne") return example_libourne_matrix();
    if (path == "section3") return section3_matrix();
    auto m = matrix_from_text(text(path));
    check_ground(m.cols());
    return m;
  }

  void check_ground(std::size_t n) const {
    if (n > settings_.max_ground)
      fail(ErrorKind::TooLarge, "ground set has " + std::to_string(n) + " points, BOOLREP_MAX_GROUND is " +
                                    std::to_string(settings_.max_ground));
    if (n < 64 && (std::size_t{1} << n) > settings_.max_subsets)
      fail(ErrorKind::TooLarge, "2^" + std::to_string(n) + " subsets exceed --max-subsets " +
                                    std::to_string(settings_.max_subsets));
  }

 private:
  std::istream& in_;
  const Settings& settings_;

  HereditaryCollection checked(HereditaryCollection hc) const {
    check_ground(hc.ground_size());
    return hc;
  }

  // Named examples are used only when no file of that name exists.
  static std::optional<HereditaryCollection> builtin(const std::string& name) {
    if (name.empty() || name == "-" || std::filesystem::exists(name)) return std::nullopt;
    if (name == "fano") return fano();
    if (name == "bigex") return example_bigex();
    if (name == "unio") return union_of(example_unio_first(), example_unio_second());
    if (name == "unio-first") return example_unio_first();
    if (name == "unio-second") return example_unio_second();
    if (name == "truno") return example_truno();
    if (name == "u3-6") return uniform(3, 6);
    if (name == "libourne") return collection_of_matrix(example_libourne_matrix());
    return std::nullopt;
  }
};

nlohmann::json matrix_json(const BoolMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row_string(r));
  return {{"cols", m.columns().labels()}, {"rows", rows}};
}

std::string format_cell(const nlohmann::json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array() && std::all_of(v.begin(), v.end(), [](const auto& x) { return x.is_string(); })) {
    std::string out = "{";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i].get<std::string>();
    return out + "}";
  }
  return v.dump();
}

// --- verbs -----------------------------------------------------------------

Output flats_verb(const HereditaryCollection& hc) {
  const auto& f = flats(hc);
  Output o{{{"ground", hc.ground().labels()}, {"count", f.size()}, {"flats", to_json(f)}}};
  o.dot = to_dot(lattice_of_family(f));
  return o;
}

Output circuits_verb(const HereditaryCollection& hc) {
  const auto c = circuits(hc);
  return {{{"count", c.size()}, {"circuits", family_json(hc.ground(), c)}}};
}

Output rank_verb(const HereditaryCollection& hc, const std::string& subset) {
  const auto r = rank_function(hc);
  nlohmann::json j{{"rank", hc.rank()},
                   {"axioms", r.satisfies_axioms()},
                   {"hyperplanes", family_json(hc.ground(), hyperplanes(hc))}};
  if (!subset.empty()) {
    const Mask x = subset == "0" ? 0 : hc.ground().parse_subset(subset);
    j["subset"] = {{"set", subset_json(hc.ground(), x)},
                   {"rank", r(x)},
                   {"closure", subset_json(hc.ground(), closure(hc, x))}};
  }
  return {j};
}

Output check_repr_verb(const HereditaryCollection& hc) {
  const auto rep = representability(hc);
  nlohmann::json j{{"representable", rep.representable}, {"counterexample", nullptr}};
  if (rep.counterexample) j["counterexample"] = subset_json(hc.ground(), *rep.counterexample);
  return {j};
}

Output check_matroid_verb(const HereditaryCollection& hc) {
  return {{{"matroid", is_matroid(hc)}, {"pr", satisfies_pr(hc)}, {"simple", is_simple(hc)}}};
}

Output check_paving_verb(const HereditaryCollection& hc) {
  const auto c = paving_clauses(hc);
  nlohmann::json j{{"paving", is_paving(hc)},
                   {"clauses",
                    {{"no_small_circuits", c.no_small_circuits},
                     {"lower_sets_independent", c.lower_sets_independent},
                     {"lower_sets_closed", c.lower_sets_closed}}}};
  if (is_paving(hc)) j["paving_representable"] = paving_representable(hc);
  return {j};
}

Output reps_verb(const HereditaryCollection& hc, const Settings& s, bool sji_only, bool with_mindeg) {
  RepresentationSpace space(hc, {.max_flats = s.max_flats, .jobs = s.jobs});
  const auto codes = sji_only ? space.sji_codes() : space.minimal_codes();
  std::optional<std::size_t> degree;
  if (with_mindeg) degree = mindeg(hc).degree;
  auto j = report_json(space, codes, degree);
  std::string table = "family\tminimal\tsji\n";
  for (const auto& f : j["families"]) {
    std::string members;
    for (const auto& m : f["members"]) members += (members.empty() ? "" : " ") + format_cell(m);
    table += members + "\t" + (f["minimal"] == true ? "yes" : "no") + "\t" + (f["sji"] == true ? "yes" : "no") + "\n";
  }
  for (const auto& [k, v] : j["counts"].items()) table += k + "\t" + v.dump() + "\n";
  return {j, table};
}

Output mindeg_verb(const HereditaryCollection& hc, bool all) {
  const auto r = mindeg(hc, all);
  nlohmann::json j{{"mindeg", r.degree}, {"witness", matrix_json(r.witness)}};
  if (all) {
    j["witness_count"] = r.witnesses.size();
    auto list = nlohmann::json::array();
    for (const auto& w : r.witnesses) list.push_back(matrix_json(w)["rows"]);
    j["witnesses"] = list;
  }
  return {j, "mindeg\t" + std::to_string(r.degree) + "\n" + to_text(r.witness)};
}

Output stack_verb(const BoolMatrix& a, const BoolMatrix& b) {
  const auto stacked = stack_matrices(a, b);
  const auto closed = rowsum_closure(stacked);
  return {{{"stacked", matrix_json(stacked)}, {"rowsum_closure", matrix_json(closed)}},
          to_text(stacked) + "\n" + to_text(closed)};
}

Output geo_verb(const std::string& body) {
  const auto first = body.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && body[first] == '{') {
    const auto peg = peg_from_json_text(body);
    const auto report = validate_peg(peg);
    nlohmann::json j{{"peg", to_json(peg)}, {"report", to_json(report)}};
    Output o{j};
    o.dot = to_dot(peg);
    if (report.valid() && peg.lines.size() >= 2) {
      const auto lat = lat_of_peg(peg);
      o.json["lattice"] = to_text(lat);
      o.table = to_text(lat);
    }
    return o;
  }
  const auto vg = vgen_lattice_from_text(body);
  const auto peg = geo_of_lattice(vg);
  Output o{{{"peg", to_json(peg)}, {"report", to_json(validate_peg(peg))}}};
  o.dot = to_dot(peg);
  return o;
}

Output mpeg_verb(const std::string& body) {
  const auto l = lattice_from_text(body);
  const auto g = mpeg_of_atomic_lattice(l);
  Output o{{{"mpeg", to_json(g)}, {"report", to_json(validate_mpeg(g))}}};
  o.dot = to_dot(lattice_of_mpeg(g));
  return o;
}

struct MapInput {
  FiniteLattice source;
  FiniteLattice target;
  std::vector<std::size_t> assignment;
};

// Sections "source:", "target:" (lattice text) and "map:" with lines "x -> y".
MapInput parse_map_input(const std::string& body) {
  std::string section;
  std::string source, target;
  std::vector<std::pair<std::string, std::string>> pairs;
  std::istringstream lines(body);
  for (std::string line; std::getline(lines, line);) {
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::string trimmed = line.substr(start);
    while (!trimmed.empty() && (trimmed.back() == ' ' || trimmed.back() == '\r')) trimmed.pop_back();
    if (trimmed == "source:" || trimmed == "target:" || trimmed == "map:") {
      section = trimmed;
      continue;
    }
    if (section == "source:") source += trimmed + "\n";
    else if (section == "target:") target += trimmed + "\n";
    else if (section == "map:") {
      const auto arrow = trimmed.find("->");
      if (arrow == std::string::npos) fail(ErrorKind::ParseError, "map lines look like 'x -> y'");
      auto strip = [](std::string s) {
        s.erase(0, s.find_first_not_of(' '));
        s.erase(s.find_last_not_of(' ') + 1);
        return s;
      };
      pairs.emplace_back(strip(trimmed.substr(0, arrow)), strip(trimmed.substr(arrow + 2)));
    } else {
      fail(ErrorKind::ParseError, "expected a 'source:', 'target:' or 'map:' section");
    }
  }
  if (source.empty() || target.empty() || pairs.empty())
    fail(ErrorKind::ParseError, "need 'source:', 'target:' and 'map:' sections");
  MapInput m{lattice_from_text(source), lattice_from_text(target), {}};
  m.assignment.assign(m.source.size(), m.target.size());
  for (const auto& [x, y] : pairs) m.assignment[m.source.index_of(x)] = m.target.index_of(y);
  for (std::size_t x = 0; x < m.source.size(); ++x)
    if (m.assignment[x] == m.target.size())
      fail(ErrorKind::DimensionError, "no image given for '" + m.source.label(x) + "'");
  return m;
}

Output factorize_verb(const std::string& body, const std::string& kind) {
  const auto input = parse_map_input(body);
  const VMap phi(input.source, input.target, input.assignment);
  validate_vmap(phi);
  auto steps = nlohmann::json::array();
  std::string table;
  auto add_mps = [&](const MpsFactorization& f, const FiniteLattice& start) {
    const FiniteLattice* before = &start;
    for (const auto& s : f.steps) {
      const auto text = to_text(s.result.lattice);
      steps.push_back({{"step", steps.size() + 1},
                       {"type", "MPS"},
                       {"collapse", {before->label(s.upper), before->label(s.lower)}},
                       {"lattice", text}});
      table += std::to_string(steps.size()) + ". MPS: collapse " + before->label(s.lower) + " into " +
               before->label(s.upper) + "\n" + text;
      before = &s.result.lattice;
    }
  };
  auto add_mpi = [&](const MpiFactorization& f) {
    for (const auto& s : f.steps) {
      const auto& k = s.inclusion.target();
      const auto text = to_text(k);
      steps.push_back({{"step", steps.size() + 1}, {"type", "MPI"}, {"added", k.label(s.added)}, {"lattice", text}});
      table += std::to_string(steps.size()) + ". MPI: add " + k.label(s.added) + "\n" + text;
    }
  };
  bool recomposes = false;
  if (kind == "mps") {
    const auto f = mps_factorize(phi);
    add_mps(f, input.source);
    recomposes = recompose(f).assignment() == phi.assignment();
  } else if (kind == "mpi") {
    const auto f = mpi_factorize(phi);
    add_mpi(f);
    recomposes = recompose(f).assignment() == phi.assignment();
  } else {
    const auto f = csi_factorize(phi);
    add_mps(f.surjective, input.source);
    add_mpi(f.injective);
    recomposes = recompose(f).assignment() == phi.assignment();
  }
  return {{{"kind", kind}, {"steps", steps}, {"recomposes", recomposes}},
          table + "recomposes: " + (recomposes ? "yes" : "no") + "\n"};
}

Output generate_verb(const std::string& name, std::size_t a, std::size_t b, unsigned triples, std::size_t n,
                     std::size_t facets, std::size_t dim, unsigned p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::optional<HereditaryCollection> hc;
  if (name == "uniform") {
    if (a > b) throw UsageError("uniform needs --a <= --b");
    hc = uniform(a, b);
  } else if (name == "fano") hc = fano();
  else if (name == "bigex") hc = example_bigex();
  else if (name == "unio") hc = union_of(example_unio_first(), example_unio_second());
  else if (name == "unio-first") hc = example_unio_first();
  else if (name == "unio-second") hc = example_unio_second();
  else if (name == "truno") hc = example_truno();
  else if (name == "fourpoints") hc = example_fourpoints(triples);
  else if (name == "equal-bases") hc = example_equal_bases_nonmatroid();
  else if (name == "random") hc = random_hereditary(n, facets, rng);
  else if (name == "random-matroid") hc = random_linear_matroid(n, dim, p, rng);
  else if (name == "libourne" || name == "section3") {
    Output o;
    o.raw = to_text(name == "libourne" ? example_libourne_matrix() : section3_matrix());
    return o;
  } else throw UsageError("unknown generator '" + name + "'");
  return Output(to_json(*hc));
}

Output reproduce_verb(const std::string& target, const Settings& s) {
  auto j = reproduce(target, {.max_flats = s.max_flats, .jobs = s.jobs});
  std::string table = "target\t" + target + "\nstatus\t" + j["status"].get<std::string>() + "\n";
  for (const auto& c : j["checks"])
    table += (c["pass"] == true ? "PASS\t" : "FAIL\t") + c["name"].get<std::string>() + "\texpected " +
             c["expected"].dump() + "\tcomputed " + c["computed"].dump() + "\n";
  Output o{j, table};
  if (j["status"] != "PASS") o.code = kDomainError;
  return o;
}

void emit(const Output& o, const Settings& s, std::ostream& out) {
  if (o.raw) {
    out << *o.raw;
  } else if (s.format == "table") {
    out << (o.table ? *o.table : render_table(o.json));
  } else {
    out << o.json.dump(2) << "\n";
  }
  if (!s.dot_path.empty()) {
    if (!o.dot) throw UsageError("--dot is not available for this command");
    std::ofstream f(s.dot_path);
    if (!f) throw UsageError("cannot write '" + s.dot_path + "'");
    f << *o.dot;
  }
}

std::size_t max_ground_from_env() {
  const char* v = std::getenv("BOOLREP_MAX_GROUND");
  if (!v || !*v) return 12;
  try {
    std::size_t used = 0;
    const auto n = std::stoul(v, &used);
    if (used != std::string_view(v).size() || n == 0 || n > HereditaryCollection::kMaxGround) throw 0;
    return n;
  } catch (...) {
    throw UsageError("BOOLREP_MAX_GROUND must be an integer in 1.." +
                     std::to_string(HereditaryCollection::kMaxGround));
  }
}

}  // namespace

std::string render_table(const nlohmann::json& j) {
  if (!j.is_object()) return format_cell(j) + "\n";
  std::string out;
  for (const auto& [k, v] : j.items()) {
    if (v.is_array() && !v.empty() && !std::all_of(v.begin(), v.end(), [](const auto& x) { return x.is_string(); })) {
      out += k + "\n";
      for (const auto& e : v) out += "  " + format_cell(e) + "\n";
    } else if (v.is_object()) {
      out += k + "\n";
      for (const auto& [k2, v2] : v.items()) out += "  " + k2 + "\t" + format_cell(v2) + "\n";
    } else {
      out += k + "\t" + format_cell(v) + "\n";
    }
  }
  return out;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Boolean representations of simplicial complexes and lattices", "boolrep"};
  app.require_subcommand(1, 1);
  app.add_option("--format", s.format, "Output format")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--max-flats", s.max_flats, "Refuse enumerations over more nontrivial flats")
      ->check(CLI::Range(std::size_t{1}, std::size_t{30}));
  app.add_option("--max-subsets", s.max_subsets, "Refuse inputs with more subsets of E")
      ->check(CLI::PositiveNumber);
  app.add_option("--jobs", s.jobs, "Worker threads for enumeration")->check(CLI::Range(std::size_t{1}, std::size_t{256}));
  app.add_option("--seed", s.seed, "Seed for randomized generators");

  std::string input, second, subset, name, target, kind = "csi";
  std::size_t k = 0, a = 3, b = 6, n = 6, facets = 4, dim = 3;
  unsigned triples = 0, prime = 2;
  bool all_witnesses = false, with_mindeg = false;

  auto verb = [&](const char* v, const char* help) {
    auto* sub = app.add_subcommand(v, help);
    sub->fallthrough();
    return sub;
  };
  auto with_input = [&](CLI::App* sub) {
    sub->add_option("input", input, "Input file, '-' for stdin, or a built-in example name");
    return sub;
  };
  auto* flats_cmd = with_input(verb("flats", "List the flats"));
  flats_cmd->add_option("--dot", s.dot_path, "Write the flat lattice as DOT");
  auto* circuits_cmd = with_input(verb("circuits", "List the circuits"));
  auto* rank_cmd = with_input(verb("rank", "Rank, hyperplanes and rank of a subset"));
  rank_cmd->add_option("--subset", subset, "Subset such as 124, or 0 for the empty set");
  auto* repr_cmd = with_input(verb("check-repr", "Boolean representability"));
  auto* matroid_cmd = with_input(verb("check-matroid", "Matroid and point-replacement checks"));
  auto* paving_cmd = with_input(verb("check-paving", "Paving clauses and the paving criterion"));
  auto* minimal_cmd = with_input(verb("minimal-reps", "Minimal representations"));
  minimal_cmd->add_flag("--mindeg", with_mindeg, "Include the minimum degree");
  auto* sji_cmd = with_input(verb("sji-reps", "Sji representations"));
  sji_cmd->add_flag("--mindeg", with_mindeg, "Include the minimum degree");
  auto* mindeg_cmd = with_input(verb("mindeg", "Minimum degree of a representation"));
  mindeg_cmd->add_flag("--all", all_witnesses, "List every optimal witness");
  auto* stack_cmd = verb("stack", "Stack two matrices and take the row-sum closure");
  stack_cmd->add_option("first", input, "First matrix")->required();
  stack_cmd->add_option("second", second, "Second matrix")->required();
  auto* truncate_cmd = with_input(verb("truncate", "Truncation to rank k"));
  truncate_cmd->add_option("--k", k, "Rank")->required();
  auto* geo_cmd = with_input(verb("geo", "Geometry of a height-3 lattice, or the lattice of a PEG"));
  geo_cmd->add_option("--dot", s.dot_path, "Write the Levi graph as DOT");
  auto* mpeg_cmd = with_input(verb("mpeg", "m-PEG of an atomic lattice"));
  mpeg_cmd->add_option("--dot", s.dot_path, "Write the lattice of the m-PEG as DOT");
  auto* maps_cmd = with_input(verb("maps-factorize", "Factorize a join map into MPS and MPI steps"));
  maps_cmd->add_option("--kind", kind, "csi, mps or mpi")->check(CLI::IsMember({"csi", "mps", "mpi"}));
  auto* gen_cmd = verb("generate", "Emit a named or random input");
  gen_cmd->add_option("name", name, "Generator name")->required();
  gen_cmd->add_option("--a", a, "Rank of the uniform matroid");
  gen_cmd->add_option("--b", b, "Size of the uniform matroid")->check(CLI::Range(std::size_t{1}, std::size_t{24}));
  gen_cmd->add_option("--triples", triples, "Four-point triples bitmask")->check(CLI::Range(0u, 15u));
  gen_cmd->add_option("--n", n, "Points of a random collection")->check(CLI::Range(std::size_t{1}, std::size_t{24}));
  gen_cmd->add_option("--facets", facets, "Random facets");
  gen_cmd->add_option("--dim", dim, "Dimension of a random linear matroid")->check(CLI::Range(std::size_t{1}, std::size_t{6}));
  gen_cmd->add_option("--p", prime, "Field size of a random linear matroid")->check(CLI::IsMember({2u, 3u, 5u, 7u}));
  auto* repro_cmd = verb("reproduce", "Replay a worked example against its expected values");
  repro_cmd->add_option("target", target, "Example name")->required()->check(CLI::IsMember(reproduce_targets()));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    s.max_ground = max_ground_from_env();
    Inputs inputs(in, s);
    const std::map<CLI::App*, std::function<Output()>> verbs{
        {flats_cmd, [&] { return flats_verb(inputs.collection(input)); }},
        {circuits_cmd, [&] { return circuits_verb(inputs.collection(input)); }},
        {rank_cmd, [&] { return rank_verb(inputs.collection(input), subset); }},
        {repr_cmd, [&] { return check_repr_verb(inputs.collection(input)); }},
        {matroid_cmd, [&] { return check_matroid_verb(inputs.collection(input)); }},
        {paving_cmd, [&] { return check_paving_verb(inputs.collection(input)); }},
        {minimal_cmd, [&] { return reps_verb(inputs.collection(input), s, false, with_mindeg); }},
        {sji_cmd, [&] { return reps_verb(inputs.collection(input), s, true, with_mindeg); }},
        {mindeg_cmd, [&] { return mindeg_verb(inputs.collection(input), all_witnesses); }},
        {stack_cmd, [&] { return stack_verb(inputs.matrix(input), inputs.matrix(second)); }},
        {truncate_cmd, [&] { return Output{to_json(truncation(inputs.collection(input), k))}; }},
        {geo_cmd, [&] { return geo_verb(inputs.text(input)); }},
        {mpeg_cmd, [&] { return mpeg_verb(inputs.text(input)); }},
        {maps_cmd, [&] { return factorize_verb(inputs.text(input), kind); }},
        {gen_cmd, [&] { return generate_verb(name, a, b, triples, n, facets, dim, prime, s.seed); }},
        {repro_cmd, [&] { return reproduce_verb(target, s); }},
    };
    const auto chosen = app.get_subcommands().front();
    if (gen_cmd == chosen && name == "random" && n > s.max_ground)
      fail(ErrorKind::TooLarge, "--n exceeds BOOLREP_MAX_GROUND");
    const Output o = verbs.at(chosen)();
    emit(o, s, out);
    return o.code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const Error& e) {
    const nlohmann::json j{{"error", {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}}}};
    out << j.dump(2) << "\n";
    return kDomainError;
  }
}

}  // namespace boolrep::cli
