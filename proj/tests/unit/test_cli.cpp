#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "boolrep/cli.hpp"

using namespace boolrep;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;

  nlohmann::json json() const { return nlohmann::json::parse(out); }
};

Result run(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& body) {
  const auto path = (std::filesystem::temp_directory_path() / ("boolrep_cli_" + name)).string();
  std::ofstream(path) << body;
  return path;
}

const nlohmann::json& check_named(const nlohmann::json& report, const std::string& name) {
  for (const auto& c : report["checks"])
    if (c["name"] == name) return c;
  throw std::runtime_error("no check " + name);
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("generate piped into flats") {
    auto gen = run({"generate", "uniform", "--a", "3", "--b", "6"});
    REQUIRE(gen.code == 0);
    auto flats = run({"flats"}, gen.out);
    REQUIRE(flats.code == 0);
    CHECK(flats.json()["count"] == 23);
    CHECK(flats.json()["flats"].size() == 23);
    // Byte-stable output.
    CHECK(run({"flats"}, gen.out).out == flats.out);
  }

  TEST_CASE("exit codes") {
    CHECK(run({}).code == cli::kUsageError);
    CHECK(run({"frobnicate"}).code == cli::kUsageError);
    CHECK(run({"flats", "--format", "xml", "fano"}).code == cli::kUsageError);
    CHECK(run({"flats", "/no/such/file"}).code == cli::kUsageError);
    CHECK(run({"reproduce", "nowhere"}).code == cli::kUsageError);
    CHECK(run({"circuits", "--dot", "x.dot", "fano"}).code == cli::kUsageError);
    auto bad = run({"check-repr"}, R"({"ground":["1","2"],"facets":[["1"]]})");
    CHECK(bad.code == cli::kDomainError);
    CHECK(bad.json()["error"]["kind"] == "NotSimple");
    auto parse = run({"flats"}, "{ nope");
    CHECK(parse.code == cli::kDomainError);
    CHECK(parse.json()["error"]["kind"] == "ParseError");
    CHECK(run({"--help"}).code == cli::kOk);
  }

  TEST_CASE("ground size cap from the environment") {
    ::setenv("BOOLREP_MAX_GROUND", "5", 1);
    auto r = run({"flats", "fano"});
    CHECK(r.code == cli::kDomainError);
    CHECK(r.json()["error"]["kind"] == "TooLarge");
    ::setenv("BOOLREP_MAX_GROUND", "zero", 1);
    CHECK(run({"flats", "fano"}).code == cli::kUsageError);
    ::unsetenv("BOOLREP_MAX_GROUND");
    CHECK(run({"flats", "fano"}).code == cli::kOk);
    CHECK(run({"--max-subsets", "64", "flats", "fano"}).json()["error"]["kind"] == "TooLarge");
  }

  TEST_CASE("collection verbs") {
    CHECK(run({"circuits", "bigex"}).json()["circuits"] == nlohmann::json{{"1", "2", "3"}});
    auto rank = run({"rank", "bigex", "--subset", "12"}).json();
    CHECK(rank["rank"] == 3);
    CHECK(rank["subset"]["rank"] == 2);
    CHECK(rank["subset"]["closure"] == nlohmann::json{"1", "2", "3"});
    auto unio = run({"check-repr", "unio"}).json();
    CHECK(unio["representable"] == false);
    CHECK(unio["counterexample"].size() == 3);
    CHECK(run({"check-matroid", "fano"}).json()["matroid"] == true);
    auto paving = run({"check-paving", "unio"}).json();
    CHECK(paving["paving"] == true);
    CHECK(paving["paving_representable"] == false);
    auto trunc = run({"truncate", "truno", "--k", "3"});
    CHECK(run({"check-repr"}, trunc.out).json()["representable"] == false);
    CHECK(run({"check-repr", "truno"}).json()["representable"] == true);
  }

  TEST_CASE("representation verbs") {
    auto minimal = run({"minimal-reps", "bigex", "--mindeg"}).json();
    CHECK(minimal["families"].size() == 6);
    CHECK(minimal["counts"]["minimal_orbits"] == 2);
    CHECK(minimal["counts"]["mindeg"] == 3);
    auto sji = run({"sji-reps", "fano", "--jobs", "2"}).json();
    CHECK(sji["families"].size() == 35);
    CHECK(sji["counts"]["sji_orbits"] == 3);
    auto md = run({"mindeg", "fano", "--all"}).json();
    CHECK(md["mindeg"] == 4);
    CHECK(md["witness"]["rows"].size() == 4);
    CHECK(md["witness_count"].get<std::size_t>() >= 1);
    auto cap = run({"sji-reps", "u3-6", "--max-flats", "10"});
    CHECK(cap.code == cli::kDomainError);
    CHECK(cap.json()["error"]["kind"] == "TooLarge");
  }

  TEST_CASE("stack") {
    auto a = temp_file("a.txt", "cols: 1 2 3\n110\n011\n");
    auto b = temp_file("b.txt", "cols: 1 2 3\n011\n101\n");
    auto r = run({"stack", a, b}).json();
    CHECK(r["stacked"]["rows"] == nlohmann::json{"110", "011", "101"});
    CHECK(r["rowsum_closure"]["rows"].size() == 5);
    auto c = temp_file("c.txt", "cols: 1 2\n11\n");
    CHECK(run({"stack", a, c}).code == cli::kDomainError);
  }

  TEST_CASE("geometry verbs") {
    auto peg = temp_file("peg.json",
                         R"({"points":["1","2","3","4","5","6","7"],"lines":[["1","2","5"],["1","3","7"],)"
                         R"(["1","4","6"],["2","3","6"],["2","4","7"],["3","4","5"],["5","6","7"]]})");
    auto dot = (std::filesystem::temp_directory_path() / "boolrep_cli_levi.dot").string();
    auto r = run({"geo", peg, "--dot", dot});
    REQUIRE(r.code == 0);
    CHECK(r.json()["report"]["valid"] == true);
    CHECK(std::filesystem::file_size(dot) > 0);
    auto back = run({"geo"}, r.json()["lattice"].get<std::string>()).json();
    CHECK(back["peg"]["lines"] == r.json()["peg"]["lines"]);
    auto bad = run({"geo"}, R"({"points":["a","b","c"],"lines":[["a","b","c"],["a","b"]]})").json();
    CHECK(bad["report"]["valid"] == false);
    CHECK(bad["report"]["checks"][0]["axiom"] == "G1");
    auto m = run({"mpeg"}, "elements: 0 a b c ab ac bc abc\ncovers:\n0 < a\n0 < b\n0 < c\na < ab\nb < ab\n"
                           "a < ac\nc < ac\nb < bc\nc < bc\nab < abc\nac < abc\nbc < abc\n")
                 .json();
    CHECK(m["mpeg"]["strata"][1].size() == 3);
    CHECK(m["report"]["valid"] == true);
    auto chain = run({"mpeg"}, "elements: 0 a b c\ncovers:\n0 < a\na < b\nb < c\n").json();
    CHECK(chain["error"]["kind"] == "NotAtomic");
  }

  TEST_CASE("maps-factorize") {
    const std::string input =
        "source:\nelements: B T\ncovers:\nB < T\n"
        "target:\nelements: B a b c T\ncovers:\nB < b\nB < c\nb < a\nc < a\na < T\n"
        "map:\nB -> B\nT -> T\n";
    auto r = run({"maps-factorize"}, input).json();
    CHECK(r["recomposes"] == true);
    CHECK(r["steps"].size() == 3);
    CHECK(r["steps"][0]["type"] == "MPI");
    auto table = run({"maps-factorize", "--format", "table"}, input);
    CHECK(table.out.find("1. MPI: add a") == 0);
    auto mps = run({"maps-factorize", "--kind", "mps"}, input).json();
    CHECK(mps["error"]["kind"] == "NotSurjective");
    const std::string onto =
        "source:\nelements: B a b T\ncovers:\nB < a\nB < b\na < T\nb < T\n"
        "target:\nelements: B T\ncovers:\nB < T\n"
        "map:\nB -> B\na -> T\nb -> T\nT -> T\n";
    auto s = run({"maps-factorize", "--kind", "mps"}, onto).json();
    CHECK(s["recomposes"] == true);
    CHECK(s["steps"].size() == 2);
    CHECK(run({"maps-factorize"}, "map:\nB -> B\n").json()["error"]["kind"] == "ParseError");
  }

  TEST_CASE("reproduce targets") {
    for (const auto* t : {"fano", "libourne", "unio", "truno", "fourpoints", "section3"}) {
      auto r = run({"reproduce", t});
      CHECK_MESSAGE(r.code == 0, t);
      CHECK(r.json()["status"] == "PASS");
    }
    auto fano = run({"reproduce", "fano"}).json();
    CHECK(check_named(fano, "minimal")["computed"] == 7);
    CHECK(check_named(fano, "sji")["computed"] == 35);
    CHECK(check_named(fano, "mindeg")["computed"] == 4);
  }

  TEST_CASE("reproduce reports the published counts that do not hold") {
    // bigex: every value matches except the number of sji classes (6 computed).
    auto bigex = run({"reproduce", "bigex"});
    CHECK(bigex.code == cli::kDomainError);
    auto j = bigex.json();
    CHECK(j["status"] == "FAIL");
    for (const auto& c : j["checks"]) CHECK(c["pass"] == (c["name"] != "sji_orbits"));
    CHECK(check_named(j, "minimal")["computed"] == 6);
    CHECK(check_named(j, "sji")["computed"] == 24);
    CHECK(check_named(j, "mindeg")["computed"] == 3);
    CHECK(check_named(j, "sji_orbits")["computed"] == 6);
    // U3,6: raw counts differ, orbit counts, mindeg and the graph criterion hold.
    auto u = run({"reproduce", "u3-6", "--jobs", "4"}).json();
    CHECK(u["status"] == "FAIL");
    CHECK(check_named(u, "minimal")["computed"] == 226);
    CHECK(check_named(u, "sji")["computed"] == 442);
    for (const auto* name : {"minimal_orbits", "sji_orbits", "mindeg", "im_theta_graph_criterion_disagreements"})
      CHECK(check_named(u, name)["pass"] == true);
  }

  TEST_CASE("table rendering") {
    auto r = run({"--format", "table", "circuits", "bigex"});
    CHECK(r.out == "circuits\n  {1,2,3}\ncount\t1\n");
    auto lib = run({"generate", "libourne"});
    CHECK(lib.out == "cols: 1 2 3 4\n1011\n0110\n0001\n");
    CHECK(cli::render_table(nlohmann::json{{"a", 1}, {"b", {{"c", true}}}}) == "a\t1\nb\n  c\ttrue\n");
  }
}
