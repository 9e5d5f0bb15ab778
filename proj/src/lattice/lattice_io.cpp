#include "boolrep/lattice_io.hpp"

#include <optional>
#include <sstream>
#include <vector>

#include "boolrep/error.hpp"

namespace boolrep {
namespace {

struct ParsedLattice {
  FiniteLattice lattice;
  std::optional<std::vector<std::string>> gens;
};

std::vector<std::string> tokens(std::string_view s) {
  std::istringstream in{std::string(s)};
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

ParsedLattice parse(std::string_view text, std::size_t max_elements) {
  std::istringstream in{std::string(text)};
  std::optional<std::vector<std::string>> elements;
  std::optional<std::vector<std::string>> gens;
  std::vector<std::pair<std::string, std::string>> pairs;
  for (std::string line; std::getline(in, line);) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::string_view body = line;
    if (line.rfind("elements:", 0) == 0) {
      elements = tokens(body.substr(9));
      continue;
    }
    if (line.rfind("gens:", 0) == 0) {
      gens = tokens(body.substr(5));
      continue;
    }
    if (line.rfind("covers:", 0) == 0) body = body.substr(7);
    auto t = tokens(body);
    if (t.empty()) continue;
    if (t.size() != 3 || t[1] != "<") fail(ErrorKind::ParseError, "expected 'a < b', got '" + line + "'");
    pairs.emplace_back(t[0], t[2]);
  }
  if (!elements) fail(ErrorKind::ParseError, "missing 'elements:' line");
  std::vector<CoverPair> covers;
  auto index = [&](const std::string& s) -> std::size_t {
    for (std::size_t i = 0; i < elements->size(); ++i)
      if ((*elements)[i] == s) return i;
    fail(ErrorKind::ParseError, "unknown lattice element '" + s + "'");
  };
  for (const auto& [a, b] : pairs) covers.emplace_back(index(a), index(b));
  return {FiniteLattice::from_covers(*elements, covers, max_elements), gens};
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string dot(const FiniteLattice& l, const std::vector<bool>& marked) {
  std::string out = "digraph lattice {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  for (std::size_t x = 0; x < l.size(); ++x)
    out += "  n" + std::to_string(x) + " [label=" + quoted(l.label(x) + (marked[x] ? "*" : "")) + "];\n";
  for (auto [a, b] : l.cover_pairs())
    out += "  n" + std::to_string(a) + " -> n" + std::to_string(b) + " [arrowhead=none];\n";
  return out + "}\n";
}

}  // namespace

std::string to_text(const FiniteLattice& l) {
  std::string out = "elements:";
  for (const auto& s : l.labels()) out += " " + s;
  out += "\ncovers:\n";
  for (auto [a, b] : l.cover_pairs()) out += l.label(a) + " < " + l.label(b) + "\n";
  return out;
}

std::string to_text(const VGenLattice& vg) {
  std::string out = to_text(vg.lattice()) + "gens:";
  for (auto g : vg.gens()) out += " " + vg.lattice().label(g);
  return out + "\n";
}

FiniteLattice lattice_from_text(std::string_view text, std::size_t max_elements) {
  return parse(text, max_elements).lattice;
}

VGenLattice vgen_lattice_from_text(std::string_view text, std::size_t max_elements) {
  auto p = parse(text, max_elements);
  if (!p.gens) fail(ErrorKind::ParseError, "missing 'gens:' line");
  std::vector<std::size_t> gens;
  for (const auto& g : *p.gens) gens.push_back(p.lattice.index_of(g));
  return VGenLattice(std::move(p.lattice), std::move(gens));
}

std::string to_dot(const FiniteLattice& l) { return dot(l, std::vector<bool>(l.size(), false)); }

std::string to_dot(const VGenLattice& vg) {
  std::vector<bool> marked(vg.lattice().size(), false);
  for (auto g : vg.gens()) marked[g] = true;
  return dot(vg.lattice(), marked);
}

}  // namespace boolrep
