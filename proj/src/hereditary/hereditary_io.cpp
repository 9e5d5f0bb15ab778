#include "boolrep/hereditary_io.hpp"

#include <algorithm>

#include "boolrep/error.hpp"

namespace boolrep {
namespace {

std::string label_of(const nlohmann::json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  fail(ErrorKind::ParseError, "labels must be strings or integers");
}

}  // namespace

HereditaryCollection hereditary_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("ground") || !j["ground"].is_array())
    fail(ErrorKind::ParseError, "expected an object with a 'ground' array");
  std::vector<std::string> labels;
  for (const auto& v : j["ground"]) labels.push_back(label_of(v));
  GroundSet ground(std::move(labels));
  const bool facets = j.contains("facets");
  if (facets == j.contains("independents"))
    fail(ErrorKind::ParseError, "give exactly one of 'facets' or 'independents'");
  const auto& list = facets ? j["facets"] : j["independents"];
  if (!list.is_array()) fail(ErrorKind::ParseError, "set list must be an array");
  std::vector<Mask> sets;
  for (const auto& s : list) {
    if (!s.is_array()) fail(ErrorKind::ParseError, "each set must be an array of labels");
    Mask m = 0;
    for (const auto& v : s) m |= bit(ground.index_of(label_of(v)));
    sets.push_back(m);
  }
  return facets ? HereditaryCollection::from_facets(ground, sets)
                : HereditaryCollection::from_independents(ground, sets);
}

HereditaryCollection hereditary_from_json_text(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorKind::ParseError, e.what());
  }
  return hereditary_from_json(j);
}

nlohmann::json subset_json(const GroundSet& ground, Mask x) { return ground.members(x); }

nlohmann::json family_json(const GroundSet& ground, const std::vector<Mask>& sets) {
  auto out = nlohmann::json::array();
  for (Mask x : sets) out.push_back(subset_json(ground, x));
  return out;
}

nlohmann::json to_json(const HereditaryCollection& hc, bool facets_only) {
  nlohmann::json j;
  j["ground"] = hc.ground().labels();
  if (facets_only) {
    auto f = hc.facets();
    std::sort(f.begin(), f.end(), subset_less);
    j["facets"] = family_json(hc.ground(), f);
  } else {
    j["independents"] = family_json(hc.ground(), hc.independents());
  }
  return j;
}

nlohmann::json to_json(const FlatFamily& f) { return family_json(f.ground(), f.members()); }

}  // namespace boolrep
