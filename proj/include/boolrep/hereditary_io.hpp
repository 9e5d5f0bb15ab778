#pragma once

#include <string_view>

#include <json.hpp>

#include "boolrep/flat_family.hpp"
#include "boolrep/hereditary.hpp"

namespace boolrep {

// {"ground": [...], "facets": [[...], ...]} or the same with "independents".
HereditaryCollection hereditary_from_json(const nlohmann::json& j);
HereditaryCollection hereditary_from_json_text(std::string_view text);
nlohmann::json to_json(const HereditaryCollection& hc, bool facets_only = true);

nlohmann::json subset_json(const GroundSet& ground, Mask x);
nlohmann::json family_json(const GroundSet& ground, const std::vector<Mask>& sets);
nlohmann::json to_json(const FlatFamily& f);

}  // namespace boolrep
