#pragma once

#include <cstddef>
#include <vector>

#include "boolrep/hereditary.hpp"

namespace boolrep::testing {

// Every simple collection on n points: all sets of size at most 2 plus a
// downward closed family of larger sets.
std::vector<HereditaryCollection> simple_collections(std::size_t n);

}  // namespace boolrep::testing
