#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "boolrep/reps.hpp"

namespace boolrep::cli {

enum ExitCode : int { kOk = 0, kDomainError = 1, kUsageError = 2 };

// args excludes the program name. Reads piped input from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

const std::vector<std::string>& reproduce_targets();
// {"target", "status": "PASS"|"FAIL", "checks": [{"name","expected","computed","pass"}]}.
// Throws InvariantViolation for an unknown target.
nlohmann::json reproduce(std::string_view target, const EnumerationOptions& options = {});

// Key/value lines for top-level scalars, indented lines for array entries.
std::string render_table(const nlohmann::json& j);

}  // namespace boolrep::cli
