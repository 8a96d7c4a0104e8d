#pragma once

#include "json.hpp"

#include <ostream>
#include <string>

namespace isoclass {

// Deterministic JSON rendering: keys sorted, 2-space indent, exact rationals
// as "num/den" strings, floats printed with 15 significant digits. Parsing the
// output and dumping again reproduces the bytes exactly.
std::string canonical_json_dump(const nlohmann::json& j);

// Full command-line driver; returns the process exit code.
//   0  success
//   1  verification found a mismatch
//   2  usage error or parameter outside the documented caps
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace isoclass
