#pragma once

// The `munarini` command line: gen, poly, verify, census and export.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parameter error.

#include <iosfwd>
#include <string>
#include <vector>

namespace munarini {

/// Vertex-count cap used when neither MUNARINI_MAX_VERTICES nor
/// --max-vertices is given.
inline constexpr unsigned long long kDefaultMaxVertices = 1000000;

/// Runs one command. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace munarini
