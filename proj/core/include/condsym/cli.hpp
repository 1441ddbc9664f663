#pragma once

#include <string>
#include <vector>

namespace condsym::cli {

// Runs one subcommand. Exit codes: 0 all checks passed, 1 at least one
// failure, 2 usage/configuration error, 3 inconclusive results present under
// --strict. Output (text or JSON) goes to `out`; usage errors to `err`.
int run(const std::vector<std::string>& argv, std::string& out, std::string& err);

} // namespace condsym::cli
