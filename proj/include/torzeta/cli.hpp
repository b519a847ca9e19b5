#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace torzeta::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInvalidInput = 1;
inline constexpr int kResidualAboveTol = 2;
inline constexpr int kDivergence = 3;

// Runs one command line (without the program name). Results go to `out`,
// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace torzeta::cli
