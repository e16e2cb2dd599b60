#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace vlbal::cli {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitVerification = 2;

// Runs one command line (without the program name). JSON objects or CSV
// tables go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vlbal::cli
