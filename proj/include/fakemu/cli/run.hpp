#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fakemu::cli {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;  // library error or verification mismatch
constexpr int kExitUsage = 2;

// Runs one command line (without the program name). Artifacts go to `out`
// or the --out file; the banner and the one-line error JSON go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fakemu::cli
