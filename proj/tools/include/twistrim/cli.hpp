#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace twistrim::cli {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitUndetermined = 3;

/// Runs one command. `args` excludes the program name. Results go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace twistrim::cli
