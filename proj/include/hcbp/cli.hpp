#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hcbp {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one `hcbp` command line. `args` excludes the program name. Data goes
/// to `out`; diagnostics, timing and usage errors go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace hcbp
