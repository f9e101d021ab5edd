#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lottery::cli {

/// Exit statuses of run().
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;  // bad flags, files or parameter domains
inline constexpr int kExitCapacity = 2;    // capacity or convergence limits

/// Runs one command. args excludes the program name, e.g.
/// {"bounds", "--d", "10", "--eps", "0.005"}. Results and the resolved
/// config echo go to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lottery::cli
