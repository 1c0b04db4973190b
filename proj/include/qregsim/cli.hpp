#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace qreg::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitRuntime = 2;

/// Runs one command line (without the program name). Reports go to `out`,
/// one-line diagnostics to `err`.
int execute(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace qreg::cli
