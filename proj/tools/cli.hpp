#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qadv::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitVerdictFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command. args excludes the program name. Results go to out,
/// diagnostics and usage text to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qadv::cli
