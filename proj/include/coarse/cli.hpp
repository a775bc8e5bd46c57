#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace coarse::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitPropertyFailure = 1;
inline constexpr int kExitInputError = 2;

/// Runs one command. `args` excludes the program name. Reports go to `out`,
/// diagnostics to `err`. Returns 0 when no check failed, 1 on a property
/// failure or theorem violation, 2 on an input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace coarse::cli
