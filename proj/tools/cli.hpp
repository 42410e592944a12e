#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace monconv::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolated = 1;
inline constexpr int kExitUsage = 2;

// args excludes the program name. Records go to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace monconv::cli
