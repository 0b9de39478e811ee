#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nlsnf::cli {

inline constexpr const char* kVersion = "nlsnf 0.1.0";

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kInvalid = 2;
inline constexpr int kNumerical = 3;

// Parses args (without the program name) and runs one subcommand. Reports go
// to out, diagnostics and usage text to err.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nlsnf::cli
