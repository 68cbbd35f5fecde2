#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace leavitt::cli {

// Exit codes.
inline constexpr int kPositive = 0;
inline constexpr int kInputError = 1;
inline constexpr int kUnknown = 2;
inline constexpr int kNegative = 3;
inline constexpr int kTheoremViolation = 4;

// args excludes the program name.
int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace leavitt::cli
