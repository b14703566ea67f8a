#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace thetawalls::cli {

/// Exit codes: 0 success or admissible, 1 domain-negative result, 2 usage,
/// 3 resource budget.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBudget = 3;

/// args excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace thetawalls::cli
