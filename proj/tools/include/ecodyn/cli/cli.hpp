#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ecodyn::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitIo = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitNumerical = 3;

inline constexpr std::size_t kBuiltinDefaultSteps = 1000;

/// ECODYN_DEFAULT_STEPS if set (positive integer), else 1000.
std::size_t default_steps();

/// Runs one invocation; `args` excludes the program name. Output goes to
/// `--out` when given (atomically), else to `out`. Diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, char** argv);

}  // namespace ecodyn::cli
