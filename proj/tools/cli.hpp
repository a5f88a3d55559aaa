#pragma once

#include <ostream>

namespace gencat::cli {

/// Exit codes of every subcommand.
inline constexpr int kOk = 0;
inline constexpr int kNotEqual = 1;
inline constexpr int kInputError = 2;

/// Runs one invocation. Results go to out, diagnostics to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gencat::cli
