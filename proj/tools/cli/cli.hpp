#pragma once

#include <iosfwd>

#include "triexp/error.hpp"

namespace triexp::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerifyFailed = 1,
  kExitUsage = 2,
  kExitCap = 3,
  kExitIo = 4,
};

[[nodiscard]] int exit_code_for(ErrorKind kind) noexcept;

/// Parses argv and runs one subcommand; output goes to `out`, diagnostics to
/// `err`. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace triexp::cli
