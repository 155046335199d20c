#pragma once

#include <ostream>
#include <span>
#include <string>

namespace zalcman {

enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitUsage = 2,
  kExitOutsideDomain = 3,
};

/// Runs one command line (without the program name).
int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace zalcman
