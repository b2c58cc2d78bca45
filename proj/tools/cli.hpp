#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace atrq::cli {

enum ExitCode : int {
  kSuccess = 0,
  kInternal = 1,
  kUsage = 2,
  kIo = 3,
  kDomain = 4,
};

/// Runs one invocation of the tool. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace atrq::cli
