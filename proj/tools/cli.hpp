#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bsw::cli {

enum ExitCode : int {
  kSuccess = 0,
  kInvalidInput = 2,
  kRejected = 3,
  kInternalFailure = 4,
};

/// Runs one command; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bsw::cli
