#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace platykit::cli {

enum ExitCode : int {
  kOk = 0,
  kViolation = 1,  // audit found a violation
  kUsage = 2,
  kParse = 3,
  kGuard = 4,
};

/// Runs one command line (without the program name). Input "-" reads `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace platykit::cli
