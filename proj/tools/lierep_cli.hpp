#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lierep::cli {

enum ExitCode : int {
  kOk = 0,
  kFailed = 1,        ///< verification failed or an unannotated table diff exists
  kUsage = 2,         ///< malformed arguments, unknown type, rank mismatch
  kInconsistent = 3,  ///< internal consistency failure
};

/// Runs one command. args excludes the program name, e.g.
/// {"dim", "--type", "F4", "--highest", "0,0,0,1"}.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lierep::cli
