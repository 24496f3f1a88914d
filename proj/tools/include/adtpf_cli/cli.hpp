#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace adtpf::cli {

/// Process exit statuses.
enum ExitCode : int {
  kOk = 0,
  kUsageOrInput = 1,  ///< bad flags, unreadable file, malformed JSON
  kInvalidModel = 2,  ///< well-formedness violations
  kShapeOrOrder = 3,  ///< bu on a DAG, or an unusable variable order
  kCapExceeded = 4,   ///< naive enumeration over the cap without --force
};

/// Runs one command line (without the program name). Regular output goes to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace adtpf::cli
