#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tperfect::cli {

/// Exit codes of the command-line tool.
enum Exit : int {
  kDefinite = 0,
  kInputError = 1,
  kInconclusive = 2,
  kDisagreement = 3,  // corpus: the three deciders disagree on some graph
  kInternalError = 4,
};

/// Runs one command line (without the program name), reading "-" inputs from
/// `in`. Returns the exit code.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace tperfect::cli
