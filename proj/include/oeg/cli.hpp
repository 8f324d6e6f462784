#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace oeg::cli {

enum ExitCode : int {
  ok = 0,
  check_failed = 1,
  input_error = 2,
  not_finite_type = 3,
};

/// Runs one subcommand; `args` excludes the program name. Output is
/// byte-deterministic for fixed arguments and input.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace oeg::cli
