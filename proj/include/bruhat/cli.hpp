#pragma once

#include <iosfwd>

namespace bruhat {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  exit_ok = 0,
  exit_check_failed = 1,
  exit_parse_error = 2,
  exit_invalid_word = 3,
  exit_unknown_selector = 4,
};

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bruhat
