#pragma once

#include <ostream>
#include <string>

namespace conesum {

// Exit codes of the command-line tool.
enum ExitCode { kOk = 0, kPropertyFailure = 1, kConfigError = 2, kNotFound = 3 };

// Entry point shared by the executable and the tests.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace conesum
