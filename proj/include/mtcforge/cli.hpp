#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mtcforge {

// Exit codes: 0 success, 1 verification failure, 2 usage or IO error.
enum ExitCode { kExitOk = 0, kExitFail = 1, kExitUsage = 2 };

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mtcforge
