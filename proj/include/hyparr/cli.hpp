#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hyparr::cli {

enum ExitCode : int { Ok = 0, InputError = 1, UnknownVerdict = 2, Mismatch = 3 };

/// Runs one command; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hyparr::cli
