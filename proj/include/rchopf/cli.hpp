#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rchopf::cli {

enum ExitCode : int { kPass = 0, kFail = 1, kUsage = 2 };

/// Runs the command line; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Default location of the bundled fixtures (compile-time, overridable with --fixtures).
std::string default_fixture_dir();

}  // namespace rchopf::cli
