#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hermspec {

/// Runs the hermspec command line; `args` excludes the program name.
/// Exit codes: 0 success, 1 negative verdict under --expect-yes or a failed reproduction check,
/// 2 usage, parse or input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hermspec
