#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace etgrs {

/// Runs the command-line tool on the given arguments (program name not
/// included). Exit code 0 on success, 1 on usage or computation errors,
/// 2 when the theorem-based and brute-force verdicts disagree.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace etgrs
