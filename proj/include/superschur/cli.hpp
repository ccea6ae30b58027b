#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace superschur {

/// Runs the command-line interface; returns the process exit code
/// (0 success, 1 verification failure, 2 parse error, 3 bounds error).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace superschur
