#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mdpcc {

// Runs one CLI command. Exit status: 0 = analysis ran (verdicts live in the
// report), 1 = usage error, 2 = input format error, 3 = internal invariant
// violation.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mdpcc
