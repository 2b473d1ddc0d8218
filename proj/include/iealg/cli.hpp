#pragma once

// Command-line front end. Exit status: 0 success, 1 bad input or usage,
// 2 a check ran and failed.

#include "iealg/suites.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace iealg::cli {

constexpr int exit_ok = 0;
constexpr int exit_input_error = 1;
constexpr int exit_check_failed = 2;

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Runs a named suite, one line per criterion plus a totals line.
int run_suite(const std::string& name, const SuiteOptions& options, bool json, std::ostream& out);

}  // namespace iealg::cli
