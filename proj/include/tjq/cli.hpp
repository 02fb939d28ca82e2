/**
 * @file cli.hpp
 * @brief Command-line front end, callable in-process for tests.
 *
 * Exit codes: 0 success / all checks pass, 1 verification failure,
 * 2 usage error. Output is byte-identical for identical arguments and
 * seed (bench timing lines excepted).
 */
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tjq::cli {

/// Runs the tool with `args` (not including the program name), writing to
/// the given streams. Never throws; errors become exit codes.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace tjq::cli
