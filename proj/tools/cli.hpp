#pragma once

#include <string>
#include <vector>

namespace simplex_nodes::cli
{

enum ExitCode
{
  exit_ok = 0,
  exit_verify_failed = 1,
  exit_usage = 2,
  exit_numerical = 3,
  exit_parse = 4,
};

/// Runs the command line; args[0] is the program name.
int run(const std::vector<std::string>& args);

} // namespace simplex_nodes::cli
