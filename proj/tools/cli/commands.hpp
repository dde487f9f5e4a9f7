#pragma once

#include <string>
#include <vector>

namespace gispec::cli {

/// Entry point behind main(): parses argv into one subcommand and runs it.
/// Exit codes: 0 success, 1 validation/computation failure, 2 usage error.
int run(const std::vector<std::string>& args);
int run(int argc, char** argv);

}  // namespace gispec::cli
