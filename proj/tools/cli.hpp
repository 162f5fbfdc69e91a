#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lagrforge::cli {

/// Runs one command line (without the program name). Returns the exit code:
/// 0 success, 1 verification failed, 2 input or usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lagrforge::cli
