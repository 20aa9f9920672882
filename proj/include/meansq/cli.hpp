#pragma once

// CLI entry point, exposed as a library function so tests can drive it
// in-process. Exit code contract: 0 all checks pass, 1 any failure (or
// unwritable output), 2 usage error.

#include <string>
#include <vector>

namespace meansq::cli {

int run(const std::vector<std::string>& args);

}  // namespace meansq::cli
