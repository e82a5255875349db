#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bnscope::cli {

/// Runs one command line. Exit codes: 0 success, 1 failed verification or
/// operation, 2 usage or input error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bnscope::cli
