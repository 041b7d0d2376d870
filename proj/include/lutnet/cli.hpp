#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lutnet::cli {

// Exit codes: 0 success, 1 runtime failure (including a failed differential
// check), 2 usage error, 3 pipeline-stage violation.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lutnet::cli
