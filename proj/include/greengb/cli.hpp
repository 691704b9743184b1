#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace greengb::cli {

/// Runs one CLI invocation (args without the program name) against the
/// given streams. Exit codes: 0 success, 2 completion bound exceeded,
/// 3 parse error, 4 enumeration truncated where finiteness was required,
/// 5 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace greengb::cli
