#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace yosp::cli {

/// Runs the command line; returns 0 on success, 1 when a check fails and
/// 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace yosp::cli
