#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spinor {

/// Full command-line front end: `decide`, `catalogue`, `verify`, `oracle`.
/// Returns the process exit code: 0 success, 1 verification failure,
/// 2 usage or validation error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spinor
