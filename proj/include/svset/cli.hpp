#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace svset::cli {

/// Exit status: 0 success or check passed, 1 check failed (witness printed),
/// 2 usage or parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace svset::cli
