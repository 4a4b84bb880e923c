#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qcm::cli {

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name. Returns 0 (success), 1 (a diagnostic check failed), 2 (bad
/// configuration) or 3 (non-invertible regime).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qcm::cli
