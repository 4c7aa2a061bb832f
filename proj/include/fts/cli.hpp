#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fts::cli {

/// Command dispatch for the ftsdist tool. Returns 0 on success, 1 on
/// validation or domain errors, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace fts::cli
