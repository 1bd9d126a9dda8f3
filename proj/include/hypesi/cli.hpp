#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hypesi {

/// Exit codes: 0 pass, 1 invariant violation or failed check, 2 usage or
/// configuration error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace hypesi
