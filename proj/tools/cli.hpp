#pragma once

#include <ostream>

namespace weylref::cli {

// Exit codes: 0 success, 1 validation or usage error, 2 internal
// inconsistency, 3 resource cap.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace weylref::cli
