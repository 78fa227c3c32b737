#pragma once

#include <ostream>

namespace tunnelsplit {

// Command line entry point. Returns 0 on success, 2 on validation failures
// (bad flags, schema, configuration, preconditions) and 1 otherwise; errors
// are written to err as a JSON object.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tunnelsplit
