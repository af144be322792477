#pragma once

#include <ostream>

namespace rieszcheck {

/// Command line front end. Returns the process exit status: 0 clean,
/// 1 violation or failed check, 2 usage or config error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rieszcheck
