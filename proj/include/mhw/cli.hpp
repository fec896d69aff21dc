#pragma once

namespace mhw {

// Full command-line surface. Returns the process exit code:
// 0 success, 1 computation or suite failure, 2 usage errors.
int run_cli(int argc, const char* const* argv);

}  // namespace mhw
