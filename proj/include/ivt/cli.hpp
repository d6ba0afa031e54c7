#pragma once

#include <iosfwd>

namespace ivt {

// Exit status: 0 success, 1 usage or I/O error, 2 internal invariant
// violation (including an orbit that never closed within max_steps).
//
// A relative --output path is resolved against $IVT_OUTPUT_DIR when set.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace ivt
