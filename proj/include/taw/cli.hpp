#pragma once

#include <iosfwd>

namespace taw {

// Exit codes: 0 success (and all-pass verify), 1 verification failures,
// 2 usage, config or parse errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace taw
