// Command-line front end; exposed as a function so tests can drive it
// in-process.
#pragma once

namespace flatfront {

// Exit codes: 0 analysis completed, 2 invalid input, 3 period condition
// failed (diagnostic report still written).
int run_cli(int argc, const char* const* argv);

}  // namespace flatfront
