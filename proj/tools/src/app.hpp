#pragma once

// Command-line front end: subcommand dispatch, flag/config-file merging, and
// output emission.  Kept as a library function so the end-to-end behaviour is
// unit-testable in process.

namespace bcsreps::cli {

// Exit codes: 0 success, 2 usage/configuration error, 3 numeric failure.
int run(int argc, const char* const* argv);

}  // namespace bcsreps::cli
