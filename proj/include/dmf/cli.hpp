#pragma once

namespace dmf {

/// Command-line front end: subcommands expand | filtration | op | verify |
/// proof-trace. Returns 0 on success, 1 when a verification fails, 2 on
/// usage or configuration errors.
int cli_main(int argc, const char* const* argv);

}  // namespace dmf
