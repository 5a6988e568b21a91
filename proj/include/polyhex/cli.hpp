#pragma once

#include "polyhex/closed_form.hpp"

#include <iosfwd>
#include <string_view>

namespace polyhex::cli {

enum ExitCode : int { kSuccess = 0, kInconsistent = 1, kUsage = 2 };

/// Parses "lo:hi" (inclusive). Throws InvalidSpec on malformed text or an empty range.
IntRange parse_range(std::string_view text);

/**
 * Entry point for the `polyhex` command line.
 *
 * Subcommands: build, index, verify, sweep. Results go to `out`, diagnostics
 * to `err`. Returns 0 on success, 1 when verify finds an inconsistent paper
 * form, 2 on invalid arguments or I/O failure.
 */
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace polyhex::cli
