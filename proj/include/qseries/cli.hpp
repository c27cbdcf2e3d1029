#pragma once

#include <iosfwd>

namespace qseries::cli {

enum ExitCode : int { success = 0, mismatch = 1, usage_error = 2 };

/// Runs one subcommand (series, count, verify, verify-all, scan, bseq).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace qseries::cli
