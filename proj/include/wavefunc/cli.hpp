#pragma once

#include <string>
#include <vector>

namespace wavefunc::cli {

/// Exit codes shared by all subcommands (documented in --help):
///   0  success
///   1  usage or argument error
///   2  data error (unreadable file, malformed row, degenerate sample,
///      corrupt model document)
///   3  fit did not converge (the model document is still written)
enum ExitCode : int {
    exit_ok = 0,
    exit_usage = 1,
    exit_data = 2,
    exit_no_convergence = 3,
};

/// Entry point used by the wavefunc binary and by tests.  argv follows the
/// usual convention (argv[0] is the program name).
int run(int argc, const char* const* argv);

/// Convenience overload: args without the program name.
int run(const std::vector<std::string>& args);

/// Reads a sample file: one number per line, blank lines and lines starting
/// with '#' ignored.  Throws DataError naming the 1-based physical row of
/// the first malformed line.
std::vector<double> read_sample_file(const std::string& path);

}  // namespace wavefunc::cli
