#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "constellab/rational.hpp"

namespace constellab {

/// Parsed command line: one subcommand plus flags.  Flags override the
/// matching [task] entries of the problem file.
struct CliOptions {
    std::string subcommand;
    std::optional<std::string> input_path;
    std::optional<long> window_index;        // --window N
    std::optional<std::uint64_t> seed;       // --seed S
    std::optional<Rational> bound;           // --bound p/q
    std::optional<std::size_t> cap;          // --cap K
    std::optional<std::size_t> samples;      // --samples N
    bool timing = false;                     // measure wall time (reports 0 otherwise)
    bool help = false;
};

/// Parse argv (without the program name).  Throws InputError on unknown
/// subcommands, unknown flags or malformed flag values.
CliOptions parse_cli(const std::vector<std::string>& args);

/// Full CLI entry point: parse, dispatch, print one JSON report to `out`
/// and diagnostics to `err`.  Returns the process exit code: 0 when the
/// computation ran (whatever the verdict), 2 on input errors, 3 on internal
/// assertion failures (including selftest failures).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// The usage text printed by `help` and `--help`.
std::string usage_text();

}  // namespace constellab
