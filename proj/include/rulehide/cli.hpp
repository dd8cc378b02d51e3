#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace rulehide {

/// Parsed command line for one subcommand invocation.
struct CliConfig {
    std::string subcommand;
    std::string input_path;      // basket file (mine/rules/hide), original (diff)
    std::string second_path;     // sanitized basket (diff only)
    std::string output_path;     // empty: standard output
    std::string log_path;        // hide only; empty: log not written
    std::string sensitive_path;  // hide: required, diff: optional
    std::optional<std::string> support_fraction;  // decimal text, exclusive with count
    std::optional<std::int64_t> support_count;
    std::string min_confidence;
    std::string safety_margin = "0";
    std::string weight = "confidence";
};

/// Exit statuses: 0 success, 1 usage or parameter error, 2 input read or
/// parse error, 3 hiding postcondition re-check failure.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitHidingFailure = 3;

/// Runs one subcommand. `args` excludes the program name. Normal output
/// goes to `out` unless an output path is given; diagnostics go to `err`.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace rulehide
