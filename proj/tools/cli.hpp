#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace divbound::cli {

enum class Subcommand { Compute, Bound, Invert, Verify, Scan, Decompose };
enum class OutputFormat { Json, Csv, Plain };

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;   // bad arguments, unreadable or malformed input
inline constexpr int kExitDomain = 3;  // inputs parse but violate an operation's domain

struct CliConfig {
    Subcommand subcommand = Subcommand::Compute;
    std::string generator;
    std::string mu_path;
    std::string nu_path;
    std::string tv;  // raw text, parsed after CLI11 so "inf" and NaN get our rules
    std::string d;
    std::string method = "numeric-inversion";
    std::size_t trials = 1000;
    std::size_t max_support = 8;
    std::uint64_t seed = 0;
    std::size_t resolution = 50;
    std::optional<OutputFormat> format;
    std::optional<int> precision;
};

/// Parses argv, runs the subcommand and returns the exit code. Results go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace divbound::cli
