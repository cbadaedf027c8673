#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "abelcycles/group.hpp"

namespace abelcycles {

enum class Command { info, construct, scan, expect, smin, verify };
enum class OutputFormat { json, csv, text };

/// Exit statuses of run().
inline constexpr int exit_pass = 0;
inline constexpr int exit_fail = 1;
inline constexpr int exit_usage = 2;
inline constexpr int exit_inconclusive = 3;

struct RunConfig {
  Command command = Command::info;
  std::vector<GroupSpec> groups;
  std::optional<std::pair<std::int64_t, std::int64_t>> orders;
  std::string builder;             // construct
  std::uint64_t budget = 100'000'000;
  unsigned threads = 1;
  std::uint64_t seed = 0;
  OutputFormat format = OutputFormat::json;
  std::optional<std::filesystem::path> cache;
  bool exact = false;              // expect
  std::uint64_t mc_trials = 0;     // expect
  std::string mode = "both";       // expect: sum, diff or both
  std::int64_t cap = 12;           // enumeration cap for scan and verify
};

/// "100000000", "10^8" or "1e8". Throws std::invalid_argument.
std::uint64_t parse_count(const std::string &text);
/// "3..10" or "7". Throws std::invalid_argument.
std::pair<std::int64_t, std::int64_t> parse_order_range(const std::string &text);

/// Groups named by the config: explicit groups first, then every group of
/// each order in the range.
std::vector<GroupSpec> resolve_groups(const RunConfig &cfg);

/// Canonical cache key: everything that affects the report bytes.
std::string cache_key(const RunConfig &cfg);

/// Parses the command line. On --help or a usage error, writes to `out` /
/// `err` and returns the exit status to use; otherwise std::nullopt.
std::optional<int> parse_command_line(int argc, const char *const *argv, RunConfig &cfg,
                                      std::ostream &out, std::ostream &err);

/// Executes the command, writing the report to `out` and diagnostics to
/// `err`. Returns one of the exit statuses above.
int run(const RunConfig &cfg, std::ostream &out, std::ostream &err);

} // namespace abelcycles
