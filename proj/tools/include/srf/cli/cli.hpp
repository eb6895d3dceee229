#pragma once

#include "srf/cli/report.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace srf::cli {

enum ExitCode : int { kPass = 0, kChecksFailed = 1, kUsageError = 2, kComputeError = 3 };

struct RunConfig {
  std::string subcommand;
  std::optional<std::string> y;
  std::optional<std::string> srf;
  int k = 2;
  int n = 4;
  long span = -1;  ///< -1: subcommand default
  std::string sigma = "1e-6";
  std::string eps = "0.1";
  Bits precision_bits = 256;
  std::vector<std::string> srf_grid;
  std::vector<std::string> y_grid;
  std::optional<std::string> mode;
  std::string format = "json";
  std::string output;
  std::uint64_t seed = 1;
  unsigned threads = 0;  ///< 0: machine parallelism
  std::vector<long> support;
  std::vector<std::string> values;
  std::string window;
  std::optional<std::string> z;
  std::optional<std::string> zeta;
  std::optional<std::string> w;
  std::size_t samples = 100;
};

Json config_json(const RunConfig& c);

/// Builds the report for a parsed configuration. Throws srf::Error.
Report execute(const RunConfig& config);

/// Parses argv, runs the subcommand and writes the report to `out` (or the
/// --output file). Diagnostics go to `err` only.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace srf::cli
