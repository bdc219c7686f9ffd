#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "tmdiff/export.hpp"
#include "tmdiff/limits.hpp"

namespace tmdiff::cli {

enum class Command { Eta, Wiener, Distfn, Volterra, Riesz, Periodogram, Verify, Figure };
enum class OutputFormat { Csv, Json, Svg };

enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,
  kVerificationFailure = 2,
  kResourceCap = 3,
};

struct RunConfig {
  Command command = Command::Verify;
  std::int64_t truncation = 4096;        // --max: eta lags, Fourier order, largest Wiener window
  int level = 20;                        // --level
  std::int64_t word_length = 1 << 16;    // --length
  std::int64_t grid_size = 4096;         // --grid: intervals, grid_size + 1 sample points
  std::optional<OutputFormat> format;    // defaults: svg for figure, csv otherwise
  std::string output_path;               // empty: standard output
  PrecisionMode precision = PrecisionMode::Exact;

  OutputFormat effective_format() const;
};

// Checks flag combinations and resource caps. Throws std::invalid_argument
// for usage errors and ResourceCapError for cap violations.
void validate(const RunConfig &config, const ResourceCaps &caps);

// Executes a validated command. All output is produced in memory first and
// written only on success, so failures leave no partial file behind.
int run(const RunConfig &config, std::ostream &out, std::ostream &err,
        const ResourceCaps &caps = ResourceCaps::from_environment());

// Parses argv-style arguments (without the program name) and runs them.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace tmdiff::cli
