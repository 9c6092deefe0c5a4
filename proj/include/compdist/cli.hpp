#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "compdist/composition.hpp"
#include "compdist/exact.hpp"
#include "compdist/report.hpp"

namespace compdist {

enum class Command {
  enumerate,
  exact,
  simulate,
  asymptote,
  fourier,
  gtable,
  compare,
  bounds_check,
};

enum class OutputFormat { csv, json };

struct RunConfig {
  Command command = Command::exact;
  std::vector<std::int64_t> n_list;
  std::int64_t samples = 0;
  std::optional<std::uint64_t> seed;
  double tolerance = 1e-13;
  OutputFormat format = OutputFormat::csv;
  std::optional<std::string> out_path;
  std::int64_t k_max = 5;       // fourier
  std::int64_t grid_points = 1024;  // gtable
  std::int64_t harmonics = 3;   // gtable reconstruction column
  std::int64_t trials = 10000;  // bounds-check
  std::optional<std::int64_t> tau_n;  // bounds-check: check the tau tail instead
  std::vector<double> t_list;         // tau-tail thresholds; defaults to multiples of sqrt(n)
  std::int64_t enumeration_cap = kDefaultEnumerationCap;
  std::int64_t bigint_cap = kDefaultBigintCap;
  int workers = 1;
};

/// Throws std::invalid_argument when the configuration is inconsistent
/// (no n where one is needed, missing seed for randomized commands, ...).
void validate(const RunConfig& config);

struct CompareRow {
  std::int64_t n = 0;
  double exact_value = 0.0;
  ExpectationMode exact_mode = ExpectationMode::bigint;
  std::optional<double> mc_mean;
  std::optional<double> mc_stderr;
  std::optional<double> asymptote;
  std::optional<double> residual;  // exact_value - asymptote
  std::optional<double> bracket_low;
  std::optional<double> bracket_high;
  std::string flag;  // "n<2 unsupported" for rows the asymptote cannot cover
};

/// One row per n: exact value (big-int when allowed), optional Monte
/// Carlo estimate (samples > 0), asymptote and concentration bracket.
/// Rows are sorted by n.
std::vector<CompareRow> compare(std::span<const std::int64_t> n_list,
                                std::int64_t samples,
                                std::optional<std::uint64_t> seed,
                                std::int64_t bigint_cap = kDefaultBigintCap,
                                int workers = 1);

/// Builds the output table for a validated configuration (pure; exercised
/// directly by tests).
Table build_table(const RunConfig& config);

/// Validates, computes and emits.  Returns the process exit code.
int run(const RunConfig& config);

/// Parses command-line words (excluding argv[0]).  Throws
/// std::invalid_argument with the parser message on bad input.
RunConfig parse_command_line(const std::vector<std::string>& args);

/// Full entry point: parse, validate, run, map failures to exit codes
/// (2 config, 3 resource cap, 4 internal invariant).
int cli_main(int argc, char** argv);

}  // namespace compdist
