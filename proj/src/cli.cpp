#include "compdist/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "compdist/asymptotics.hpp"
#include "compdist/errors.hpp"
#include "compdist/sampler.hpp"

namespace compdist {

namespace {

std::string mode_name(ExpectationMode mode) {
  return mode == ExpectationMode::bigint ? "bigint" : "scaled-float";
}

constexpr const char* kSmallNFlag = "n<2 unsupported";

std::string join_parts(const std::vector<std::int64_t>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i != 0) out += '+';
    out += std::to_string(parts[i]);
  }
  return out;
}

Table enumerate_table(const RunConfig& config) {
  Table table;
  table.columns = {"schema_version", "index",     "bitstring",
                   "parts",          "num_parts", "distinct_sizes"};
  const std::int64_t n = config.n_list.front();
  std::uint64_t index = 0;
  for (const Composition& c : enumerate_compositions(n, config.enumeration_cap)) {
    std::string bits;
    for (const auto bit : to_bitstring(c).bits) bits += bit ? '1' : '0';
    table.add_row({kSchemaVersion, std::to_string(index), bits, join_parts(c.parts),
                   std::to_string(c.parts.size()),
                   std::to_string(distinct_part_count(c))});
    ++index;
  }
  return table;
}

Table exact_table(const RunConfig& config) {
  Table table;
  table.columns = {"schema_version", "n", "numerator", "denominator_log2",
                   "float_value",    "mode"};
  for (const auto& entry : expectation_table(config.n_list, config.bigint_cap)) {
    if (!entry.error.empty()) {
      table.add_row({kSchemaVersion, std::to_string(entry.n), "", "", "",
                     "error: " + entry.error});
      continue;
    }
    const ExactExpectationRecord& rec = *entry.record;
    std::string numerator, denominator_log2;
    if (rec.exact) {
      numerator = rec.exact->numerator.to_string();
      denominator_log2 = std::to_string(rec.exact->denominator_log2);
    }
    table.add_row({kSchemaVersion, std::to_string(rec.n), numerator, denominator_log2,
                   format_sig17(rec.float_value), mode_name(rec.mode)});
  }
  return table;
}

Table simulate_table(const RunConfig& config) {
  Table table;
  table.columns = {"schema_version", "n", "samples", "mean", "std_error", "seed"};
  for (const std::int64_t n : config.n_list) {
    const EstimateReport report =
        estimate_expectation(n, config.samples, *config.seed, config.workers);
    table.add_row({kSchemaVersion, std::to_string(report.n),
                   std::to_string(report.samples), format_sig17(report.mean),
                   format_sig17(report.std_error), std::to_string(report.seed)});
  }
  return table;
}

Table asymptote_table(const RunConfig& config) {
  Table table;
  table.columns = {"schema_version", "n", "log2_n", "g_of_log2n", "asymptote"};
  for (const std::int64_t n : config.n_list) {
    if (n < 2) {
      table.add_row({kSchemaVersion, std::to_string(n), kSmallNFlag, kSmallNFlag,
                     kSmallNFlag});
      continue;
    }
    const double log2n = std::log2(static_cast<double>(n));
    const double g = eval_g(log2n).g_value;
    table.add_row({kSchemaVersion, std::to_string(n), format_sig17(log2n),
                   format_sig17(g), format_sig17(asymptotic_expectation(n))});
  }
  return table;
}

Table fourier_table(const RunConfig& config) {
  Table table;
  table.columns = {"schema_version", "k", "re", "im", "abs", "two_abs"};
  for (std::int64_t k = 1; k <= config.k_max; ++k) {
    const FourierCoefficient coeff = fourier_coefficient(static_cast<int>(k));
    const double magnitude = std::abs(coeff.value);
    table.add_row({kSchemaVersion, std::to_string(k), format_sig17(coeff.value.real()),
                   format_sig17(coeff.value.imag()), format_sig17(magnitude),
                   format_sig17(2.0 * magnitude)});
  }
  return table;
}

Table gtable_table(const RunConfig& config) {
  Table table;
  table.columns = {"schema_version", "x", "g", "h", "g_fourier", "error_bound"};
  SeriesConfig cfg;
  cfg.tolerance = config.tolerance;
  for (std::int64_t i = 0; i < config.grid_points; ++i) {
    const double x = static_cast<double>(i) / static_cast<double>(config.grid_points);
    const PeriodicEval eval = eval_g(x, cfg);
    const double recon = eval_g_fourier(x, static_cast<int>(config.harmonics));
    table.add_row({kSchemaVersion, format_sig17(x), format_sig17(eval.g_value),
                   format_sig17(eval.h_value), format_sig17(recon),
                   format_sig17(eval.error_bound)});
  }
  return table;
}

Table compare_table(const RunConfig& config) {
  Table table;
  table.columns = {"schema_version", "n",         "exact_value",
                   "mc_mean",        "mc_stderr", "asymptote",
                   "residual_exact_vs_asymptote", "bracket_low",
                   "bracket_high"};
  const auto rows =
      compare(config.n_list, config.samples, config.seed, config.bigint_cap,
              config.workers);
  bool any_ok = false;
  for (const CompareRow& row : rows) {
    if (row.flag.rfind("error:", 0) == 0) {
      table.add_row({kSchemaVersion, std::to_string(row.n), row.flag, "", "", "", "",
                     "", ""});
      continue;
    }
    any_ok = true;
    const auto opt = [](const std::optional<double>& v) {
      return v ? format_sig17(*v) : std::string();
    };
    std::string asym = row.asymptote ? format_sig17(*row.asymptote) : row.flag;
    std::string residual = row.residual ? format_sig17(*row.residual) : row.flag;
    if (row.asymptote) {
      // The residual column must always restate exact - asymptote.
      const double recomputed = row.exact_value - *row.asymptote;
      if (format_sig17(recomputed) != format_sig17(*row.residual))
        throw InvariantError("compare row residual does not match exact - asymptote");
    }
    table.add_row({kSchemaVersion, std::to_string(row.n),
                   format_sig17(row.exact_value), opt(row.mc_mean), opt(row.mc_stderr),
                   asym, residual,
                   row.bracket_low ? format_sig17(*row.bracket_low) : row.flag,
                   row.bracket_high ? format_sig17(*row.bracket_high) : row.flag});
  }
  if (!any_ok) throw std::invalid_argument("compare: no valid rows");
  return table;
}

Table tau_tail_table(const RunConfig& config) {
  Table table;
  table.columns = {"schema_version", "n", "t", "empirical", "bound"};
  const std::int64_t n = *config.tau_n;
  std::vector<double> thresholds = config.t_list;
  if (thresholds.empty()) {
    const double root = std::sqrt(static_cast<double>(n));
    thresholds = {0.5 * root, root, 1.5 * root, 2.0 * root};
  }
  const std::int64_t samples = config.samples > 0 ? config.samples : 100'000;
  for (const double t : thresholds) {
    const TailCheckReport report = tau_tail_check(n, t, samples, *config.seed);
    table.add_row({kSchemaVersion, std::to_string(report.n),
                   format_sig17(report.threshold), format_sig17(report.empirical),
                   format_sig17(report.bound)});
  }
  return table;
}

Table bounds_check_table(const RunConfig& config) {
  if (config.tau_n) return tau_tail_table(config);
  Table table;
  table.columns = {"schema_version",  "trials",          "seed",
                   "lower_failures",  "upper_failures",  "higher_order_failures",
                   "all_pass"};
  Xoshiro256pp gen(*config.seed);
  std::int64_t lower = 0, upper = 0, higher = 0;
  for (std::int64_t i = 0; i < config.trials; ++i) {
    const SandwichVerdict verdict = check_sandwich_bounds(random_bound_triple(gen));
    lower += verdict.lower_ok ? 0 : 1;
    upper += verdict.upper_ok ? 0 : 1;
    higher += verdict.higher_order_ok ? 0 : 1;
  }
  const bool all_pass = lower == 0 && upper == 0 && higher == 0;
  table.add_row({kSchemaVersion, std::to_string(config.trials),
                 std::to_string(*config.seed), std::to_string(lower),
                 std::to_string(upper), std::to_string(higher),
                 all_pass ? "true" : "false"});
  return table;
}

}  // namespace

void validate(const RunConfig& config) {
  if (!(config.tolerance > 0.0) || !std::isfinite(config.tolerance))
    throw std::invalid_argument("tolerance must be positive and finite");
  if (config.workers < 1) throw std::invalid_argument("workers must be >= 1");
  if (config.samples < 0) throw std::invalid_argument("samples must be >= 0");

  const bool needs_n = config.command == Command::enumerate ||
                       config.command == Command::exact ||
                       config.command == Command::simulate ||
                       config.command == Command::asymptote ||
                       config.command == Command::compare;
  if (needs_n && config.n_list.empty())
    throw std::invalid_argument("this command needs --n or --n-list");
  if (config.command == Command::enumerate && config.n_list.size() != 1)
    throw std::invalid_argument("enumerate takes exactly one n");

  if (config.command == Command::simulate) {
    if (config.samples < 1) throw std::invalid_argument("simulate needs --samples >= 1");
    if (!config.seed) throw std::invalid_argument("simulate needs an explicit --seed");
  }
  if (config.command == Command::compare && config.samples > 0 && !config.seed)
    throw std::invalid_argument("compare with samples > 0 needs an explicit --seed");
  if (config.command == Command::bounds_check && !config.seed)
    throw std::invalid_argument("bounds-check needs an explicit --seed");
  if (config.command == Command::fourier && config.k_max < 1)
    throw std::invalid_argument("fourier needs --k-max >= 1");
  if (config.command == Command::gtable &&
      (config.grid_points < 1 || config.harmonics < 1))
    throw std::invalid_argument("gtable needs --points >= 1 and --harmonics >= 1");
  if (config.command == Command::bounds_check && config.trials < 1)
    throw std::invalid_argument("bounds-check needs --trials >= 1");
  if (config.command == Command::bounds_check && config.tau_n) {
    if (*config.tau_n < 2)
      throw std::invalid_argument("the tau tail check needs --tau-n >= 2");
    for (const double t : config.t_list)
      if (!(t >= 0.0)) throw std::invalid_argument("tau thresholds must be >= 0");
  }
  if (config.command == Command::compare && config.samples < 0)
    throw std::invalid_argument("samples must be >= 0");
}

std::vector<CompareRow> compare(std::span<const std::int64_t> n_list,
                                std::int64_t samples,
                                std::optional<std::uint64_t> seed,
                                std::int64_t bigint_cap, int workers) {
  if (n_list.empty()) throw std::invalid_argument("compare needs a nonempty n list");
  if (samples > 0 && !seed)
    throw std::invalid_argument("compare with samples > 0 needs a seed");

  std::vector<std::int64_t> sorted(n_list.begin(), n_list.end());
  std::sort(sorted.begin(), sorted.end());

  std::vector<CompareRow> rows;
  rows.reserve(sorted.size());
  for (const std::int64_t n : sorted) {
    CompareRow row;
    row.n = n;
    try {
      const ExactExpectationRecord record = exact_expectation(n, bigint_cap);
      row.exact_value = record.float_value;
      row.exact_mode = record.mode;
    } catch (const ResourceLimitError&) {
      throw;  // resource guards abort the run with exit code 3
    } catch (const std::exception& e) {
      row.flag = std::string("error: ") + e.what();
      rows.push_back(std::move(row));
      continue;
    }
    if (samples > 0) {
      const EstimateReport estimate = estimate_expectation(n, samples, *seed, workers);
      row.mc_mean = estimate.mean;
      row.mc_stderr = estimate.std_error;
    }
    if (n >= 2) {
      row.asymptote = asymptotic_expectation(n);
      row.residual = row.exact_value - *row.asymptote;
      const ExpectationBracket bracket = expectation_bracket(n);
      row.bracket_low = bracket.bracket_low;
      row.bracket_high = bracket.bracket_high;
    } else {
      row.flag = kSmallNFlag;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Table build_table(const RunConfig& config) {
  switch (config.command) {
    case Command::enumerate: return enumerate_table(config);
    case Command::exact: return exact_table(config);
    case Command::simulate: return simulate_table(config);
    case Command::asymptote: return asymptote_table(config);
    case Command::fourier: return fourier_table(config);
    case Command::gtable: return gtable_table(config);
    case Command::compare: return compare_table(config);
    case Command::bounds_check: return bounds_check_table(config);
  }
  throw std::invalid_argument("unknown command");
}

int run(const RunConfig& config) {
  validate(config);
  const Table table = build_table(config);

  std::ostringstream buffer;
  if (config.format == OutputFormat::csv) {
    write_csv(table, buffer);
  } else {
    write_json(table, buffer);
  }

  if (config.out_path) {
    std::ofstream file(*config.out_path, std::ios::binary);
    if (!file) throw std::invalid_argument("cannot open output path " + *config.out_path);
    file << buffer.str();
  } else {
    std::cout << buffer.str();
  }
  return 0;
}

namespace {

struct CliState {
  RunConfig config;
  std::optional<std::int64_t> n_single;
  std::vector<std::int64_t> n_multi;
  std::string format_name = "csv";
  std::string out_path;
};

void attach_common(CLI::App* sub, CliState& state) {
  sub->add_option("--n", state.n_single, "single target integer n");
  sub->add_option("--n-list", state.n_multi, "comma-separated list of n")
      ->delimiter(',');
  sub->add_option("--samples", state.config.samples, "Monte Carlo sample count");
  sub->add_option("--seed", state.config.seed, "64-bit generator seed");
  sub->add_option("--tolerance", state.config.tolerance,
                  "series truncation tolerance");
  sub->add_option("--format", state.format_name, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--out", state.out_path, "output file (default: stdout)");
  sub->add_option("--workers", state.config.workers,
                  "worker threads for sampling (results are identical for any count)");
}

void build_app(CLI::App& app, CliState& state) {
  app.require_subcommand(1);

  auto* enumerate = app.add_subcommand("enumerate", "list all compositions of n");
  enumerate->add_option("--cap", state.config.enumeration_cap, "enumeration guard");
  enumerate->callback([&] { state.config.command = Command::enumerate; });

  auto* exact = app.add_subcommand("exact", "exact expected distinct part sizes");
  exact->add_option("--bigint-cap", state.config.bigint_cap,
                    "largest n computed with exact big integers");
  exact->callback([&] { state.config.command = Command::exact; });

  auto* simulate =
      app.add_subcommand("simulate", "Monte Carlo estimate over random compositions");
  simulate->callback([&] { state.config.command = Command::simulate; });

  auto* asymptote =
      app.add_subcommand("asymptote", "log2 n + gamma/ln2 - 3/2 + g(log2 n)");
  asymptote->callback([&] { state.config.command = Command::asymptote; });

  auto* fourier = app.add_subcommand("fourier", "Fourier coefficients of g");
  fourier->add_option("--k-max", state.config.k_max, "largest harmonic index");
  fourier->callback([&] { state.config.command = Command::fourier; });

  auto* gtable = app.add_subcommand("gtable", "grid table of g, h and the "
                                              "Fourier reconstruction");
  gtable->add_option("--points", state.config.grid_points, "grid resolution");
  gtable->add_option("--harmonics", state.config.harmonics,
                     "harmonics in the reconstruction column");
  gtable->callback([&] { state.config.command = Command::gtable; });

  auto* cmp = app.add_subcommand("compare",
                                 "exact vs Monte Carlo vs asymptote, with brackets");
  cmp->add_option("--bigint-cap", state.config.bigint_cap,
                  "largest n computed with exact big integers");
  cmp->callback([&] { state.config.command = Command::compare; });

  auto* bounds = app.add_subcommand(
      "bounds-check", "check the exponential sandwich bounds, or the tau "
                      "tail bound with --tau-n");
  bounds->add_option("--trials", state.config.trials, "number of random triples");
  bounds->add_option("--tau-n", state.config.tau_n,
                     "check the stopping-time tail bound at this n instead");
  bounds->add_option("--t-list", state.config.t_list,
                     "comma-separated tail thresholds (default: multiples of sqrt n)")
      ->delimiter(',');
  bounds->callback([&] { state.config.command = Command::bounds_check; });

  for (auto* sub : {enumerate, exact, simulate, asymptote, fourier, gtable, cmp, bounds})
    attach_common(sub, state);
}

RunConfig finish_config(CliState& state) {
  if (state.n_single) state.config.n_list.push_back(*state.n_single);
  state.config.n_list.insert(state.config.n_list.end(), state.n_multi.begin(),
                             state.n_multi.end());
  state.config.format =
      state.format_name == "json" ? OutputFormat::json : OutputFormat::csv;
  if (!state.out_path.empty()) state.config.out_path = state.out_path;
  return std::move(state.config);
}

}  // namespace

RunConfig parse_command_line(const std::vector<std::string>& args) {
  CliState state;
  CLI::App app{"distinct part sizes in random integer compositions"};
  build_app(app, state);
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("compdist");
  for (const auto& arg : args) argv.push_back(arg.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    throw std::invalid_argument(e.what());
  }
  return finish_config(state);
}

int cli_main(int argc, char** argv) {
  CliState state;
  CLI::App app{"distinct part sizes in random integer compositions"};
  build_app(app, state);
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // prints help, exits 0
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  try {
    return run(finish_config(state));
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return 3;
  } catch (const InvariantError& e) {
    std::cerr << "internal invariant failure: " << e.what() << '\n';
    return 4;
  } catch (const std::invalid_argument& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 4;
  }
}

}  // namespace compdist
