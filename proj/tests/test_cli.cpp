#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "compdist/cli.hpp"
#include "compdist/errors.hpp"
#include "compdist/rng.hpp"

using namespace compdist;

namespace {

std::string render_csv(const Table& table) {
  std::ostringstream out;
  write_csv(table, out);
  return out.str();
}

std::string render_json(const Table& table) {
  std::ostringstream out;
  write_json(table, out);
  return out.str();
}

}  // namespace

TEST_CASE("17-significant-digit formatting round-trips doubles exactly") {
  CHECK(format_sig17(1.625) == "1.625");
  CHECK(format_sig17(0.0) == "0");
  Xoshiro256pp gen(8);
  for (int i = 0; i < 2000; ++i) {
    double value = std::ldexp(gen.uniform01() + 0.5,
                              static_cast<int>(gen.next() % 60) - 30);
    if (gen.next() & 1) value = -value;
    const std::string text = format_sig17(value);
    CHECK(std::stod(text) == value);
  }
}

TEST_CASE("command line parsing") {
  const RunConfig exact = parse_command_line({"exact", "--n", "4"});
  CHECK(exact.command == Command::exact);
  CHECK(exact.n_list == std::vector<std::int64_t>{4});

  const RunConfig lists =
      parse_command_line({"compare", "--n-list", "4,16,64", "--samples", "100",
                          "--seed", "7", "--format", "json"});
  CHECK(lists.command == Command::compare);
  CHECK(lists.n_list == std::vector<std::int64_t>{4, 16, 64});
  CHECK(lists.samples == 100);
  REQUIRE(lists.seed.has_value());
  CHECK(*lists.seed == 7);
  CHECK(lists.format == OutputFormat::json);

  const RunConfig sim = parse_command_line(
      {"simulate", "--n", "100", "--samples", "5000", "--seed", "12345",
       "--out", "/tmp/x.csv"});
  CHECK(sim.command == Command::simulate);
  REQUIRE(sim.out_path.has_value());
  CHECK(*sim.out_path == "/tmp/x.csv");

  CHECK(parse_command_line({"fourier", "--k-max", "2"}).k_max == 2);
  CHECK(parse_command_line({"gtable", "--points", "64"}).grid_points == 64);
  CHECK(parse_command_line({"bounds-check", "--trials", "50", "--seed", "1"}).trials ==
        50);

  CHECK_THROWS_AS(parse_command_line({"exact", "--bogus"}), std::invalid_argument);
  CHECK_THROWS_AS(parse_command_line({}), std::invalid_argument);
  CHECK_THROWS_AS(parse_command_line({"exact", "--format", "xml"}),
                  std::invalid_argument);
}

TEST_CASE("configuration validation") {
  RunConfig config;
  config.command = Command::simulate;
  config.n_list = {10};
  config.samples = 100;
  CHECK_THROWS_AS(validate(config), std::invalid_argument);  // no seed
  config.seed = 1;
  CHECK_NOTHROW(validate(config));

  config.command = Command::exact;
  config.n_list.clear();
  CHECK_THROWS_AS(validate(config), std::invalid_argument);  // no n

  config.command = Command::enumerate;
  config.n_list = {3, 4};
  CHECK_THROWS_AS(validate(config), std::invalid_argument);  // one n only

  config.command = Command::compare;
  config.n_list = {4};
  config.samples = 10;
  config.seed.reset();
  CHECK_THROWS_AS(validate(config), std::invalid_argument);  // MC needs a seed
  config.samples = 0;
  CHECK_NOTHROW(validate(config));
}

TEST_CASE("exact table golden output") {
  RunConfig config;
  config.command = Command::exact;
  config.n_list = {4};
  const Table table = build_table(config);
  CHECK(render_csv(table) ==
        "schema_version,n,numerator,denominator_log2,float_value,mode\n"
        "1,4,13,3,1.625,bigint\n");
}

TEST_CASE("exact table flags bad entries without aborting the batch") {
  RunConfig config;
  config.command = Command::exact;
  config.n_list = {-3, 4};
  const Table table = build_table(config);
  REQUIRE(table.rows.size() == 2);
  CHECK(table.rows[0][5].rfind("error:", 0) == 0);
  CHECK(table.rows[1][4] == "1.625");
}

TEST_CASE("enumerate table lists the four compositions of 3") {
  RunConfig config;
  config.command = Command::enumerate;
  config.n_list = {3};
  const Table table = build_table(config);
  REQUIRE(table.rows.size() == 4);
  CHECK(table.rows[0][3] == "3");      // parts column
  CHECK(table.rows[1][3] == "2+1");
  CHECK(table.rows[2][3] == "1+2");
  CHECK(table.rows[3][3] == "1+1+1");
  CHECK(table.rows[2][5] == "2");      // distinct sizes of (1,2)
}

TEST_CASE("CSV and JSON renderings carry identical values") {
  RunConfig config;
  config.command = Command::gtable;
  config.grid_points = 16;
  const Table table = build_table(config);

  const std::string csv = render_csv(table);
  const auto parsed = nlohmann::json::parse(render_json(table));
  REQUIRE(parsed.is_array());
  REQUIRE(parsed.size() == table.rows.size());

  // reparse the CSV body and compare cell by cell
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);  // header
  std::size_t row_index = 0;
  while (std::getline(lines, line)) {
    std::istringstream cells(line);
    std::string cell;
    std::size_t col_index = 0;
    while (std::getline(cells, cell, ',')) {
      CHECK(parsed[row_index][table.columns[col_index]].get<std::string>() == cell);
      ++col_index;
    }
    CHECK(col_index == table.columns.size());
    ++row_index;
  }
  CHECK(row_index == table.rows.size());
}

TEST_CASE("output is byte-identical across repeated runs") {
  RunConfig config;
  config.command = Command::compare;
  config.n_list = {4, 16};
  config.samples = 2000;
  config.seed = 77;
  const std::string first = render_csv(build_table(config));
  const std::string second = render_csv(build_table(config));
  CHECK(first == second);
  CHECK_FALSE(first.empty());

  config.workers = 3;
  CHECK(render_csv(build_table(config)) == first);
}

TEST_CASE("compare rows") {
  const std::vector<std::int64_t> ns = {4, 1};
  const auto rows = compare(ns, 0, std::nullopt);
  REQUIRE(rows.size() == 2);
  // sorted by n
  CHECK(rows[0].n == 1);
  CHECK(rows[0].exact_value == 1.0);
  CHECK(rows[0].flag == "n<2 unsupported");
  CHECK_FALSE(rows[0].asymptote.has_value());

  CHECK(rows[1].n == 4);
  CHECK(rows[1].exact_value == 1.625);
  REQUIRE(rows[1].asymptote.has_value());
  // log2 4 + gamma/ln2 - 3/2 + g(0) = 2 - 0.66725... + g(0)
  CHECK(*rows[1].asymptote == doctest::Approx(1.3327474).epsilon(1e-6));
  CHECK(*rows[1].residual == rows[1].exact_value - *rows[1].asymptote);
  CHECK(*rows[1].bracket_low <= *rows[1].bracket_high);

  CHECK_THROWS_AS(compare({}, 0, std::nullopt), std::invalid_argument);
}

TEST_CASE("compare with samples attaches Monte Carlo columns") {
  const std::vector<std::int64_t> ns = {16};
  const auto rows = compare(ns, 20'000, std::uint64_t{5});
  REQUIRE(rows.size() == 1);
  REQUIRE(rows[0].mc_mean.has_value());
  REQUIRE(rows[0].mc_stderr.has_value());
  CHECK(std::abs(*rows[0].mc_mean - rows[0].exact_value) <= 5.0 * *rows[0].mc_stderr);
}

TEST_CASE("bounds-check table reports a clean sweep") {
  RunConfig config;
  config.command = Command::bounds_check;
  config.trials = 500;
  config.seed = 99;
  const Table table = build_table(config);
  REQUIRE(table.rows.size() == 1);
  CHECK(table.rows[0][3] == "0");
  CHECK(table.rows[0][4] == "0");
  CHECK(table.rows[0][5] == "0");
  CHECK(table.rows[0][6] == "true");
}

TEST_CASE("bounds-check emits tau tail rows when asked") {
  RunConfig config;
  config.command = Command::bounds_check;
  config.tau_n = 101;
  config.t_list = {0.0, 10.0};
  config.samples = 5000;
  config.seed = 4;
  CHECK_NOTHROW(validate(config));
  const Table table = build_table(config);
  CHECK(table.columns ==
        std::vector<std::string>{"schema_version", "n", "t", "empirical", "bound"});
  REQUIRE(table.rows.size() == 2);
  CHECK(table.rows[0][4] == "2");  // t = 0 makes the bound vacuous
  CHECK(std::stod(table.rows[0][3]) <= 1.0);
  CHECK(std::stod(table.rows[1][4]) ==
        doctest::Approx(0.2706705664732254).epsilon(1e-15));
  CHECK(std::stod(table.rows[1][3]) <= std::stod(table.rows[1][4]) + 0.05);

  config.tau_n = 1;
  CHECK_THROWS_AS(validate(config), std::invalid_argument);
}

TEST_CASE("fourier table carries the first-harmonic magnitude") {
  RunConfig config;
  config.command = Command::fourier;
  config.k_max = 2;
  const Table table = build_table(config);
  REQUIRE(table.rows.size() == 2);
  CHECK(std::abs(std::stod(table.rows[0][5]) - 0.00000157316) <= 1e-11);
  CHECK(std::stod(table.rows[1][5]) < 1e-12);
}

TEST_CASE("compare residual shrinks from n = 64 to n = 4096") {
  const std::vector<std::int64_t> ns = {64, 4096};
  const auto rows = compare(ns, 0, std::nullopt);
  REQUIRE(rows.size() == 2);
  REQUIRE(rows[0].residual.has_value());
  REQUIRE(rows[1].residual.has_value());
  CHECK(std::abs(*rows[1].residual) < std::abs(*rows[0].residual));
}

TEST_CASE("run writes to a file when asked") {
  RunConfig config;
  config.command = Command::exact;
  config.n_list = {3};
  const std::string path = "/tmp/compdist_test_out.csv";
  config.out_path = path;
  CHECK(run(config) == 0);
  std::ifstream in(path);
  std::stringstream content;
  content << in.rdbuf();
  CHECK(content.str() ==
        "schema_version,n,numerator,denominator_log2,float_value,mode\n"
        "1,3,6,2,1.5,bigint\n");
  std::remove(path.c_str());
}

TEST_CASE("exit codes for failure classes") {
  // configuration error: simulate without a seed
  {
    std::vector<std::string> words = {"compdist", "simulate", "--n", "10",
                                      "--samples", "10"};
    std::vector<char*> argv;
    for (auto& w : words) argv.push_back(w.data());
    CHECK(cli_main(static_cast<int>(argv.size()), argv.data()) == 2);
  }
  // resource guard: enumeration far above the cap
  {
    std::vector<std::string> words = {"compdist", "enumerate", "--n", "60",
                                      "--out", "/tmp/compdist_never.csv"};
    std::vector<char*> argv;
    for (auto& w : words) argv.push_back(w.data());
    CHECK(cli_main(static_cast<int>(argv.size()), argv.data()) == 3);
  }
}
