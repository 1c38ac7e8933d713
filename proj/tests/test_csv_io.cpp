#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "copsim/csv_io.hpp"
#include "copsim/errors.hpp"
#include "copsim/simulator.hpp"

namespace fs = std::filesystem;

using copsim::ExperimentConfig;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("copsim_test_" + std::to_string(std::rand()));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  return std::string(std::istreambuf_iterator<char>(in), {});
}

}  // namespace

TEST_CASE("csv: format_double round-trips bit exactly") {
  copsim::Rng rng(8);
  for (int trial = 0; trial < 2000; ++trial) {
    const double value = std::exp(rng.uniform(-30.0, 30.0)) *
                         (trial % 2 == 0 ? 1.0 : -1.0);
    const std::string text = copsim::format_double(value);
    CHECK(std::stod(text) == value);
  }
  CHECK(copsim::format_double(1.0) == "1");
  CHECK(copsim::format_double(0.5) == "0.5");
}

TEST_CASE("csv: matrix text parsing accepts comments and commas") {
  const copsim::PCMatrix m = copsim::parse_matrix_text(
      "# a 3x3 example\n"
      "1, 2, 8\n"
      "0.5 1 2   # inline comment\n"
      "0.125\t0.5\t1\n");
  CHECK(m.order() == 3);
  CHECK(m(0, 2) == 8.0);
}

TEST_CASE("csv: matrix text errors are named") {
  CHECK_THROWS_WITH_AS(copsim::parse_matrix_text("1 2\nx 1\n"),
                       doctest::Contains("ParseError"), copsim::Error);
  CHECK_THROWS_WITH_AS(copsim::parse_matrix_text("# only comments\n"),
                       doctest::Contains("ParseError"), copsim::Error);
  CHECK_THROWS_WITH_AS(
      copsim::parse_matrix_text("1 2 8\n0.51 1 2\n0.125 0.5 1\n"),
      doctest::Contains("ReciprocityViolation"), copsim::Error);
}

TEST_CASE("csv: records round-trip and re-aggregate identically") {
  TempDir dir;
  ExperimentConfig config;
  config.n_min = 3;
  config.n_max = 5;
  config.gamma_levels = 4;
  config.matrices_per_cell = 5;
  config.master_seed = 2024;
  const auto result = copsim::run_experiment(config, 2);
  const fs::path file = dir.path / "records.csv";
  copsim::write_records_csv(file, result.records);

  const auto again = copsim::read_records_csv(file);
  REQUIRE(again.size() == result.records.size());
  for (std::size_t i = 0; i < again.size(); ++i) {
    CHECK(again[i].seed == result.records[i].seed);
    CHECK(again[i].lambda_max == result.records[i].lambda_max);
    CHECK(again[i].ci == result.records[i].ci);
    CHECK(again[i].ki == result.records[i].ki);
  }

  const auto rows = copsim::aggregate_tables(result.records);
  const auto rows_again = copsim::aggregate_tables(again);
  REQUIRE(rows.size() == rows_again.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].matrix_count == rows_again[i].matrix_count);
    // exact: the re-parsed doubles are bit-identical
    CHECK((std::isnan(rows[i].pop_ev) ||
           rows[i].pop_ev == rows_again[i].pop_ev));
    CHECK((std::isnan(rows[i].poip_ev) ||
           rows[i].poip_ev == rows_again[i].poip_ev));
    CHECK((std::isnan(rows[i].th1_pct) ||
           rows[i].th1_pct == rows_again[i].th1_pct));
  }

  const fs::path file2 = dir.path / "records2.csv";
  copsim::write_records_csv(file2, again);
  CHECK(slurp(file) == slurp(file2));

  copsim::write_tables_csv(dir.path / "tables.csv", rows);
  copsim::write_tables_csv(dir.path / "tables2.csv", rows_again);
  CHECK(slurp(dir.path / "tables.csv") == slurp(dir.path / "tables2.csv"));
}

TEST_CASE("csv: th2 sentinel serializes as an empty field") {
  ExperimentConfig config;
  config.n_min = 8;
  config.n_max = 8;
  config.gamma_levels = 1;
  config.matrices_per_cell = 1;
  TempDir dir;
  const auto result = copsim::run_experiment(config, 1);
  const fs::path file = dir.path / "records.csv";
  copsim::write_records_csv(file, result.records);
  const std::string text = slurp(file);
  CHECK(text.find(",\n") != std::string::npos);  // trailing empty th2 field
  const auto again = copsim::read_records_csv(file);
  CHECK(again[0].th2_guaranteed == copsim::kTheorem2Skipped);
}

TEST_CASE("csv: writers are atomic, no temp files left behind") {
  TempDir dir;
  ExperimentConfig config;
  config.n_min = config.n_max = 3;
  config.gamma_levels = 1;
  config.matrices_per_cell = 2;
  const auto result = copsim::run_experiment(config, 1);
  const auto rows = copsim::aggregate_tables(result.records);
  const auto series = copsim::bin_by_ki(result.records, 0.05);
  copsim::write_records_csv(dir.path / "records.csv", result.records);
  copsim::write_tables_csv(dir.path / "tables.csv", rows);
  copsim::write_figures_csv(dir.path / "figures.csv", series);
  copsim::write_summary_text(dir.path / "summary.txt", config, rows, 0);
  int files = 0;
  for (const auto& entry : fs::directory_iterator(dir.path)) {
    CHECK(entry.path().extension() != ".tmp");
    ++files;
  }
  CHECK(files == 4);
  CHECK(slurp(dir.path / "summary.txt").find("ref") != std::string::npos);
}

TEST_CASE("csv: tables and figures carry the expected headers") {
  TempDir dir;
  ExperimentConfig config;
  config.n_min = config.n_max = 4;
  config.gamma_levels = 2;
  config.matrices_per_cell = 3;
  config.master_seed = 77;
  const auto result = copsim::run_experiment(config, 1);
  const auto rows = copsim::aggregate_tables(result.records);
  const auto series = copsim::bin_by_ki(result.records, 0.1);
  copsim::write_tables_csv(dir.path / "tables.csv", rows);
  copsim::write_figures_csv(dir.path / "figures.csv", series);
  CHECK(slurp(dir.path / "tables.csv")
            .starts_with("n,ci_bucket,matrix_count,pop_ev,pop_gm,poip_ev"));
  CHECK(slurp(dir.path / "figures.csv")
            .starts_with("n,method,ki_bin_center,matrix_count"));
  CHECK_THROWS_AS(copsim::read_records_csv(dir.path / "missing.csv"),
                  copsim::Error);
}
