#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "copsim/pcm.hpp"
#include "copsim/simulator.hpp"

namespace copsim {

/// Shortest round-trip decimal form of a double (std::to_chars); parsing the
/// result recovers the exact bit pattern.
std::string format_double(double value);

/// Matrix file format accepted by the single-matrix audit: one row per line,
/// entries separated by whitespace or commas, '#' starts a comment. Throws
/// Error{parse_error} on malformed input and the PCMatrix validation errors
/// on invalid matrices.
PCMatrix read_matrix_file(const std::filesystem::path& path);
PCMatrix parse_matrix_text(const std::string& text);

// records.csv: one row per matrix, header
// n,gamma,replicate,seed,lambda_max,ci,ki,pop_app,pop_sat_ev,pop_sat_gm,
// poip_app,poip_sat_ev,poip_sat_gm,th1,th2
// th2 is empty when its computation was skipped.
void write_records_csv(const std::filesystem::path& path,
                       std::span<const MatrixRecord> records);
std::vector<MatrixRecord> read_records_csv(const std::filesystem::path& path);

void write_tables_csv(const std::filesystem::path& path,
                      std::span<const AggregateRow> rows);

void write_figures_csv(const std::filesystem::path& path,
                       std::span<const KiSeries> series);

void write_summary_text(const std::filesystem::path& path,
                        const ExperimentConfig& config,
                        std::span<const AggregateRow> rows,
                        std::size_t failed_count);

}  // namespace copsim
