#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "copsim/cop.hpp"
#include "copsim/pcm.hpp"

namespace copsim {

/// Monte Carlo grid description. The grid spans every matrix order in
/// [n_min, n_max], gamma_levels disturbance levels evenly placed in the open
/// interval (1, 4), and matrices_per_cell replicates per (order, level).
struct ExperimentConfig {
  int n_min = 3;
  int n_max = 9;
  int gamma_levels = 300;
  int matrices_per_cell = 100;
  DeltaScheme delta_scheme = DeltaScheme::uniform;
  std::uint64_t master_seed = 0;
  double ev_tol = 1e-12;
  int ev_max_iter = 10000;
  double ki_bin_width = 0.05;
  bool force_theorem2 = false;  // compute theorem-2 counts for n >= 8 too

  void validate() const;  // throws Error{invalid_config}
  long total_matrices() const;
};

/// Disturbance level k of `levels`: gamma_k = 1 + 3k/(levels+1), k = 1..levels.
double gamma_level(int index, int levels);

inline constexpr long kTheorem2Skipped = -1;

struct MatrixRecord {
  int n = 0;
  int gamma_index = 0;  // 1-based level index
  double gamma = 0.0;
  int replicate = 0;    // 0-based within the cell
  std::uint64_t seed = 0;
  double lambda_max = 0.0;
  double ci = 0.0;
  double ki = 0.0;
  long pop_applicable = 0;
  long pop_satisfied_ev = 0;
  long pop_satisfied_gm = 0;
  long poip_applicable = 0;
  long poip_satisfied_ev = 0;
  long poip_satisfied_gm = 0;
  long th1_guaranteed = 0;
  long th2_guaranteed = kTheorem2Skipped;
};

struct ExperimentResult {
  std::vector<MatrixRecord> records;        // canonical (n, level, replicate) order
  std::vector<std::uint64_t> failed_seeds;  // EV non-convergence; expected empty
};

/// Evaluates the single simulation cell (n, gamma_index, replicate). Pure:
/// everything is derived from the child seed, so any worker produces the
/// identical record.
MatrixRecord simulate_cell(int n, int gamma_index, int replicate,
                           const ExperimentConfig& config);

/// Runs the whole grid. threads = 0 picks hardware concurrency; the record
/// stream is identical for every thread count.
ExperimentResult run_experiment(
    const ExperimentConfig& config, int threads = 0,
    const std::function<void(long done, long total)>& progress = nullptr);

/// One row of the bucketed summary; percentages are means over matrices.
///
/// POP percentages use the applicable-pairs denominator. POIP percentages
/// are reported twice: `poip_*` treats a condition with a false antecedent
/// as satisfied (share of all (n^2-n)(n^2-n-2) individual conditions not
/// violated) and `poip_applicable_*` divides by applicable conditions only.
/// Theorem percentages divide guaranteed counts by applicable counts.
/// `pooled_*` columns divide bucket-wide satisfied sums by applicable sums
/// instead of averaging per-matrix percentages. Absent statistics (empty
/// bucket, or theorem 2 skipped) are NaN.
struct AggregateRow {
  int n = 0;
  bool high_ci = false;  // false: CI < 0.10, true: CI >= 0.10
  long matrix_count = 0;
  double pop_ev = 0.0;
  double pop_gm = 0.0;
  double poip_ev = 0.0;
  double poip_gm = 0.0;
  double poip_applicable_ev = 0.0;
  double poip_applicable_gm = 0.0;
  double th1_pct = 0.0;
  double th2_pct = 0.0;
  double pooled_pop_ev = 0.0;
  double pooled_pop_gm = 0.0;
  double pooled_poip_ev = 0.0;
  double pooled_poip_gm = 0.0;
};

/// Buckets records by (n, CI < 0.10) and averages per-matrix percentages;
/// matrices with a zero denominator are skipped for that statistic. Rows
/// come out ordered by n with the low-CI bucket first. Buckets with no
/// matrices yield matrix_count = 0 and NaN percentages.
std::vector<AggregateRow> aggregate_tables(std::span<const MatrixRecord> records);

struct KiBinPoint {
  double center = 0.0;
  long matrix_count = 0;
  double mean_pop_violations = 0.0;
  double mean_poip_violations = 0.0;
  double mean_th1_guaranteed = 0.0;
  double mean_th2_guaranteed = 0.0;  // NaN when no record in the bin has it
};

struct KiSeries {
  int n = 0;
  Method method = Method::ev;
  std::vector<KiBinPoint> points;  // empty bins omitted, ascending centers
};

/// Groups records into KI bins [k*w, (k+1)*w) and emits per-(n, method)
/// series of mean violation and guarantee counts, the data behind the
/// violation-versus-inconsistency figures.
std::vector<KiSeries> bin_by_ki(std::span<const MatrixRecord> records,
                                double bin_width);

}  // namespace copsim
