#include "copsim/simulator.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "copsim/errors.hpp"
#include "copsim/inconsistency.hpp"
#include "copsim/priority.hpp"

namespace copsim {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

}  // namespace

void ExperimentConfig::validate() const {
  std::ostringstream problems;
  if (n_min < 3 || n_max > 9 || n_min > n_max) {
    problems << "matrix orders must satisfy 3 <= n_min <= n_max <= 9; ";
  }
  if (gamma_levels < 1) problems << "gamma_levels must be >= 1; ";
  if (matrices_per_cell < 1) problems << "matrices_per_cell must be >= 1; ";
  if (!(ev_tol > 0.0)) problems << "ev_tol must be > 0; ";
  if (ev_max_iter < 1) problems << "ev_max_iter must be >= 1; ";
  if (!(ki_bin_width > 0.0) || !(ki_bin_width < 1.0)) {
    problems << "ki_bin_width must lie in (0, 1); ";
  }
  const std::string text = problems.str();
  if (!text.empty()) throw Error(ErrorCode::invalid_config, text);
}

long ExperimentConfig::total_matrices() const {
  return static_cast<long>(n_max - n_min + 1) * gamma_levels * matrices_per_cell;
}

double gamma_level(int index, int levels) {
  return 1.0 + 3.0 * index / (levels + 1.0);
}

MatrixRecord simulate_cell(int n, int gamma_index, int replicate,
                           const ExperimentConfig& config) {
  MatrixRecord record;
  record.n = n;
  record.gamma_index = gamma_index;
  record.gamma = gamma_level(gamma_index, config.gamma_levels);
  record.replicate = replicate;
  record.seed = child_seed(config.master_seed, static_cast<std::uint64_t>(n),
                           static_cast<std::uint64_t>(gamma_index),
                           static_cast<std::uint64_t>(replicate));

  Rng rng(record.seed);
  auto [weights, consistent] = generate_consistent(n, rng);
  (void)weights;
  const DisturbanceSpec spec(record.gamma, config.delta_scheme);
  const PCMatrix matrix = perturb(consistent, spec, rng);

  const EigenResult eigen = ev_weights(matrix, config.ev_tol, config.ev_max_iter);
  const PriorityVector gm = gm_weights(matrix);
  record.lambda_max = eigen.lambda_max;
  record.ci = saaty_ci(eigen.lambda_max, n);
  record.ki = koczkodaj_ki(matrix);

  const bool with_th2 = config.force_theorem2 || n < 8;
  const CopReport cop =
      evaluate_cop(matrix, eigen.vector, gm, record.ki, with_th2);
  // theorem soundness is a hard invariant of every simulated record
  assert(cop.th1_guaranteed <= cop.pop_satisfied_ev);
  assert(cop.th1_guaranteed <= cop.pop_satisfied_gm);
  assert(!with_th2 || cop.th2_guaranteed <= cop.poip_satisfied_ev);
  assert(!with_th2 || cop.th2_guaranteed <= cop.poip_satisfied_gm);
  record.pop_applicable = cop.pop_applicable;
  record.pop_satisfied_ev = cop.pop_satisfied_ev;
  record.pop_satisfied_gm = cop.pop_satisfied_gm;
  record.poip_applicable = cop.poip_applicable;
  record.poip_satisfied_ev = cop.poip_satisfied_ev;
  record.poip_satisfied_gm = cop.poip_satisfied_gm;
  record.th1_guaranteed = cop.th1_guaranteed;
  record.th2_guaranteed = with_th2 ? cop.th2_guaranteed : kTheorem2Skipped;
  return record;
}

ExperimentResult run_experiment(
    const ExperimentConfig& config, int threads,
    const std::function<void(long done, long total)>& progress) {
  config.validate();

  const long total = config.total_matrices();
  const long per_n = static_cast<long>(config.gamma_levels) *
                     config.matrices_per_cell;

  ExperimentResult result;
  result.records.resize(total);
  std::vector<char> valid(total, 1);

  auto cell_of = [&](long flat) {
    const int n = config.n_min + static_cast<int>(flat / per_n);
    const long rest = flat % per_n;
    const int gamma_index = 1 + static_cast<int>(rest / config.matrices_per_cell);
    const int replicate = static_cast<int>(rest % config.matrices_per_cell);
    return std::tuple<int, int, int>{n, gamma_index, replicate};
  };

  int worker_count = threads;
  if (worker_count <= 0) {
    worker_count = static_cast<int>(std::thread::hardware_concurrency());
    if (worker_count <= 0) worker_count = 1;
  }
  worker_count = static_cast<int>(
      std::min<long>(worker_count, std::max<long>(total, 1)));

  std::atomic<long> next{0};
  std::atomic<long> done{0};
  std::mutex failure_mutex;

  auto worker = [&]() {
    while (true) {
      const long flat = next.fetch_add(1);
      if (flat >= total) return;
      const auto [n, gamma_index, replicate] = cell_of(flat);
      try {
        result.records[flat] = simulate_cell(n, gamma_index, replicate, config);
      } catch (const Error& err) {
        if (err.code() != ErrorCode::no_convergence) throw;
        valid[flat] = 0;
        const std::uint64_t seed =
            child_seed(config.master_seed, static_cast<std::uint64_t>(n),
                       static_cast<std::uint64_t>(gamma_index),
                       static_cast<std::uint64_t>(replicate));
        const std::scoped_lock lock(failure_mutex);
        result.failed_seeds.push_back(seed);
      }
      const long completed = done.fetch_add(1) + 1;
      if (progress && (completed % 4096 == 0 || completed == total)) {
        progress(completed, total);
      }
    }
  };

  if (worker_count == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(worker_count);
    for (int t = 0; t < worker_count; ++t) pool.emplace_back(worker);
    for (auto& thread : pool) thread.join();
  }

  if (!result.failed_seeds.empty()) {
    std::vector<MatrixRecord> kept;
    kept.reserve(total - static_cast<long>(result.failed_seeds.size()));
    for (long flat = 0; flat < total; ++flat) {
      if (valid[flat]) kept.push_back(result.records[flat]);
    }
    result.records = std::move(kept);
    std::sort(result.failed_seeds.begin(), result.failed_seeds.end());
  }
  return result;
}

std::vector<AggregateRow> aggregate_tables(std::span<const MatrixRecord> records) {
  struct Accumulator {
    long count = 0;
    // mean of per-matrix percentages; .first = sum, .second = contributing n
    std::pair<double, long> pop_ev, pop_gm, poip_uni_ev, poip_uni_gm,
        poip_app_ev, poip_app_gm, th1, th2;
    // pooled counts across the bucket
    long sum_pop_app = 0, sum_pop_ev = 0, sum_pop_gm = 0;
    long sum_poip_app = 0, sum_poip_ev = 0, sum_poip_gm = 0;

    static void add(std::pair<double, long>& acc, double value) {
      acc.first += value;
      acc.second += 1;
    }
    static double mean(const std::pair<double, long>& acc) {
      return acc.second > 0 ? acc.first / acc.second : kNan;
    }
    static double share(long num, long den) {
      return den > 0 ? 100.0 * num / den : kNan;
    }
  };

  std::map<std::pair<int, bool>, Accumulator> buckets;
  int n_min = std::numeric_limits<int>::max();
  int n_max = std::numeric_limits<int>::min();
  for (const MatrixRecord& r : records) {
    n_min = std::min(n_min, r.n);
    n_max = std::max(n_max, r.n);
    Accumulator& acc = buckets[{r.n, r.ci >= 0.10}];
    ++acc.count;
    acc.sum_pop_app += r.pop_applicable;
    acc.sum_pop_ev += r.pop_satisfied_ev;
    acc.sum_pop_gm += r.pop_satisfied_gm;
    acc.sum_poip_app += r.poip_applicable;
    acc.sum_poip_ev += r.poip_satisfied_ev;
    acc.sum_poip_gm += r.poip_satisfied_gm;
    if (r.pop_applicable > 0) {
      Accumulator::add(acc.pop_ev,
                       100.0 * r.pop_satisfied_ev / r.pop_applicable);
      Accumulator::add(acc.pop_gm,
                       100.0 * r.pop_satisfied_gm / r.pop_applicable);
      Accumulator::add(acc.th1, 100.0 * r.th1_guaranteed / r.pop_applicable);
    }
    const long universe = poip_condition_count(r.n);
    Accumulator::add(acc.poip_uni_ev,
                     100.0 * (1.0 - static_cast<double>(r.poip_applicable -
                                                        r.poip_satisfied_ev) /
                                        universe));
    Accumulator::add(acc.poip_uni_gm,
                     100.0 * (1.0 - static_cast<double>(r.poip_applicable -
                                                        r.poip_satisfied_gm) /
                                        universe));
    if (r.poip_applicable > 0) {
      Accumulator::add(acc.poip_app_ev,
                       100.0 * r.poip_satisfied_ev / r.poip_applicable);
      Accumulator::add(acc.poip_app_gm,
                       100.0 * r.poip_satisfied_gm / r.poip_applicable);
      if (r.th2_guaranteed != kTheorem2Skipped) {
        Accumulator::add(acc.th2,
                         100.0 * r.th2_guaranteed / r.poip_applicable);
      }
    }
  }

  std::vector<AggregateRow> rows;
  if (records.empty()) return rows;
  for (int n = n_min; n <= n_max; ++n) {
    for (bool high : {false, true}) {
      AggregateRow row;
      row.n = n;
      row.high_ci = high;
      const auto it = buckets.find({n, high});
      if (it == buckets.end()) {
        row.matrix_count = 0;
        row.pop_ev = row.pop_gm = row.poip_ev = row.poip_gm = kNan;
        row.poip_applicable_ev = row.poip_applicable_gm = kNan;
        row.th1_pct = row.th2_pct = kNan;
        row.pooled_pop_ev = row.pooled_pop_gm = kNan;
        row.pooled_poip_ev = row.pooled_poip_gm = kNan;
      } else {
        const Accumulator& acc = it->second;
        row.matrix_count = acc.count;
        row.pop_ev = Accumulator::mean(acc.pop_ev);
        row.pop_gm = Accumulator::mean(acc.pop_gm);
        row.poip_ev = Accumulator::mean(acc.poip_uni_ev);
        row.poip_gm = Accumulator::mean(acc.poip_uni_gm);
        row.poip_applicable_ev = Accumulator::mean(acc.poip_app_ev);
        row.poip_applicable_gm = Accumulator::mean(acc.poip_app_gm);
        row.th1_pct = Accumulator::mean(acc.th1);
        row.th2_pct = Accumulator::mean(acc.th2);
        row.pooled_pop_ev = Accumulator::share(acc.sum_pop_ev, acc.sum_pop_app);
        row.pooled_pop_gm = Accumulator::share(acc.sum_pop_gm, acc.sum_pop_app);
        row.pooled_poip_ev =
            Accumulator::share(acc.sum_poip_ev, acc.sum_poip_app);
        row.pooled_poip_gm =
            Accumulator::share(acc.sum_poip_gm, acc.sum_poip_app);
      }
      rows.push_back(row);
    }
  }
  return rows;
}

std::vector<KiSeries> bin_by_ki(std::span<const MatrixRecord> records,
                                double bin_width) {
  if (!(bin_width > 0.0) || !(bin_width < 1.0)) {
    throw Error(ErrorCode::invalid_config, "bin width must lie in (0, 1)");
  }

  struct BinAcc {
    long count = 0;
    double pop_violations = 0.0;
    double poip_violations = 0.0;
    double th1 = 0.0;
    long th2_count = 0;
    double th2 = 0.0;
  };
  // key: (n, method, bin index)
  std::map<std::tuple<int, int, long>, BinAcc> bins;
  for (const MatrixRecord& r : records) {
    const long bin = static_cast<long>(std::floor(r.ki / bin_width));
    for (const Method method : {Method::ev, Method::gm}) {
      BinAcc& acc = bins[{r.n, static_cast<int>(method), bin}];
      ++acc.count;
      const long pop_sat =
          method == Method::ev ? r.pop_satisfied_ev : r.pop_satisfied_gm;
      const long poip_sat =
          method == Method::ev ? r.poip_satisfied_ev : r.poip_satisfied_gm;
      acc.pop_violations += static_cast<double>(r.pop_applicable - pop_sat);
      acc.poip_violations += static_cast<double>(r.poip_applicable - poip_sat);
      acc.th1 += static_cast<double>(r.th1_guaranteed);
      if (r.th2_guaranteed != kTheorem2Skipped) {
        ++acc.th2_count;
        acc.th2 += static_cast<double>(r.th2_guaranteed);
      }
    }
  }

  std::map<std::pair<int, int>, KiSeries> series;
  for (const auto& [key, acc] : bins) {
    const auto [n, method, bin] = key;
    KiSeries& s = series[{n, method}];
    s.n = n;
    s.method = static_cast<Method>(method);
    KiBinPoint point;
    point.center = (bin + 0.5) * bin_width;
    point.matrix_count = acc.count;
    point.mean_pop_violations = acc.pop_violations / acc.count;
    point.mean_poip_violations = acc.poip_violations / acc.count;
    point.mean_th1_guaranteed = acc.th1 / acc.count;
    point.mean_th2_guaranteed =
        acc.th2_count > 0 ? acc.th2 / acc.th2_count : kNan;
    s.points.push_back(point);
  }

  std::vector<KiSeries> out;
  out.reserve(series.size());
  for (auto& [key, s] : series) out.push_back(std::move(s));
  return out;
}

}  // namespace copsim
