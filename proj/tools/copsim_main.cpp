// copsim: Monte Carlo study of order preservation in pairwise comparisons.
//
//   copsim run  ...   run the simulation grid and write CSV outputs
//   copsim eval FILE  audit one matrix: inconsistency, weights, conditions
//
// Exit codes: 0 success, 2 usage or validation error, 3 I/O error.

#include <CLI11.hpp>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>

#include "copsim/cop.hpp"
#include "copsim/csv_io.hpp"
#include "copsim/errors.hpp"
#include "copsim/inconsistency.hpp"
#include "copsim/priority.hpp"
#include "copsim/simulator.hpp"

namespace fs = std::filesystem;

namespace {

struct RunOptions {
  std::string n_range = "3..9";
  copsim::ExperimentConfig config;
  std::string delta_scheme = "uniform";
  std::string out_dir = ".";
  int threads = 0;
  bool quiet = false;
};

void parse_n_range(const std::string& text, copsim::ExperimentConfig& config) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      config.n_min = config.n_max = std::stoi(text);
    } else {
      config.n_min = std::stoi(text.substr(0, dots));
      config.n_max = std::stoi(text.substr(dots + 2));
    }
  } catch (const std::exception&) {
    throw copsim::Error(copsim::ErrorCode::invalid_config,
                        "--n expects N or A..B, got '" + text + "'");
  }
}

int cmd_run(const RunOptions& options) {
  copsim::ExperimentConfig config = options.config;
  parse_n_range(options.n_range, config);
  if (options.delta_scheme == "uniform") {
    config.delta_scheme = copsim::DeltaScheme::uniform;
  } else if (options.delta_scheme == "log-uniform") {
    config.delta_scheme = copsim::DeltaScheme::log_uniform;
  } else {
    throw copsim::Error(copsim::ErrorCode::invalid_config,
                        "--delta-scheme expects uniform or log-uniform");
  }
  config.validate();

  std::error_code ec;
  fs::create_directories(options.out_dir, ec);
  if (ec) {
    throw copsim::Error(copsim::ErrorCode::io_error,
                        "cannot create " + options.out_dir + ": " + ec.message());
  }

  std::function<void(long, long)> progress;
  if (!options.quiet) {
    progress = [](long done, long total) {
      std::fprintf(stderr, "\r%ld / %ld matrices", done, total);
      if (done == total) std::fprintf(stderr, "\n");
    };
  }

  const copsim::ExperimentResult result =
      copsim::run_experiment(config, options.threads, progress);
  const auto rows = copsim::aggregate_tables(result.records);
  const auto series = copsim::bin_by_ki(result.records, config.ki_bin_width);

  const fs::path out(options.out_dir);
  copsim::write_records_csv(out / "records.csv", result.records);
  copsim::write_tables_csv(out / "tables.csv", rows);
  copsim::write_figures_csv(out / "figures.csv", series);
  copsim::write_summary_text(out / "summary.txt", config, rows,
                             result.failed_seeds.size());

  if (!options.quiet) {
    std::cout << result.records.size() << " records written to "
              << (out / "records.csv").string() << "\n";
    if (!result.failed_seeds.empty()) {
      std::cout << "warning: " << result.failed_seeds.size()
                << " matrices skipped for eigen non-convergence\n";
    }
  }
  return 0;
}

void print_weights(const char* label, const std::vector<double>& weights) {
  std::cout << label;
  for (double w : weights) std::cout << ' ' << copsim::format_double(w);
  std::cout << "\n";
}

int cmd_eval(const std::string& file, bool verbose) {
  const copsim::PCMatrix matrix = copsim::read_matrix_file(file);
  const int n = matrix.order();

  const copsim::EigenResult eigen = copsim::ev_weights(matrix);
  const copsim::PriorityVector gm = copsim::gm_weights(matrix);
  const copsim::InconsistencyReport report =
      copsim::assess_inconsistency(matrix, eigen);

  std::cout << "order       " << n << "\n";
  std::cout << "lambda_max  " << copsim::format_double(report.lambda_max)
            << "\n";
  std::cout << "CI          " << copsim::format_double(report.ci) << "\n";
  std::cout << "KI          " << copsim::format_double(report.ki) << "\n";
  print_weights("EV weights ", eigen.vector.weights);
  print_weights("GM weights ", gm.weights);

  for (const auto& [name, weights] :
       {std::pair<const char*, const copsim::PriorityVector&>{"EV",
                                                              eigen.vector},
        {"GM", gm}}) {
    const auto pop = copsim::pop_evaluate(matrix, weights);
    const auto poip = copsim::poip_evaluate(matrix, weights);
    std::cout << name << " POP  applicable " << pop.applicable
              << " satisfied " << pop.satisfied << " violated "
              << pop.violated() << "\n";
    const auto violated = copsim::pop_violated_pairs(matrix, weights);
    if (!violated.empty()) {
      std::cout << name << " POP violated pairs:";
      for (const auto& pair : violated) {
        std::cout << " (" << pair.i + 1 << "," << pair.j + 1 << ")";
      }
      std::cout << "\n";
    }
    std::cout << name << " POIP applicable " << poip.applicable
              << " satisfied " << poip.satisfied << " violated "
              << poip.violated() << " (universe "
              << copsim::poip_condition_count(n) << ")\n";
  }

  const auto th1 = copsim::theorem1_pairs(matrix, report.ki);
  std::cout << "theorem 1 guaranteed pairs (" << th1.size() << "):";
  for (const auto& pair : th1) {
    std::cout << " (" << pair.i + 1 << "," << pair.j + 1 << ")";
  }
  std::cout << "\n";
  std::cout << "theorem 2 guaranteed quadruples "
            << copsim::theorem2_count(matrix, report.ki) << "\n";
  if (verbose) {
    std::cout << "theorem 2 guaranteed quadruples (unrestricted) "
              << copsim::theorem2_count(matrix, report.ki, false) << "\n";
    std::cout << "eigen iterations " << eigen.iterations << " residual "
              << copsim::format_double(eigen.residual) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Order preservation in pairwise comparison matrices"};
  app.require_subcommand(1);

  RunOptions run_options;
  CLI::App* run = app.add_subcommand("run", "Run the Monte Carlo grid");
  run->add_option("--n", run_options.n_range,
                  "Matrix orders, e.g. 4 or 3..9 (default 3..9)");
  run->add_option("--gamma-levels", run_options.config.gamma_levels,
                  "Number of disturbance levels in (1,4)");
  run->add_option("--per-cell", run_options.config.matrices_per_cell,
                  "Matrices per (order, level) cell");
  run->add_option("--seed", run_options.config.master_seed, "Master seed");
  run->add_option("--delta-scheme", run_options.delta_scheme,
                  "uniform | log-uniform");
  run->add_option("--ki-bin-width", run_options.config.ki_bin_width,
                  "KI bin width for figures.csv");
  run->add_flag("--force-th2", run_options.config.force_theorem2,
                "Compute theorem-2 counts for n >= 8 as well");
  run->add_option("--out", run_options.out_dir, "Output directory");
  run->add_option("--threads", run_options.threads,
                  "Worker threads (0 = hardware)");
  run->add_flag("--quiet", run_options.quiet, "Suppress progress output");

  std::string eval_file;
  bool eval_verbose = false;
  CLI::App* eval = app.add_subcommand("eval", "Audit a single matrix file");
  eval->add_option("file", eval_file, "Matrix file (rows of numbers, # comments)")
      ->required();
  eval->add_flag("--verbose", eval_verbose, "Print extra diagnostics");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (run->parsed()) return cmd_run(run_options);
    if (eval->parsed()) return cmd_eval(eval_file, eval_verbose);
  } catch (const copsim::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == copsim::ErrorCode::io_error ? 3 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
