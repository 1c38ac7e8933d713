#include "copsim/csv_io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <system_error>

#include "copsim/errors.hpp"

namespace copsim {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

// Reference percentages this tool tries to reproduce, low-CI bucket first.
// Columns: POP(EV), POP(GM), POIP(EV), POIP(GM), Th1, Th2 (NaN = NA).
struct ReferenceRow {
  int n;
  std::array<double, 6> low;
  std::array<double, 6> high;
};

constexpr ReferenceRow kReferenceRows[] = {
    {3, {91.02, 91.02, 96.60, 96.60, 58.25, 7.60},
        {87.33, 87.33, 96.00, 96.00, 45.83, 5.29}},
    {4, {90.44, 90.59, 95.79, 95.79, 40.39, 3.50},
        {85.88, 86.29, 94.01, 94.03, 21.30, 0.53}},
    {5, {89.70, 89.88, 95.80, 95.82, 32.90, 2.53},
        {83.64, 84.21, 93.63, 93.69, 9.72, 0.05}},
    {6, {89.91, 90.01, 95.80, 95.82, 29.41, 2.25},
        {82.70, 83.06, 93.56, 93.64, 5.45, 0.01}},
    {7, {89.66, 89.74, 95.83, 95.85, 27.10, 2.12},
        {82.01, 82.55, 93.43, 93.50, 3.27, 0.00}},
    {8, {89.57, 89.64, 95.98, 96.00, 26.45, kNan},
        {81.71, 82.18, 93.48, 93.55, 2.22, kNan}},
    {9, {89.62, 89.70, 96.03, 96.05, 25.28, kNan},
        {81.37, 81.83, 93.40, 93.46, 1.52, kNan}},
};

const std::array<double, 6>* reference_for(int n, bool high_ci) {
  for (const ReferenceRow& row : kReferenceRows) {
    if (row.n == n) return high_ci ? &row.high : &row.low;
  }
  return nullptr;
}

/// Writes through a temp file in the same directory and renames into place.
class AtomicWriter {
 public:
  explicit AtomicWriter(const std::filesystem::path& path)
      : target_(path), temp_(path) {
    temp_ += ".tmp";
    stream_.open(temp_, std::ios::binary | std::ios::trunc);
    if (!stream_) {
      throw Error(ErrorCode::io_error, "cannot open " + temp_.string());
    }
  }

  std::ofstream& stream() { return stream_; }

  void commit() {
    stream_.flush();
    if (!stream_) {
      throw Error(ErrorCode::io_error, "write failed for " + temp_.string());
    }
    stream_.close();
    std::error_code ec;
    std::filesystem::rename(temp_, target_, ec);
    if (ec) {
      throw Error(ErrorCode::io_error,
                  "rename to " + target_.string() + " failed: " + ec.message());
    }
  }

  ~AtomicWriter() {
    if (stream_.is_open()) {
      stream_.close();
      std::error_code ec;
      std::filesystem::remove(temp_, ec);
    }
  }

 private:
  std::filesystem::path target_;
  std::filesystem::path temp_;
  std::ofstream stream_;
};

std::string format_or_empty(double value) {
  return std::isfinite(value) ? format_double(value) : std::string();
}

double parse_double_field(const std::string& field, const char* what) {
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw Error(ErrorCode::parse_error,
                std::string("bad ") + what + " value '" + field + "'");
  }
  return value;
}

long parse_long_field(const std::string& field, const char* what) {
  long value = 0;
  const auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw Error(ErrorCode::parse_error,
                std::string("bad ") + what + " value '" + field + "'");
  }
  return value;
}

std::uint64_t parse_u64_field(const std::string& field, const char* what) {
  std::uint64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw Error(ErrorCode::parse_error,
                std::string("bad ") + what + " value '" + field + "'");
  }
  return value;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream stream(line);
  while (std::getline(stream, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

std::string fixed2(double value) {
  if (!std::isfinite(value)) return "NA";
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.2f", value);
  return buffer;
}

}  // namespace

std::string format_double(double value) {
  char buffer[64];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  if (ec != std::errc()) {
    throw Error(ErrorCode::io_error, "double formatting failed");
  }
  return std::string(buffer, ptr);
}

PCMatrix parse_matrix_text(const std::string& text) {
  std::vector<std::vector<double>> rows;
  std::istringstream lines(text);
  std::string line;
  int line_no = 0;
  while (std::getline(lines, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    for (char& c : line) {
      if (c == ',' || c == ';' || c == '\t' || c == '\r') c = ' ';
    }
    std::istringstream fields(line);
    std::vector<double> row;
    std::string token;
    while (fields >> token) {
      double value = 0.0;
      const auto [ptr, ec] =
          std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc() || ptr != token.data() + token.size()) {
        std::ostringstream out;
        out << "line " << line_no << ": '" << token << "' is not a number";
        throw Error(ErrorCode::parse_error, out.str());
      }
      row.push_back(value);
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (rows.empty()) {
    throw Error(ErrorCode::parse_error, "no matrix rows found");
  }
  return PCMatrix::from_rows(rows);
}

PCMatrix read_matrix_file(const std::filesystem::path& path) {
  std::ifstream stream(path);
  if (!stream) {
    throw Error(ErrorCode::io_error, "cannot open " + path.string());
  }
  std::ostringstream content;
  content << stream.rdbuf();
  return parse_matrix_text(content.str());
}

void write_records_csv(const std::filesystem::path& path,
                       std::span<const MatrixRecord> records) {
  AtomicWriter writer(path);
  auto& out = writer.stream();
  out << "n,gamma,replicate,seed,lambda_max,ci,ki,pop_app,pop_sat_ev,"
         "pop_sat_gm,poip_app,poip_sat_ev,poip_sat_gm,th1,th2\n";
  for (const MatrixRecord& r : records) {
    out << r.n << ',' << format_double(r.gamma) << ',' << r.replicate << ','
        << r.seed << ',' << format_double(r.lambda_max) << ','
        << format_double(r.ci) << ',' << format_double(r.ki) << ','
        << r.pop_applicable << ',' << r.pop_satisfied_ev << ','
        << r.pop_satisfied_gm << ',' << r.poip_applicable << ','
        << r.poip_satisfied_ev << ',' << r.poip_satisfied_gm << ','
        << r.th1_guaranteed << ',';
    if (r.th2_guaranteed != kTheorem2Skipped) out << r.th2_guaranteed;
    out << '\n';
  }
  writer.commit();
}

std::vector<MatrixRecord> read_records_csv(const std::filesystem::path& path) {
  std::ifstream stream(path);
  if (!stream) {
    throw Error(ErrorCode::io_error, "cannot open " + path.string());
  }
  std::string line;
  if (!std::getline(stream, line)) {
    throw Error(ErrorCode::parse_error, "missing records header");
  }
  std::vector<MatrixRecord> records;
  while (std::getline(stream, line)) {
    if (line.empty()) continue;
    const auto fields = split_csv_line(line);
    if (fields.size() != 15) {
      throw Error(ErrorCode::parse_error,
                  "expected 15 record fields, got " +
                      std::to_string(fields.size()));
    }
    MatrixRecord r;
    r.n = static_cast<int>(parse_long_field(fields[0], "n"));
    r.gamma = parse_double_field(fields[1], "gamma");
    r.replicate = static_cast<int>(parse_long_field(fields[2], "replicate"));
    r.seed = parse_u64_field(fields[3], "seed");
    r.lambda_max = parse_double_field(fields[4], "lambda_max");
    r.ci = parse_double_field(fields[5], "ci");
    r.ki = parse_double_field(fields[6], "ki");
    r.pop_applicable = parse_long_field(fields[7], "pop_app");
    r.pop_satisfied_ev = parse_long_field(fields[8], "pop_sat_ev");
    r.pop_satisfied_gm = parse_long_field(fields[9], "pop_sat_gm");
    r.poip_applicable = parse_long_field(fields[10], "poip_app");
    r.poip_satisfied_ev = parse_long_field(fields[11], "poip_sat_ev");
    r.poip_satisfied_gm = parse_long_field(fields[12], "poip_sat_gm");
    r.th1_guaranteed = parse_long_field(fields[13], "th1");
    r.th2_guaranteed = fields[14].empty()
                           ? kTheorem2Skipped
                           : parse_long_field(fields[14], "th2");
    records.push_back(r);
  }
  return records;
}

void write_tables_csv(const std::filesystem::path& path,
                      std::span<const AggregateRow> rows) {
  AtomicWriter writer(path);
  auto& out = writer.stream();
  out << "n,ci_bucket,matrix_count,pop_ev,pop_gm,poip_ev,poip_gm,"
         "poip_applicable_ev,poip_applicable_gm,th1,th2,"
         "pooled_pop_ev,pooled_pop_gm,pooled_poip_ev,pooled_poip_gm\n";
  for (const AggregateRow& row : rows) {
    out << row.n << ',' << (row.high_ci ? "ge_0.10" : "lt_0.10") << ','
        << row.matrix_count << ',' << format_or_empty(row.pop_ev) << ','
        << format_or_empty(row.pop_gm) << ',' << format_or_empty(row.poip_ev)
        << ',' << format_or_empty(row.poip_gm) << ','
        << format_or_empty(row.poip_applicable_ev) << ','
        << format_or_empty(row.poip_applicable_gm) << ','
        << format_or_empty(row.th1_pct) << ',' << format_or_empty(row.th2_pct)
        << ',' << format_or_empty(row.pooled_pop_ev) << ','
        << format_or_empty(row.pooled_pop_gm) << ','
        << format_or_empty(row.pooled_poip_ev) << ','
        << format_or_empty(row.pooled_poip_gm) << '\n';
  }
  writer.commit();
}

void write_figures_csv(const std::filesystem::path& path,
                       std::span<const KiSeries> series) {
  AtomicWriter writer(path);
  auto& out = writer.stream();
  out << "n,method,ki_bin_center,matrix_count,mean_pop_violations,"
         "mean_poip_violations,mean_th1_guaranteed,mean_th2_guaranteed\n";
  for (const KiSeries& s : series) {
    const char* method = s.method == Method::ev ? "ev" : "gm";
    for (const KiBinPoint& p : s.points) {
      out << s.n << ',' << method << ',' << format_double(p.center) << ','
          << p.matrix_count << ',' << format_double(p.mean_pop_violations)
          << ',' << format_double(p.mean_poip_violations) << ','
          << format_double(p.mean_th1_guaranteed) << ','
          << format_or_empty(p.mean_th2_guaranteed) << '\n';
    }
  }
  writer.commit();
}

void write_summary_text(const std::filesystem::path& path,
                        const ExperimentConfig& config,
                        std::span<const AggregateRow> rows,
                        std::size_t failed_count) {
  AtomicWriter writer(path);
  auto& out = writer.stream();
  out << "Order preservation simulation summary\n";
  out << "=====================================\n";
  out << "grid: n = " << config.n_min << ".." << config.n_max << ", "
      << config.gamma_levels << " disturbance levels in (1,4), "
      << config.matrices_per_cell << " matrices per cell ("
      << config.total_matrices() << " total)\n";
  out << "delta scheme: "
      << (config.delta_scheme == DeltaScheme::uniform ? "uniform"
                                                      : "log-uniform")
      << ", master seed: " << config.master_seed << "\n";
  out << "eigen solver failures: " << failed_count << "\n\n";
  out << "POP percentages average satisfied/applicable per matrix; POIP\n"
      << "percentages count a condition with a false antecedent as satisfied\n"
      << "(share of all individual conditions not violated). Theorem columns\n"
      << "divide guaranteed counts by applicable counts. 'ref' columns are\n"
      << "the published reference values this run is compared against.\n";

  for (const bool high : {false, true}) {
    out << "\nBucket CI " << (high ? ">= 0.10" : "< 0.10") << "\n";
    out << "  n   count  POP(EV)   ref  POP(GM)   ref  POIP(EV)   ref  "
           "POIP(GM)   ref   Th1    ref   Th2    ref\n";
    for (const AggregateRow& row : rows) {
      if (row.high_ci != high) continue;
      const auto* ref = reference_for(row.n, high);
      auto ref_at = [&](int k) { return ref ? (*ref)[k] : kNan; };
      out << "  " << row.n << ' ' << std::setw(7) << row.matrix_count;
      const double ours[6] = {row.pop_ev,  row.pop_gm, row.poip_ev,
                              row.poip_gm, row.th1_pct, row.th2_pct};
      for (int k = 0; k < 6; ++k) {
        out << "  " << std::setw(6) << fixed2(ours[k]) << ' ' << std::setw(6)
            << fixed2(ref_at(k));
      }
      out << '\n';
    }
  }
  writer.commit();
}

}  // namespace copsim
