#pragma once

#include <span>
#include <utility>
#include <vector>

#include "copsim/rng.hpp"

namespace copsim {

/// Square positive reciprocal matrix of pairwise preference ratios.
///
/// Invariants, enforced at construction:
///   - order n >= 3
///   - every entry strictly positive and finite
///   - unit diagonal (forced exactly)
///   - |c_ij * c_ji - 1| <= kReciprocityTol for every pair
///
/// Instances are immutable and safe to share between threads.
class PCMatrix {
 public:
  static constexpr double kReciprocityTol = 1e-12;

  /// Validates and builds a matrix from row-major entries. The diagonal is
  /// forced to exactly 1. Throws Error with code non_square,
  /// order_too_small, non_positive_entry or reciprocity_violation.
  static PCMatrix from_entries(int order, std::span<const double> entries);
  static PCMatrix from_rows(const std::vector<std::vector<double>>& rows);

  int order() const noexcept { return order_; }

  double operator()(int i, int j) const noexcept {
    return entries_[static_cast<std::size_t>(i) * order_ + j];
  }

  std::span<const double> entries() const noexcept { return entries_; }

  /// Matrix with rows and columns simultaneously relabelled: result(i,j) =
  /// (*this)(perm[i], perm[j]).
  PCMatrix permuted(std::span<const int> perm) const;

  PCMatrix transposed() const;

 private:
  PCMatrix(int order, std::vector<double> entries)
      : order_(order), entries_(std::move(entries)) {}

  int order_;
  std::vector<double> entries_;
};

/// Utility scores the generator draws before building a consistent matrix;
/// every value lies in [1, 9].
struct GroundTruthWeights {
  std::vector<double> values;
};

enum class DeltaScheme {
  uniform,      // delta uniform on [1/gamma, gamma]
  log_uniform,  // exp of uniform on [-ln gamma, ln gamma]
};

/// Multiplicative disturbance description: one delta per pair is drawn from
/// [1/gamma, gamma]. Requires 1 < gamma < 4 (open interval).
struct DisturbanceSpec {
  DisturbanceSpec(double gamma, DeltaScheme scheme = DeltaScheme::uniform);

  double gamma;
  DeltaScheme scheme;
};

/// Max over all index triples (i,j,k) of |c_ij * c_jk * c_ki - 1|; zero
/// exactly when the matrix is multiplicatively consistent.
double consistency_defect(const PCMatrix& matrix);

/// Draws n utility scores i.i.d. uniform on [1, 9] and returns them with the
/// fully consistent ratio matrix c_ij = w_i / w_j.
std::pair<GroundTruthWeights, PCMatrix> generate_consistent(int order, Rng& rng);

/// Multiplies every above-diagonal entry by an independently drawn delta in
/// [1/gamma, gamma] and mirrors exact reciprocals below the diagonal.
/// Deltas are drawn in row-major upper-triangle order, so results are fully
/// reproducible from the rng seed.
PCMatrix perturb(const PCMatrix& matrix, const DisturbanceSpec& spec, Rng& rng);

}  // namespace copsim
