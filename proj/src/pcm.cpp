#include "copsim/pcm.hpp"

#include <cmath>
#include <sstream>

#include "copsim/errors.hpp"

namespace copsim {

namespace {

std::string pair_text(int i, int j) {
  std::ostringstream out;
  out << "(" << i + 1 << "," << j + 1 << ")";
  return out.str();
}

}  // namespace

PCMatrix PCMatrix::from_entries(int order, std::span<const double> entries) {
  if (order < 0 ||
      entries.size() != static_cast<std::size_t>(order) * order) {
    throw Error(ErrorCode::non_square,
                "entry count does not form a square matrix of the stated order");
  }
  if (order < 3) {
    std::ostringstream out;
    out << "order " << order << " < 3; triad-based indices need n >= 3";
    throw Error(ErrorCode::order_too_small, out.str());
  }
  std::vector<double> data(entries.begin(), entries.end());
  for (int i = 0; i < order; ++i) {
    for (int j = 0; j < order; ++j) {
      const double value = data[static_cast<std::size_t>(i) * order + j];
      if (!(value > 0.0) || !std::isfinite(value)) {
        throw Error(ErrorCode::non_positive_entry,
                    "entry " + pair_text(i, j) + " is not a positive finite ratio");
      }
    }
  }
  for (int i = 0; i < order; ++i) {
    for (int j = i + 1; j < order; ++j) {
      const double cij = data[static_cast<std::size_t>(i) * order + j];
      const double cji = data[static_cast<std::size_t>(j) * order + i];
      const double defect = std::fabs(cij * cji - 1.0);
      if (defect > kReciprocityTol) {
        std::ostringstream out;
        out << "entries " << pair_text(i, j) << " and " << pair_text(j, i)
            << " have |c_ij*c_ji - 1| = " << defect;
        throw Error(ErrorCode::reciprocity_violation, out.str());
      }
    }
    data[static_cast<std::size_t>(i) * order + i] = 1.0;
  }
  return PCMatrix(order, std::move(data));
}

PCMatrix PCMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  const int order = static_cast<int>(rows.size());
  std::vector<double> flat;
  flat.reserve(static_cast<std::size_t>(order) * order);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != order) {
      throw Error(ErrorCode::non_square, "rows have unequal lengths");
    }
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return from_entries(order, flat);
}

PCMatrix PCMatrix::permuted(std::span<const int> perm) const {
  std::vector<double> data(entries_.size());
  for (int i = 0; i < order_; ++i) {
    for (int j = 0; j < order_; ++j) {
      data[static_cast<std::size_t>(i) * order_ + j] = (*this)(perm[i], perm[j]);
    }
  }
  return PCMatrix(order_, std::move(data));
}

PCMatrix PCMatrix::transposed() const {
  std::vector<double> data(entries_.size());
  for (int i = 0; i < order_; ++i) {
    for (int j = 0; j < order_; ++j) {
      data[static_cast<std::size_t>(i) * order_ + j] = (*this)(j, i);
    }
  }
  return PCMatrix(order_, std::move(data));
}

DisturbanceSpec::DisturbanceSpec(double gamma_in, DeltaScheme scheme_in)
    : gamma(gamma_in), scheme(scheme_in) {
  if (!(gamma > 1.0) || !(gamma < 4.0)) {
    std::ostringstream out;
    out << "disturbance level must satisfy 1 < gamma < 4, got " << gamma;
    throw Error(ErrorCode::invalid_disturbance, out.str());
  }
}

double consistency_defect(const PCMatrix& matrix) {
  const int n = matrix.order();
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        const double defect =
            std::fabs(matrix(i, j) * matrix(j, k) * matrix(k, i) - 1.0);
        if (defect > worst) worst = defect;
      }
    }
  }
  return worst;
}

std::pair<GroundTruthWeights, PCMatrix> generate_consistent(int order, Rng& rng) {
  if (order < 3) {
    throw Error(ErrorCode::order_too_small, "generation needs n >= 3");
  }
  GroundTruthWeights weights;
  weights.values.resize(order);
  for (int i = 0; i < order; ++i) {
    weights.values[i] = rng.uniform(1.0, 9.0);
  }
  std::vector<double> entries(static_cast<std::size_t>(order) * order);
  for (int i = 0; i < order; ++i) {
    for (int j = 0; j < order; ++j) {
      entries[static_cast<std::size_t>(i) * order + j] =
          weights.values[i] / weights.values[j];
    }
  }
  return {std::move(weights), PCMatrix::from_entries(order, entries)};
}

PCMatrix perturb(const PCMatrix& matrix, const DisturbanceSpec& spec, Rng& rng) {
  const int n = matrix.order();
  std::vector<double> entries(matrix.entries().begin(), matrix.entries().end());
  const double log_gamma = std::log(spec.gamma);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      double delta;
      if (spec.scheme == DeltaScheme::uniform) {
        delta = rng.uniform(1.0 / spec.gamma, spec.gamma);
      } else {
        delta = std::exp(rng.uniform(-log_gamma, log_gamma));
      }
      const std::size_t upper = static_cast<std::size_t>(i) * n + j;
      const std::size_t lower = static_cast<std::size_t>(j) * n + i;
      entries[upper] *= delta;
      entries[lower] = 1.0 / entries[upper];
    }
  }
  return PCMatrix::from_entries(n, entries);
}

}  // namespace copsim
