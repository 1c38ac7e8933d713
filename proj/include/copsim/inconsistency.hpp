#pragma once

#include "copsim/pcm.hpp"
#include "copsim/priority.hpp"

namespace copsim {

struct InconsistencyReport {
  double lambda_max;
  double ci;
  double ki;
};

/// (lambda_max - n) / (n - 1), clamped to 0 when within 1e-12 of zero so
/// consistent matrices report exactly 0.
double saaty_ci(double lambda_max, int order);

/// Worst-triad relative deviation from consistency:
/// max over distinct (i,j,k) of
///   min(|1 - c_ij/(c_ik c_kj)|, |1 - (c_ik c_kj)/c_ij|).
/// Always in [0, 1).
double koczkodaj_ki(const PCMatrix& matrix);

InconsistencyReport assess_inconsistency(const PCMatrix& matrix,
                                         const EigenResult& eigen);

}  // namespace copsim
