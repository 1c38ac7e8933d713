#pragma once

#include <vector>

#include "copsim/pcm.hpp"

namespace copsim {

enum class Method { ev, gm };

/// Positive weight vector normalized to sum exactly 1.
struct PriorityVector {
  std::vector<double> weights;
  Method method;

  double ratio(int i, int j) const { return weights[i] / weights[j]; }
};

struct EigenResult {
  double lambda_max = 0.0;
  PriorityVector vector;
  int iterations = 0;
  double residual = 0.0;
};

/// Principal eigenpair by power iteration started from the uniform vector.
///
/// Each step multiplies by the matrix and renormalizes to unit sum; the
/// residual is the max componentwise relative change per step. After
/// convergence lambda_max is estimated as the mean of the componentwise
/// ratios (C w)_i / w_i. Throws Error{no_convergence} if max_iter steps do
/// not reach tol (cannot happen for positive matrices of the orders used
/// here with default settings).
EigenResult ev_weights(const PCMatrix& matrix, double tol = 1e-12,
                       int max_iter = 10000);

/// Row geometric means, computed in log space, normalized to unit sum.
PriorityVector gm_weights(const PCMatrix& matrix);

}  // namespace copsim
