#include "copsim/inconsistency.hpp"

#include <cmath>

#include "copsim/errors.hpp"

namespace copsim {

double saaty_ci(double lambda_max, int order) {
  if (order < 3) {
    throw Error(ErrorCode::order_too_small, "CI needs n >= 3");
  }
  const double ci = (lambda_max - order) / (order - 1);
  return std::fabs(ci) <= 1e-12 ? 0.0 : ci;
}

double koczkodaj_ki(const PCMatrix& matrix) {
  const int n = matrix.order();
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      for (int k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        const double direct = matrix(i, j);
        const double via = matrix(i, k) * matrix(k, j);
        const double deviation =
            std::min(std::fabs(1.0 - direct / via), std::fabs(1.0 - via / direct));
        if (deviation > worst) worst = deviation;
      }
    }
  }
  return worst;
}

InconsistencyReport assess_inconsistency(const PCMatrix& matrix,
                                         const EigenResult& eigen) {
  return InconsistencyReport{eigen.lambda_max,
                             saaty_ci(eigen.lambda_max, matrix.order()),
                             koczkodaj_ki(matrix)};
}

}  // namespace copsim
