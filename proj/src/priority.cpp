#include "copsim/priority.hpp"

#include <cmath>
#include <sstream>

#include "copsim/errors.hpp"

namespace copsim {

namespace {

void normalize_to_unit_sum(std::vector<double>& values) {
  double sum = 0.0;
  for (double v : values) sum += v;
  for (double& v : values) v /= sum;
}

std::vector<double> multiply(const PCMatrix& matrix,
                             const std::vector<double>& v) {
  const int n = matrix.order();
  std::vector<double> out(n, 0.0);
  for (int i = 0; i < n; ++i) {
    double acc = 0.0;
    for (int j = 0; j < n; ++j) acc += matrix(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

}  // namespace

EigenResult ev_weights(const PCMatrix& matrix, double tol, int max_iter) {
  if (!(tol > 0.0) || max_iter < 1) {
    throw Error(ErrorCode::invalid_config,
                "ev_weights needs tol > 0 and max_iter >= 1");
  }
  const int n = matrix.order();
  std::vector<double> v(n, 1.0 / n);

  int iterations = 0;
  double residual = std::numeric_limits<double>::infinity();
  while (iterations < max_iter) {
    std::vector<double> u = multiply(matrix, v);
    normalize_to_unit_sum(u);
    ++iterations;
    residual = 0.0;
    for (int i = 0; i < n; ++i) {
      residual = std::max(residual, std::fabs(u[i] - v[i]) / v[i]);
    }
    v = std::move(u);
    if (residual <= tol) break;
  }
  if (residual > tol) {
    std::ostringstream out;
    out << "power iteration residual " << residual << " > " << tol << " after "
        << iterations << " iterations";
    throw Error(ErrorCode::no_convergence, out.str());
  }

  const std::vector<double> cv = multiply(matrix, v);
  double lambda = 0.0;
  for (int i = 0; i < n; ++i) lambda += cv[i] / v[i];
  lambda /= n;

  EigenResult result;
  result.lambda_max = lambda;
  result.vector = PriorityVector{std::move(v), Method::ev};
  result.iterations = iterations;
  result.residual = residual;
  return result;
}

PriorityVector gm_weights(const PCMatrix& matrix) {
  const int n = matrix.order();
  std::vector<double> w(n);
  for (int i = 0; i < n; ++i) {
    double log_sum = 0.0;
    for (int j = 0; j < n; ++j) log_sum += std::log(matrix(i, j));
    w[i] = std::exp(log_sum / n);
  }
  normalize_to_unit_sum(w);
  return PriorityVector{std::move(w), Method::gm};
}

}  // namespace copsim
