// Independent test oracles. Everything here re-derives expected values from
// first principles (brute-force enumeration, characteristic polynomial plus
// bisection) and stays off the library's computation paths it is used to
// check.
#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "copsim/pcm.hpp"

namespace oracle {

// det(C - lambda I) for a 3x3 matrix, cofactor expansion.
inline double det3_shifted(const copsim::PCMatrix& m, double lambda) {
  const double a = m(0, 0) - lambda, b = m(0, 1), c = m(0, 2);
  const double d = m(1, 0), e = m(1, 1) - lambda, f = m(1, 2);
  const double g = m(2, 0), h = m(2, 1), i = m(2, 2) - lambda;
  return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g);
}

// Principal eigenvalue of a 3x3 reciprocal matrix by bisection on the
// characteristic polynomial. A reciprocal matrix has one real eigenvalue
// >= n and a complex pair, so det(C - lambda I) changes sign exactly once
// on [n - 1, upper bound from the max row sum].
inline double lambda_max_3x3(const copsim::PCMatrix& m) {
  if (m.order() != 3) throw std::invalid_argument("3x3 oracle");
  double hi = 0.0;
  for (int i = 0; i < 3; ++i) {
    double row = 0.0;
    for (int j = 0; j < 3; ++j) row += m(i, j);
    hi = std::max(hi, row);
  }
  hi += 1.0;
  double lo = 2.0;
  if (!(det3_shifted(m, lo) > 0.0) || !(det3_shifted(m, hi) < 0.0)) {
    throw std::runtime_error("eigen oracle bracket failed");
  }
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (det3_shifted(m, mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Eigenvector for the 3x3 principal eigenvalue: fix x0 = 1 and solve the
// remaining 2x2 system by Cramer's rule, then normalize to unit sum.
inline std::array<double, 3> ev_weights_3x3(const copsim::PCMatrix& m,
                                            double lambda) {
  const double a11 = m(1, 1) - lambda, a12 = m(1, 2);
  const double a21 = m(2, 1), a22 = m(2, 2) - lambda;
  const double b1 = -m(1, 0), b2 = -m(2, 0);
  const double det = a11 * a22 - a12 * a21;
  const double x1 = (b1 * a22 - a12 * b2) / det;
  const double x2 = (a11 * b2 - b1 * a21) / det;
  const double sum = 1.0 + x1 + x2;
  return {1.0 / sum, x1 / sum, x2 / sum};
}

inline double consistency_defect(const copsim::PCMatrix& m) {
  const int n = m.order();
  double worst = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        worst = std::max(worst, std::fabs(m(i, j) * m(j, k) * m(k, i) - 1.0));
  return worst;
}

inline double koczkodaj_ki(const copsim::PCMatrix& m) {
  const int n = m.order();
  double worst = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (i == j || j == k || i == k) continue;
        const double t1 = std::fabs(1.0 - m(i, j) / (m(i, k) * m(k, j)));
        const double t2 = std::fabs(1.0 - (m(i, k) * m(k, j)) / m(i, j));
        worst = std::max(worst, std::min(t1, t2));
      }
  return worst;
}

struct Counts {
  long applicable = 0;
  long satisfied = 0;
};

inline Counts pop(const copsim::PCMatrix& m, const std::vector<double>& w) {
  const int n = m.order();
  Counts counts;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (m(i, j) > 1.0) {
        ++counts.applicable;
        if (w[i] > w[j]) ++counts.satisfied;
      }
    }
  return counts;
}

inline Counts poip(const copsim::PCMatrix& m, const std::vector<double>& w) {
  const int n = m.order();
  Counts counts;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          if (k == l) continue;
          if (k == i && l == j) continue;
          if (k == j && l == i) continue;
          if (m(i, j) > 1.0 && m(k, l) > 1.0 && m(i, j) > m(k, l)) {
            ++counts.applicable;
            if (w[i] / w[j] > w[k] / w[l]) ++counts.satisfied;
          }
        }
    }
  return counts;
}

inline long theorem1(const copsim::PCMatrix& m, double ki) {
  const int n = m.order();
  const double threshold = 1.0 / (1.0 - ki);
  long count = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && m(i, j) > threshold) ++count;
  return count;
}

inline long theorem2(const copsim::PCMatrix& m, double ki) {
  const int n = m.order();
  const double threshold = 1.0 / ((1.0 - ki) * (1.0 - ki));
  long count = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || !(m(i, j) > 1.0)) continue;
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          if (k == l) continue;
          if (k == i && l == j) continue;
          if (k == j && l == i) continue;
          if (m(k, l) > 1.0 && m(i, j) / m(k, l) > threshold) ++count;
        }
    }
  return count;
}

}  // namespace oracle
