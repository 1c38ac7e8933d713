#include "copsim/cop.hpp"

#include <cmath>

namespace copsim {

namespace {

struct OrderedPair {
  int i;
  int j;
  double entry;   // c_ij
  int mirror;     // index of (j,i) in the pair list
};

// All ordered pairs (i,j), i != j, in row-major order.
std::vector<OrderedPair> ordered_pairs(const PCMatrix& matrix) {
  const int n = matrix.order();
  std::vector<OrderedPair> pairs;
  pairs.reserve(static_cast<std::size_t>(n) * (n - 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) pairs.push_back({i, j, matrix(i, j), -1});
    }
  }
  // position of (j,i): pairs are grouped in n-1 blocks per row
  auto index_of = [n](int i, int j) {
    return i * (n - 1) + (j > i ? j - 1 : j);
  };
  for (auto& p : pairs) p.mirror = index_of(p.j, p.i);
  return pairs;
}

}  // namespace

long pop_condition_count(int order) {
  return static_cast<long>(order) * order - order;
}

long poip_condition_count(int order) {
  const long pairs = pop_condition_count(order);
  return pairs * (pairs - 2);
}

CopCounts pop_evaluate(const PCMatrix& matrix, const PriorityVector& weights) {
  const int n = matrix.order();
  CopCounts counts;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j || !(matrix(i, j) > 1.0)) continue;
      ++counts.applicable;
      if (weights.weights[i] > weights.weights[j]) ++counts.satisfied;
    }
  }
  return counts;
}

CopCounts poip_evaluate(const PCMatrix& matrix, const PriorityVector& weights) {
  const auto pairs = ordered_pairs(matrix);
  CopCounts counts;
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    if (!(pairs[p].entry > 1.0)) continue;
    const double ratio_p =
        weights.weights[pairs[p].i] / weights.weights[pairs[p].j];
    for (std::size_t q = 0; q < pairs.size(); ++q) {
      if (q == p || static_cast<int>(q) == pairs[p].mirror) continue;
      if (!(pairs[q].entry > 1.0) || !(pairs[p].entry > pairs[q].entry)) continue;
      ++counts.applicable;
      const double ratio_q =
          weights.weights[pairs[q].i] / weights.weights[pairs[q].j];
      if (ratio_p > ratio_q) ++counts.satisfied;
    }
  }
  return counts;
}

long theorem1_count(const PCMatrix& matrix, double ki) {
  const int n = matrix.order();
  const double threshold = 1.0 / (1.0 - ki);
  long count = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && matrix(i, j) > threshold) ++count;
    }
  }
  return count;
}

long theorem2_count(const PCMatrix& matrix, double ki,
                    bool restrict_to_poip_universe) {
  const auto pairs = ordered_pairs(matrix);
  const double root = 1.0 / (1.0 - ki);
  const double threshold = root * root;
  long count = 0;
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    if (restrict_to_poip_universe && !(pairs[p].entry > 1.0)) continue;
    for (std::size_t q = 0; q < pairs.size(); ++q) {
      if (q == p || static_cast<int>(q) == pairs[p].mirror) continue;
      if (restrict_to_poip_universe && !(pairs[q].entry > 1.0)) continue;
      if (pairs[p].entry / pairs[q].entry > threshold) ++count;
    }
  }
  return count;
}

std::vector<IndexPair> pop_applicable_pairs(const PCMatrix& matrix) {
  const int n = matrix.order();
  std::vector<IndexPair> out;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && matrix(i, j) > 1.0) out.push_back({i, j});
    }
  }
  return out;
}

std::vector<IndexPair> pop_violated_pairs(const PCMatrix& matrix,
                                          const PriorityVector& weights) {
  std::vector<IndexPair> out;
  for (const auto& pair : pop_applicable_pairs(matrix)) {
    if (!(weights.weights[pair.i] > weights.weights[pair.j])) out.push_back(pair);
  }
  return out;
}

std::vector<IndexPair> theorem1_pairs(const PCMatrix& matrix, double ki) {
  const int n = matrix.order();
  const double threshold = 1.0 / (1.0 - ki);
  std::vector<IndexPair> out;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && matrix(i, j) > threshold) out.push_back({i, j});
    }
  }
  return out;
}

CopReport evaluate_cop(const PCMatrix& matrix, const PriorityVector& ev,
                       const PriorityVector& gm, double ki,
                       bool with_theorem2) {
  CopReport report;
  const CopCounts pop_ev = pop_evaluate(matrix, ev);
  const CopCounts pop_gm = pop_evaluate(matrix, gm);
  const CopCounts poip_ev = poip_evaluate(matrix, ev);
  const CopCounts poip_gm = poip_evaluate(matrix, gm);
  report.pop_applicable = pop_ev.applicable;
  report.pop_satisfied_ev = pop_ev.satisfied;
  report.pop_satisfied_gm = pop_gm.satisfied;
  report.poip_applicable = poip_ev.applicable;
  report.poip_satisfied_ev = poip_ev.satisfied;
  report.poip_satisfied_gm = poip_gm.satisfied;
  report.pop_total = pop_condition_count(matrix.order());
  report.poip_total = poip_condition_count(matrix.order());
  report.th1_guaranteed = theorem1_count(matrix, ki);
  report.th2_guaranteed = with_theorem2 ? theorem2_count(matrix, ki) : -1;
  return report;
}

}  // namespace copsim
