#pragma once

#include <cstdint>
#include <vector>

#include "copsim/pcm.hpp"
#include "copsim/priority.hpp"

namespace copsim {

/// Counts for one family of order-preservation conditions.
struct CopCounts {
  long applicable = 0;
  long satisfied = 0;

  long violated() const { return applicable - satisfied; }
};

/// Per-matrix bookkeeping of both condition families and the subsets
/// guaranteed by the two sufficient-condition theorems. The theorem counts
/// depend only on the matrix and its inconsistency, not on the method.
struct CopReport {
  long pop_applicable = 0;
  long pop_satisfied_ev = 0;
  long pop_satisfied_gm = 0;
  long poip_applicable = 0;
  long poip_satisfied_ev = 0;
  long poip_satisfied_gm = 0;
  long pop_total = 0;   // n^2 - n
  long poip_total = 0;  // (n^2 - n)(n^2 - n - 2)
  long th1_guaranteed = 0;
  long th2_guaranteed = -1;  // -1 = not computed
};

long pop_condition_count(int order);   // n^2 - n
long poip_condition_count(int order);  // (n^2 - n)(n^2 - n - 2)

/// All ordered pairs (i,j), i != j, with c_ij > 1 (strict); a pair is
/// satisfied when additionally w_i > w_j (strict, ties count as violations).
CopCounts pop_evaluate(const PCMatrix& matrix, const PriorityVector& weights);

/// Quadruples (i,j,k,l) with i != j, k != l, (k,l) not in {(i,j),(j,i)};
/// applicable when c_ij > 1, c_kl > 1 and c_ij > c_kl, satisfied when
/// additionally w_i/w_j > w_k/w_l. All inequalities strict.
CopCounts poip_evaluate(const PCMatrix& matrix, const PriorityVector& weights);

/// Ordered pairs with c_ij > 1/(1 - ki), the antecedent that guarantees
/// w_i > w_j for both prioritization methods.
long theorem1_count(const PCMatrix& matrix, double ki);

/// Quadruples from the POIP universe (c_ij > 1, c_kl > 1) with
/// c_ij/c_kl > (1/(1 - ki))^2. Pass restrict_to_poip_universe = false to
/// drop the two antecedent bounds and count over all index-valid quadruples.
long theorem2_count(const PCMatrix& matrix, double ki,
                    bool restrict_to_poip_universe = true);

struct IndexPair {
  int i;
  int j;
};

// Pair lists backing the single-matrix audit output.
std::vector<IndexPair> pop_applicable_pairs(const PCMatrix& matrix);
std::vector<IndexPair> pop_violated_pairs(const PCMatrix& matrix,
                                          const PriorityVector& weights);
std::vector<IndexPair> theorem1_pairs(const PCMatrix& matrix, double ki);

CopReport evaluate_cop(const PCMatrix& matrix, const PriorityVector& ev,
                       const PriorityVector& gm, double ki,
                       bool with_theorem2 = true);

}  // namespace copsim
