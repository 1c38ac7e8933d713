#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "copsim/errors.hpp"
#include "copsim/pcm.hpp"
#include "oracles.hpp"

using copsim::DeltaScheme;
using copsim::DisturbanceSpec;
using copsim::Error;
using copsim::ErrorCode;
using copsim::PCMatrix;
using copsim::Rng;

namespace {

const std::vector<std::vector<double>> kExampleRows = {
    {1, 2, 8}, {0.5, 1, 2}, {0.125, 0.5, 1}};

PCMatrix consistent_from(const std::vector<double>& w) {
  std::vector<std::vector<double>> rows(w.size(),
                                        std::vector<double>(w.size()));
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = 0; j < w.size(); ++j) rows[i][j] = w[i] / w[j];
  return PCMatrix::from_rows(rows);
}

}  // namespace

TEST_CASE("pcm: identity-ratio matrix is valid and fully consistent") {
  const PCMatrix m =
      PCMatrix::from_rows({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}});
  CHECK(m.order() == 3);
  CHECK(copsim::consistency_defect(m) == doctest::Approx(0.0));
}

TEST_CASE("pcm: example matrix validates") {
  const PCMatrix m = PCMatrix::from_rows(kExampleRows);
  CHECK(m(0, 2) == 8.0);
  CHECK(m(2, 0) == 0.125);
}

TEST_CASE("pcm: 2x2 rejected as too small") {
  CHECK_THROWS_WITH_AS(PCMatrix::from_rows({{1, 2}, {0.5, 1}}),
                       doctest::Contains("OrderTooSmall"), Error);
}

TEST_CASE("pcm: non-square and bad entries rejected") {
  CHECK_THROWS_AS(PCMatrix::from_rows({{1, 2, 8}, {0.5, 1}, {0.125, 0.5, 1}}),
                  Error);
  try {
    PCMatrix::from_rows({{1, -2, 8}, {-0.5, 1, 2}, {0.125, 0.5, 1}});
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::non_positive_entry);
  }
  try {
    PCMatrix::from_rows({{1, 2, 8}, {0.51, 1, 2}, {0.125, 0.5, 1}});
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::reciprocity_violation);
    CHECK(std::string(e.what()).find("(1,2)") != std::string::npos);
  }
}

TEST_CASE("pcm: diagonal forced to exactly one") {
  auto rows = kExampleRows;
  rows[1][1] = 1.0 + 1e-13;  // within reciprocity tolerance of itself
  const PCMatrix m = PCMatrix::from_rows(rows);
  CHECK(m(1, 1) == 1.0);
}

TEST_CASE("pcm: consistency defect of consistent matrix is zero") {
  const PCMatrix m = consistent_from({2.0, 1.0, 0.5});
  CHECK(copsim::consistency_defect(m) <= 1e-10);
}

TEST_CASE("pcm: consistency defect of the example matrix is 1.0") {
  const PCMatrix m = PCMatrix::from_rows(kExampleRows);
  // frozen from the brute-force oracle: triple (0,2,1) gives 8*0.5*0.5 = 2
  CHECK(copsim::consistency_defect(m) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(copsim::consistency_defect(m) == oracle::consistency_defect(m));
}

TEST_CASE("pcm: consistency defect is permutation invariant") {
  Rng rng(91);
  for (int trial = 0; trial < 20; ++trial) {
    auto [w, base] = copsim::generate_consistent(4, rng);
    const DisturbanceSpec spec(2.5);
    const PCMatrix m = copsim::perturb(base, spec, rng);
    std::vector<int> perm = {2, 0, 3, 1};
    const PCMatrix p = m.permuted(perm);
    CHECK(copsim::consistency_defect(p) ==
          doctest::Approx(copsim::consistency_defect(m)).epsilon(1e-12));
  }
}

TEST_CASE("pcm: generate_consistent draws weights in [1,9], entries in [1/9,9]") {
  Rng rng(7);
  const auto [weights, matrix] = copsim::generate_consistent(9, rng);
  for (double w : weights.values) {
    CHECK(w >= 1.0);
    CHECK(w <= 9.0);
  }
  for (double entry : matrix.entries()) {
    CHECK(entry >= 1.0 / 9.0);
    CHECK(entry <= 9.0);
  }
  CHECK(copsim::consistency_defect(matrix) <= 1e-10);
}

TEST_CASE("pcm: generate_consistent is deterministic per seed") {
  Rng a(123), b(123), c(124);
  const auto ma = copsim::generate_consistent(5, a).second;
  const auto mb = copsim::generate_consistent(5, b).second;
  const auto mc = copsim::generate_consistent(5, c).second;
  CHECK(std::equal(ma.entries().begin(), ma.entries().end(),
                   mb.entries().begin()));
  CHECK_FALSE(std::equal(ma.entries().begin(), ma.entries().end(),
                         mc.entries().begin()));
}

TEST_CASE("pcm: disturbance spec requires open interval (1,4)") {
  CHECK_THROWS_AS(DisturbanceSpec(4.0), Error);
  CHECK_THROWS_AS(DisturbanceSpec(1.0), Error);
  CHECK_THROWS_AS(DisturbanceSpec(0.5), Error);
  CHECK_NOTHROW(DisturbanceSpec(1.0000001));
  CHECK_NOTHROW(DisturbanceSpec(3.9999999));
}

TEST_CASE("pcm: perturb at gamma -> 1 is near identity") {
  Rng rng(42);
  const auto [w, base] = copsim::generate_consistent(6, rng);
  const DisturbanceSpec spec(1.0 + 1e-9);
  const PCMatrix out = copsim::perturb(base, spec, rng);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      CHECK(out(i, j) == doctest::Approx(base(i, j)).epsilon(1e-8));
}

TEST_CASE("pcm: perturb keeps deltas inside [1/gamma, gamma]") {
  Rng rng(5);
  for (const DeltaScheme scheme :
       {DeltaScheme::uniform, DeltaScheme::log_uniform}) {
    for (int trial = 0; trial < 10; ++trial) {
      const double gamma = 1.1 + 0.27 * trial;
      auto [w, base] = copsim::generate_consistent(7, rng);
      const DisturbanceSpec spec(gamma, scheme);
      const PCMatrix out = copsim::perturb(base, spec, rng);
      for (int i = 0; i < 7; ++i)
        for (int j = i + 1; j < 7; ++j) {
          const double delta = out(i, j) / base(i, j);
          CHECK(delta >= 1.0 / gamma - 1e-12);
          CHECK(delta <= gamma + 1e-12);
        }
    }
  }
}

TEST_CASE("pcm: perturbed matrices satisfy all invariants") {
  Rng rng(77);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 3 + trial % 7;
    auto [w, base] = copsim::generate_consistent(n, rng);
    const DisturbanceSpec spec(1.5 + 0.09 * trial, trial % 2 == 0
                                                       ? DeltaScheme::uniform
                                                       : DeltaScheme::log_uniform);
    const PCMatrix out = copsim::perturb(base, spec, rng);
    // re-validation must succeed, i.e. reciprocity within 1e-12 and unit diag
    CHECK_NOTHROW(PCMatrix::from_entries(n, out.entries()));
    for (int i = 0; i < n; ++i) CHECK(out(i, i) == 1.0);
  }
}

TEST_CASE("pcm: perturb is deterministic per seed and spec") {
  Rng gen(9);
  const auto base = copsim::generate_consistent(5, gen).second;
  const DisturbanceSpec spec(2.0);
  Rng a(55), b(55);
  const PCMatrix pa = copsim::perturb(base, spec, a);
  const PCMatrix pb = copsim::perturb(base, spec, b);
  CHECK(std::equal(pa.entries().begin(), pa.entries().end(),
                   pb.entries().begin()));
}
