#pragma once

#include <cstdint>
#include <random>

namespace copsim {

// splitmix64 finalizer; used to derive well-mixed child seeds.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Child seed for one simulation cell. Chained splitmix64 over the cell key,
// so any worker can reproduce a single matrix from (master, n, level, rep)
// without sharing a stream.
constexpr std::uint64_t child_seed(std::uint64_t master_seed, std::uint64_t n,
                                   std::uint64_t gamma_index,
                                   std::uint64_t replicate) noexcept {
  std::uint64_t s = mix64(master_seed);
  s = mix64(s ^ n);
  s = mix64(s ^ gamma_index);
  return mix64(s ^ replicate);
}

/// Deterministic uniform double stream on top of std::mt19937_64.
///
/// The double conversion is pinned to (x >> 11) * 2^-53 rather than
/// std::uniform_real_distribution, whose algorithm is implementation
/// defined; outputs are therefore identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // uniform on [0, 1)
  double next_unit() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // uniform on [lo, hi)
  double uniform(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace copsim
