#pragma once

#include <cstdint>
#include <random>

namespace superpoint {

/// Seeded sampler. mt19937_64 has a standard-pinned sequence and we draw with
/// plain modulo, so replay is exact across platforms and runs.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  /// Uniform integer in [lo, hi].
  int uniform(int lo, int hi) {
    return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  bool coin() { return (next() & 1) != 0; }

 private:
  std::mt19937_64 eng_;
};

}  // namespace superpoint
