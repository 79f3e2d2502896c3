#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace stcvrp {

/// SplitMix64 finalizer (Steele, Lea, Flood 2014).
std::uint64_t splitmix64(std::uint64_t x);

/// Per-trial random stream: std::mt19937_64 seeded with
/// splitmix64(seed ^ splitmix64(trial_index + 1)). Both algorithms are fully
/// specified, and bounded draws use rejection sampling instead of
/// std::uniform_int_distribution, so draws match on every platform.
class TrialRng {
 public:
  TrialRng(std::uint64_t seed, std::uint64_t trial_index);

  /// Uniform in [0, n). n must be positive.
  std::size_t uniform_index(std::size_t n);

  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace stcvrp
