#include "stcvrp/rng.hpp"

#include <limits>
#include <stdexcept>

namespace stcvrp {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

TrialRng::TrialRng(std::uint64_t seed, std::uint64_t trial_index)
    : engine_(splitmix64(seed ^ splitmix64(trial_index + 1))) {}

std::size_t TrialRng::uniform_index(std::size_t n) {
  if (n == 0) throw std::invalid_argument("uniform_index needs a nonempty range");
  const std::uint64_t bound = static_cast<std::uint64_t>(n);
  // Largest multiple of `bound` that fits; draws above it are rejected.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t draw = engine_();
  while (draw >= limit) draw = engine_();
  return static_cast<std::size_t>(draw % bound);
}

}  // namespace stcvrp
