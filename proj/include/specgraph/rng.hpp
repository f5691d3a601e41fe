#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace specgraph {

// Counter-based deterministic random values: every draw is a pure function
// of (seed, counter), so any sample can be reproduced in isolation.
namespace rng {

inline std::uint64_t mix(std::uint64_t seed, std::uint64_t counter) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (counter + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Uniform in [0, 1).
inline double uniform(std::uint64_t seed, std::uint64_t counter) {
  return static_cast<double>(mix(seed, counter) >> 11) * 0x1.0p-53;
}

// Standard normal via Box-Muller; one value per counter.
inline double normal(std::uint64_t seed, std::uint64_t counter) {
  const double u1 =
      (static_cast<double>(mix(seed, 2 * counter) >> 11) + 1.0) * 0x1.0p-53;
  const double u2 = uniform(seed, 2 * counter + 1);
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace rng

// Stateful convenience wrapper over the counter scheme.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t start = 0)
      : seed_(seed), counter_(start) {}

  std::uint64_t next_u64() { return rng::mix(seed_, counter_++); }
  double next_uniform() { return rng::uniform(seed_, counter_++); }
  double next_normal() { return rng::normal(seed_, counter_++); }

  // Uniform integer in [0, bound) via multiply-shift; bound > 0.
  std::uint64_t next_below(std::uint64_t bound) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next_u64()) * bound) >> 64);
  }

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_;
};

}  // namespace specgraph
