#pragma once

#include <cstdint>

namespace cyberdef::sim {

// SplitMix64. Small, fast, and fully portable: the bit stream depends only on
// the seed, never on the standard library's distribution implementations.
// All randomness in the simulator flows through this so that identical seeds
// give identical traces on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform draw in [0, n). n must be > 0.
  std::uint64_t below(std::uint64_t n) {
    // Rejection sampling to avoid modulo bias.
    const std::uint64_t limit = ~0ull - (~0ull % n);
    std::uint64_t v = next();
    while (v >= limit) v = next();
    return v % n;
  }

  /// Bernoulli draw with probability num/den.
  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

  /// Derive an independent stream, e.g. one per episode.
  Rng fork(std::uint64_t salt) {
    Rng r(state_ ^ (0xd6e8feb86659fd93ull * (salt + 1)));
    r.next();
    return r;
  }

 private:
  std::uint64_t state_;
};

}  // namespace cyberdef::sim
