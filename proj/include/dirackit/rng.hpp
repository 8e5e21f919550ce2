#pragma once

// splitmix64 (Vigna's public-domain mixer) driven in counter mode: the state
// walks the Weyl sequence seed + n * 0x9E3779B97F4A7C15 and every output is a
// pure function of seed and step index.  Chosen so seeded runs reproduce
// byte-identically across platforms and implementations.

#include <cstdint>

namespace dirackit {

struct SplitMix64 {
  std::uint64_t state = 0;

  SplitMix64() = default;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // uniform in [0, 1) with 53 random bits
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  // random sign, +1 or -1
  double sign() { return (next_u64() & 1ull) ? 1.0 : -1.0; }
};

}  // namespace dirackit
