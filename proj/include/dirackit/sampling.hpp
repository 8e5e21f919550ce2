#pragma once

// Seeded random inputs shared by the test suites and the command-line
// front end, so both exercise identical distributions.

#include "dirackit/planewave.hpp"
#include "dirackit/rng.hpp"

#include <array>
#include <cmath>

namespace dirackit {

// masses cycled through the standard verification set {0, 0.5, 1, 10}
inline constexpr std::array<double, 4> sample_masses{0, 0.5, 1, 10};

// on-shell momentum with |spatial| <= 10 and mass from the cycle
inline FourMomentum<double> random_on_shell(SplitMix64& rng, int index) {
  const double m = sample_masses[index % sample_masses.size()];
  std::array<double, 3> spatial{rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(-5, 5)};
  // a massless wave needs nonzero momentum
  if (m == 0 && std::abs(spatial[0]) < 0.1) spatial[0] += 1;
  return make_on_shell(spatial, m);
}

// massive momentum with every component bounded away from zero, as the
// uncancelled wavelength operators require
inline FourMomentum<double> random_all_nonzero(SplitMix64& rng) {
  std::array<double, 3> spatial;
  for (double& c : spatial) c = rng.sign() * rng.uniform(0.5, 5);
  return make_on_shell(spatial, rng.uniform(0.5, 4));
}

inline SpacetimePoint<double> random_point(SplitMix64& rng, double range = 4) {
  return {rng.uniform(-range, range), rng.uniform(-range, range), rng.uniform(-range, range),
          rng.uniform(-range, range)};
}

inline Bispinor<double> random_bispinor(SplitMix64& rng) {
  Bispinor<double> b;
  for (int k = 0; k < 4; ++k) b(k) = Complex<double>(rng.uniform(-1, 1), rng.uniform(-1, 1));
  return b;
}

}  // namespace dirackit
