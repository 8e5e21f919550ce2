#pragma once

// One-dimensional closed-manifold analogy: the representation function
// exp(-2 pi i x / l0) on a circle of perimeter l0, the fixed-perimeter
// ellipse family pi [1.5 (a+b) - sqrt(ab)] = l0, and the growth of the
// occupied region when the euclidean Y axis is traded for pseudo-euclidean
// time, x^2/a^2 - T^2/b^2 = 1.

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace dirackit {

template <class Scalar = double>
struct CircleManifold {
  Scalar l0;  // perimeter
  Scalar m0;  // 2 pi / l0
};

template <class Scalar>
CircleManifold<Scalar> make_circle(Scalar l0) {
  if (!(l0 > 0)) throw std::domain_error("make_circle: perimeter must be positive");
  return {l0, 2 * std::numbers::pi_v<Scalar> / l0};
}

// phi(x) = exp(-2 pi i freq_scale x / l0); freq_scale = 1 is the
// representation function, other values detune it
template <class Scalar>
std::complex<Scalar> circle_wave(const CircleManifold<Scalar>& man, Scalar x,
                                 Scalar freq_scale = 1) {
  return std::polar(Scalar(1), -freq_scale * man.m0 * x);
}

// |i dphi/dx - m0 phi| with the analytic derivative; m0 |freq_scale - 1| algebraically
template <class Scalar>
Scalar representation_residual(const CircleManifold<Scalar>& man, Scalar x,
                               Scalar freq_scale = 1) {
  const std::complex<Scalar> i(0, 1);
  const std::complex<Scalar> phi = circle_wave(man, x, freq_scale);
  const std::complex<Scalar> dphi = -i * freq_scale * man.m0 * phi;
  return std::abs(i * dphi - man.m0 * phi);
}

// |T phi (x + l0) - phi(x)| with T = i l0 (2pi)^-1 d/dx acting analytically
template <class Scalar>
Scalar translation_deviation(const CircleManifold<Scalar>& man, Scalar x) {
  const std::complex<Scalar> i(0, 1);
  const std::complex<Scalar> translated =
      i * (man.l0 / (2 * std::numbers::pi_v<Scalar>)) *
      (-i * man.m0 * circle_wave(man, x + man.l0));
  return std::abs(translated - circle_wave(man, x));
}

template <class Scalar>
Scalar periodicity_deviation(const CircleManifold<Scalar>& man, Scalar x) {
  return std::abs(circle_wave(man, x + man.l0) - circle_wave(man, x));
}

template <class Scalar = double>
struct EllipseShape {
  Scalar a, b;
};

// pi [1.5 (a + b) - sqrt(a b)]; exact (not approximate) for circles a = b
template <class Scalar>
Scalar ellipse_perimeter(Scalar a, Scalar b) {
  return std::numbers::pi_v<Scalar> * (Scalar(1.5) * (a + b) - std::sqrt(a * b));
}

// largest admissible semiaxis, where the constraint degenerates to b = 0
template <class Scalar>
Scalar max_semiaxis(Scalar l0) {
  return l0 / (Scalar(1.5) * std::numbers::pi_v<Scalar>);
}

// Solve pi [1.5 (a+b) - sqrt(ab)] = l0 for b at fixed a via the quadratic in
// u = sqrt(b): 1.5 u^2 - sqrt(a) u + (1.5 a - l0/pi) = 0.  The larger root is
// taken: it joins continuously to the circle solution at a = b and keeps b
// positive across the whole family.
template <class Scalar>
EllipseShape<Scalar> solve_ellipse_b(Scalar l0, Scalar a) {
  if (!(l0 > 0)) throw std::domain_error("solve_ellipse_b: perimeter must be positive");
  const Scalar a_max = max_semiaxis(l0);
  if (!(a >= 0) || a > a_max)
    throw std::domain_error("solve_ellipse_b: semiaxis outside [0, l0/(1.5 pi)]");
  const Scalar disc = 6 * (l0 / std::numbers::pi_v<Scalar>) - 8 * a;
  if (disc < 0) throw std::domain_error("solve_ellipse_b: negative discriminant");
  const Scalar u = (std::sqrt(a) + std::sqrt(disc)) / 3;
  return {a, u * u};
}

template <class Scalar = double>
struct RegionSnapshot {
  Scalar T;
  Scalar x_min, x_max;  // x_min = -x_max, the family is symmetric in +-a
};

// x(a, T) on the x >= a branch of x^2/a^2 - T^2/b^2 = 1
template <class Scalar>
Scalar hyperbola_x(Scalar a, Scalar b, Scalar T) {
  return a * std::sqrt(1 + (T * T) / (b * b));
}

// Sweep a over `grid` values in (0, a_max], place each ellipse member on its
// hyperbola, and report the extent of the occupied region.  A degenerate
// b = 0 member contributes x = a at T = 0 and no finite point otherwise.
template <class Scalar>
RegionSnapshot<Scalar> region_at(Scalar l0, Scalar T, int grid = 1024) {
  if (grid < 2) throw std::invalid_argument("region_at: grid must be >= 2");
  const Scalar a_max = max_semiaxis(l0);
  Scalar best = 0;
  for (int i = 1; i <= grid; ++i) {
    const EllipseShape<Scalar> e = solve_ellipse_b(l0, a_max * (Scalar(i) / grid));
    if (e.b > 0)
      best = std::max(best, hyperbola_x(e.a, e.b, T));
    else if (T == 0)
      best = std::max(best, e.a);
  }
  return {T, -best, best};
}

template <class Scalar>
std::vector<RegionSnapshot<Scalar>> propagate(Scalar l0, Scalar t_start, Scalar t_end, int steps,
                                              int grid = 1024) {
  if (!(t_start < t_end)) throw std::invalid_argument("propagate: need t_start < t_end");
  if (steps < 2) throw std::invalid_argument("propagate: steps must be >= 2");
  std::vector<RegionSnapshot<Scalar>> series;
  series.reserve(steps);
  for (int i = 0; i < steps; ++i) {
    const Scalar T = t_start + (t_end - t_start) * (Scalar(i) / (steps - 1));
    series.push_back(region_at(l0, T, grid));
  }
  return series;
}

}  // namespace dirackit
