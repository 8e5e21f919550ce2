#pragma once

// Plane-wave bispinor solutions psi = psi_p exp(-i (p_t t - p_x x - p_y y - p_z z))
// of the free Dirac equation, the inverse-wavelength form of the mass shell,
// and residual-based verification (analytic and finite-difference derivatives).

#include "dirackit/clifford.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dirackit {

template <class Scalar = double>
struct FourMomentum {
  Scalar p_t{}, p_x{}, p_y{}, p_z{};
  Scalar m{};

  Scalar operator[](Axis a) const {
    switch (a) {
      case Axis::T: return p_t;
      case Axis::X: return p_x;
      case Axis::Y: return p_y;
      default: return p_z;
    }
  }

  // |p_t^2 - |p|^2 - m^2| over the natural quadratic scale
  Scalar shell_defect() const {
    const Scalar q = p_t * p_t - p_x * p_x - p_y * p_y - p_z * p_z - m * m;
    const Scalar scale = p_t * p_t + p_x * p_x + p_y * p_y + p_z * p_z + m * m;
    return scale > 0 ? std::abs(q) / scale : std::abs(q);
  }
};

template <class Scalar>
bool is_on_shell(const FourMomentum<Scalar>& p, Scalar tol = Scalar(1e-12)) {
  return p.shell_defect() <= tol;
}

// positive-energy branch: p_t = +sqrt(m^2 + |spatial|^2)
template <class Scalar>
FourMomentum<Scalar> make_on_shell(const std::array<Scalar, 3>& spatial, Scalar m) {
  if (m < 0) throw std::domain_error("make_on_shell: mass must be non-negative");
  const Scalar p2 = spatial[0] * spatial[0] + spatial[1] * spatial[1] + spatial[2] * spatial[2];
  if (m == 0 && p2 == 0)
    throw std::domain_error("make_on_shell: massless wave needs nonzero momentum");
  return {std::sqrt(m * m + p2), spatial[0], spatial[1], spatial[2], m};
}

template <class Scalar = double>
struct SpacetimePoint {
  Scalar t{}, x{}, y{}, z{};

  Scalar operator[](Axis a) const {
    switch (a) {
      case Axis::T: return t;
      case Axis::X: return x;
      case Axis::Y: return y;
      default: return z;
    }
  }

  SpacetimePoint shifted(Axis a, Scalar d) const {
    SpacetimePoint p = *this;
    switch (a) {
      case Axis::T: p.t += d; break;
      case Axis::X: p.x += d; break;
      case Axis::Y: p.y += d; break;
      default: p.z += d; break;
    }
    return p;
  }
};

// inverse lengths 1/l_mu = p_mu / 2pi and 1/l_m = m / 2pi; stored inverted so
// vanishing momentum components stay finite
template <class Scalar = double>
struct WavelengthSet {
  std::array<Scalar, 4> inv_l{};
  Scalar inv_l_m{};

  // |(1/l_t)^2 - (1/l_x)^2 - (1/l_y)^2 - (1/l_z)^2 - (1/l_m)^2|, relative
  Scalar shell_defect() const {
    const Scalar q = inv_l[0] * inv_l[0] - inv_l[1] * inv_l[1] - inv_l[2] * inv_l[2] -
                     inv_l[3] * inv_l[3] - inv_l_m * inv_l_m;
    const Scalar scale = inv_l[0] * inv_l[0] + inv_l[1] * inv_l[1] + inv_l[2] * inv_l[2] +
                         inv_l[3] * inv_l[3] + inv_l_m * inv_l_m;
    return scale > 0 ? std::abs(q) / scale : std::abs(q);
  }
};

template <class Scalar>
WavelengthSet<Scalar> wavelengths(const FourMomentum<Scalar>& p) {
  const Scalar two_pi = 2 * std::numbers::pi_v<Scalar>;
  WavelengthSet<Scalar> w;
  for (Axis a : all_axes) w.inv_l[static_cast<int>(a)] = p[a] / two_pi;
  w.inv_l_m = p.m / two_pi;
  return w;
}

template <class Scalar = double>
struct BispinorWave {
  FourMomentum<Scalar> momentum;
  Bispinor<Scalar> amplitude;
};

// D(p) = gamma^t p_t - gamma^x p_x - gamma^y p_y - gamma^z p_z - m I;
// plane waves solve the Dirac equation iff D(p) psi_p = 0
template <class Scalar>
ComplexMatrix4<Scalar> momentum_space_operator(const FourMomentum<Scalar>& p) {
  const GammaSet<Scalar>& g = gamma_set<Scalar>();
  ComplexMatrix4<Scalar> d = -p.m * ComplexMatrix4<Scalar>::Identity();
  for (Axis a : all_axes) d += Scalar(metric_sign(a)) * p[a] * g[a];
  return d;
}

// Orthonormal basis of the two-dimensional null space of D(p), phases fixed
// so the first sizable component of each vector is real and positive.
template <class Scalar>
std::array<Bispinor<Scalar>, 2> solve_amplitude(const FourMomentum<Scalar>& p) {
  const ComplexMatrix4<Scalar> d = momentum_space_operator(p);
  Eigen::JacobiSVD<ComplexMatrix4<Scalar>> svd(d, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();  // descending
  if (!(sv(2) < Scalar(1e-10) * sv(0) && sv(1) > Scalar(1e-6) * sv(0)))
    throw std::domain_error("solve_amplitude: null space dimension != 2 (momentum off shell?)");
  std::array<Bispinor<Scalar>, 2> basis{svd.matrixV().col(2), svd.matrixV().col(3)};
  for (auto& v : basis) {
    for (int k = 0; k < 4; ++k) {
      const Scalar mag = std::abs(v(k));
      if (mag > Scalar(0.25)) {  // a unit 4-vector has a component >= 1/2
        v *= std::conj(v(k)) / mag;
        break;
      }
    }
  }
  return basis;
}

template <class Scalar>
Complex<Scalar> phase_factor(const FourMomentum<Scalar>& p, const SpacetimePoint<Scalar>& pt) {
  const Scalar phase = -(p.p_t * pt.t - p.p_x * pt.x - p.p_y * pt.y - p.p_z * pt.z);
  return std::polar(Scalar(1), phase);
}

template <class Scalar>
Bispinor<Scalar> evaluate(const BispinorWave<Scalar>& w, const SpacetimePoint<Scalar>& pt) {
  return w.amplitude * phase_factor(w.momentum, pt);
}

// Same value assembled from wavelengths, exp(-2 pi i (t/l_t - x/l_x - y/l_y - z/l_z)).
// A vanishing momentum component gives l = inf and a zero phase contribution.
template <class Scalar>
Bispinor<Scalar> evaluate_wavelength_form(const BispinorWave<Scalar>& w,
                                          const SpacetimePoint<Scalar>& pt) {
  const Scalar two_pi = 2 * std::numbers::pi_v<Scalar>;
  const WavelengthSet<Scalar> ws = wavelengths(w.momentum);
  Scalar cycles = 0;  // t/l_t - x/l_x - y/l_y - z/l_z
  for (Axis a : all_axes) {
    const Scalar l = 1 / ws.inv_l[static_cast<int>(a)];
    cycles += Scalar(metric_sign(a)) * pt[a] / l;
  }
  return w.amplitude * std::polar(Scalar(1), -two_pi * cycles);
}

// || (i gamma^mu d_mu - m) psi || at pt with analytic derivatives of the
// plane wave; collapses to || D(p) psi(pt) ||
template <class Scalar>
Scalar dirac_residual(const BispinorWave<Scalar>& w, const SpacetimePoint<Scalar>& pt) {
  return (momentum_space_operator(w.momentum) * evaluate(w, pt)).norm();
}

// same residual with d_mu replaced by second-order central differences
template <class Scalar>
Scalar dirac_residual_fd(const BispinorWave<Scalar>& w, const SpacetimePoint<Scalar>& pt,
                         Scalar h) {
  if (!(h > 0)) throw std::invalid_argument("dirac_residual_fd: spacing must be positive");
  const GammaSet<Scalar>& g = gamma_set<Scalar>();
  const Complex<Scalar> i(0, 1);
  Bispinor<Scalar> acc = -Complex<Scalar>(w.momentum.m) * evaluate(w, pt);
  for (Axis a : all_axes) {
    const Bispinor<Scalar> d =
        (evaluate(w, pt.shifted(a, h)) - evaluate(w, pt.shifted(a, -h))) / (2 * h);
    acc += i * (g[a] * d);
  }
  return acc.norm();
}

}  // namespace dirackit
