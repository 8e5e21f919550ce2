#pragma once

// Translation operators T = i (2pi)^-1 l d^mu (raised-index derivative, so a
// plane wave picks up the scalar factor l p_mu / 2pi on every axis),
// reflection solution maps psi'(pt) = gamma^mu psi(R_mu pt), and verification
// of the group-theoretical rewrite
//   (1/l_t) gamma^t T_t psi - sum_k (1/l_k) gamma^k T_k psi = (1/l_m) psi,
// which is the Dirac equation scaled by 1/2pi once (1/l_mu) T_mu is cancelled
// to i (2pi)^-1 d^mu (finite even when p_mu = 0).

#include "dirackit/planewave.hpp"
#include "dirackit/rng.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dirackit {

template <class Scalar = double>
struct TranslationOperator {
  Axis axis;
  Scalar l;  // translation distance; finite and positive for a valid operator
};

// i (2pi)^-1 l d^axis psi at pt; d^mu psi = -i p_mu psi for every axis of a
// plane wave, so the result is (l p_axis / 2pi) psi(pt)
template <class Scalar>
Bispinor<Scalar> apply_translation(const TranslationOperator<Scalar>& op,
                                   const BispinorWave<Scalar>& w,
                                   const SpacetimePoint<Scalar>& pt) {
  const Scalar two_pi = 2 * std::numbers::pi_v<Scalar>;
  const Complex<Scalar> i(0, 1);
  const Complex<Scalar> raised_derivative = -i * w.momentum[op.axis];
  return (i / two_pi * op.l * raised_derivative) * evaluate(w, pt);
}

template <class Scalar = double>
struct AxisCheck {
  Scalar max_residual{};
  int samples{};
  bool pass{};
};

template <class Scalar = double>
struct TranslationReport {
  std::array<AxisCheck<Scalar>, 4> axes;  // indexed by Axis
  Scalar tolerance{};
  bool pass{};
};

// For each axis, at random points x: (a) T psi evaluated at x + l e_axis
// equals psi(x), and (b) psi(x + l e_axis) = psi(x), with l = 2pi / p_axis
// (one wavelength; the step is signed when the momentum component is negative).
template <class Scalar>
TranslationReport<Scalar> verify_translation_relation(const BispinorWave<Scalar>& w, int samples,
                                                      SplitMix64& rng,
                                                      Scalar tolerance = Scalar(1e-10)) {
  const Scalar two_pi = 2 * std::numbers::pi_v<Scalar>;
  for (Axis a : all_axes)
    if (w.momentum[a] == 0)
      throw std::domain_error("verify_translation_relation: momentum component on axis " +
                              std::string(axis_name(a)) + " is zero, wavelength undefined");
  if (samples < 1) throw std::invalid_argument("verify_translation_relation: samples >= 1");

  TranslationReport<Scalar> rep;
  rep.tolerance = tolerance;
  rep.pass = true;
  for (Axis a : all_axes) {
    const Scalar l = two_pi / w.momentum[a];
    const TranslationOperator<Scalar> op{a, l};
    Scalar worst = 0;
    for (int s = 0; s < samples; ++s) {
      const SpacetimePoint<Scalar> pt{rng.uniform(-4, 4), rng.uniform(-4, 4),
                                      rng.uniform(-4, 4), rng.uniform(-4, 4)};
      const SpacetimePoint<Scalar> stepped = pt.shifted(a, l);
      const Bispinor<Scalar> base = evaluate(w, pt);
      worst = std::max(worst, (apply_translation(op, w, stepped) - base).norm());
      worst = std::max(worst, (evaluate(w, stepped) - base).norm());
    }
    auto& axis_check = rep.axes[static_cast<int>(a)];
    axis_check = {worst, samples, worst <= tolerance * w.amplitude.norm()};
    rep.pass = rep.pass && axis_check.pass;
  }
  return rep;
}

template <class Scalar = double>
struct ReflectionMap {
  Axis axis;  // preserved axis; the other three coordinates flip sign
};

template <class Scalar>
SpacetimePoint<Scalar> reflect_point(const ReflectionMap<Scalar>& map,
                                     const SpacetimePoint<Scalar>& pt) {
  SpacetimePoint<Scalar> out;
  out.t = map.axis == Axis::T ? pt.t : -pt.t;
  out.x = map.axis == Axis::X ? pt.x : -pt.x;
  out.y = map.axis == Axis::Y ? pt.y : -pt.y;
  out.z = map.axis == Axis::Z ? pt.z : -pt.z;
  return out;
}

// Evaluable field phi(pt) = gamma^axis psi(R_axis pt).  The same field is a
// plane wave again: momentum components on the flipped axes change sign and
// the amplitude picks up gamma^axis, which as_wave() exposes.
template <class Scalar = double>
struct ReflectedField {
  ReflectionMap<Scalar> map;
  BispinorWave<Scalar> base;

  Bispinor<Scalar> operator()(const SpacetimePoint<Scalar>& pt) const {
    return gamma_set<Scalar>()[map.axis] * evaluate(base, reflect_point(map, pt));
  }

  BispinorWave<Scalar> as_wave() const {
    FourMomentum<Scalar> p = base.momentum;
    if (map.axis != Axis::T) p.p_t = -p.p_t;
    if (map.axis != Axis::X) p.p_x = -p.p_x;
    if (map.axis != Axis::Y) p.p_y = -p.p_y;
    if (map.axis != Axis::Z) p.p_z = -p.p_z;
    return {p, gamma_set<Scalar>()[map.axis] * base.amplitude};
  }
};

template <class Scalar>
ReflectedField<Scalar> reflect_solution(const ReflectionMap<Scalar>& map,
                                        const BispinorWave<Scalar>& w) {
  return {map, w};
}

// pointwise residual of the sliding form, computed term by term in the
// cancelled representation (1/l_mu) T_mu = i (2pi)^-1 d^mu; equals
// dirac_residual / 2pi up to roundoff
template <class Scalar>
Scalar sliding_form_residual(const BispinorWave<Scalar>& w, const SpacetimePoint<Scalar>& pt) {
  const Scalar two_pi = 2 * std::numbers::pi_v<Scalar>;
  const GammaSet<Scalar>& g = gamma_set<Scalar>();
  const Bispinor<Scalar> psi = evaluate(w, pt);
  Bispinor<Scalar> acc = -Complex<Scalar>(w.momentum.m / two_pi) * psi;
  for (Axis a : all_axes) {
    const Bispinor<Scalar> term = g[a] * ((w.momentum[a] / two_pi) * psi);
    acc += Scalar(metric_sign(a)) * term;
  }
  return acc.norm();
}

template <class Scalar = double>
struct SlidingFormReport {
  Scalar max_residual{};
  int samples{};
  Scalar tolerance{};
  bool pass{};
};

template <class Scalar>
SlidingFormReport<Scalar> verify_sliding_form(const BispinorWave<Scalar>& w, int samples,
                                              SplitMix64& rng,
                                              Scalar tolerance = Scalar(1e-10)) {
  if (!(w.momentum.m > 0))
    throw std::domain_error("verify_sliding_form: massless wave has no mass wavelength l_m");
  if (samples < 1) throw std::invalid_argument("verify_sliding_form: samples >= 1");
  SlidingFormReport<Scalar> rep;
  rep.samples = samples;
  rep.tolerance = tolerance;
  for (int s = 0; s < samples; ++s) {
    const SpacetimePoint<Scalar> pt{rng.uniform(-4, 4), rng.uniform(-4, 4), rng.uniform(-4, 4),
                                    rng.uniform(-4, 4)};
    rep.max_residual = std::max(rep.max_residual, sliding_form_residual(w, pt));
  }
  rep.pass = rep.max_residual <= tolerance * w.amplitude.norm();
  return rep;
}

}  // namespace dirackit
