#pragma once

// Composable verification suites.  The command-line front end, the unit
// tests and the acceptance runner all drive these, so every consumer sees
// identical sampling and identical deviations for a given seed.

#include "dirackit/hydrogen.hpp"
#include "dirackit/manifold1d.hpp"
#include "dirackit/planewave.hpp"
#include "dirackit/sampling.hpp"
#include "dirackit/sliding.hpp"
#include "dirackit/weyl.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

namespace dirackit {

// deviations of one quantity on successively refined grids plus the measured
// convergence orders log2(dev_i / dev_{i+1})
struct OrderSweep {
  std::vector<double> deviation;
  std::vector<double> order;

  void finish() {
    order.clear();
    for (std::size_t i = 0; i + 1 < deviation.size(); ++i)
      order.push_back(std::log2(deviation[i] / deviation[i + 1]));
  }

  double worst_gap(double target = 2) const {
    double gap = order.empty() ? 1e300 : 0;
    for (double o : order) gap = std::max(gap, std::abs(o - target));
    return gap;
  }
};

// ---------------------------------------------------------------------------
// plane waves

struct PlanewaveSuiteResult {
  double max_rel_residual = 0;       // analytic Dirac residual / ||psi_p||
  double max_shell_defect = 0;       // momentum-form mass shell
  double max_wavelength_defect = 0;  // inverse-length form mass shell
  double max_form_disagreement = 0;  // momentum phase vs wavelength phase
  double max_basis_defect = 0;       // orthonormality + phase convention
  std::vector<double> fd_orders;     // per wave, per spacing pair
  double fd_worst_gap = 1e300;
  int waves = 0, points = 0;
};

inline PlanewaveSuiteResult run_planewave_suite(std::uint64_t seed, int waves, int points) {
  SplitMix64 rng(seed);
  PlanewaveSuiteResult res;
  res.waves = waves;
  res.points = points;

  for (int w = 0; w < waves; ++w) {
    const FourMomentum<double> p = random_on_shell(rng, w);
    res.max_shell_defect = std::max(res.max_shell_defect, p.shell_defect());
    res.max_wavelength_defect = std::max(res.max_wavelength_defect, wavelengths(p).shell_defect());

    const auto basis = solve_amplitude(p);
    res.max_basis_defect = std::max({res.max_basis_defect, std::abs(basis[0].norm() - 1),
                                     std::abs(basis[1].norm() - 1),
                                     std::abs(basis[0].dot(basis[1]))});
    for (int s = 0; s < points; ++s) {
      const SpacetimePoint<double> pt = random_point(rng);
      for (const auto& amp : basis)
        res.max_rel_residual =
            std::max(res.max_rel_residual, dirac_residual(BispinorWave<double>{p, amp}, pt));
    }
  }

  // wavelength-phase agreement needs every l_mu finite
  for (int w = 0; w < waves; ++w) {
    const FourMomentum<double> p = random_all_nonzero(rng);
    const BispinorWave<double> wave{p, solve_amplitude(p)[0]};
    for (int s = 0; s < 4; ++s) {
      const SpacetimePoint<double> pt = random_point(rng);
      res.max_form_disagreement = std::max(
          res.max_form_disagreement, (evaluate(wave, pt) - evaluate_wavelength_form(wave, pt)).norm());
    }
  }

  // central-difference residual must shrink like h^2
  const std::array<double, 3> spacings{1e-2, 5e-3, 2.5e-3};
  for (int w = 0; w < 4; ++w) {
    const FourMomentum<double> p = random_on_shell(rng, w + 1);  // skip the massless corner
    const BispinorWave<double> wave{p, solve_amplitude(p)[0]};
    const SpacetimePoint<double> pt = random_point(rng, 1);
    std::array<double, 3> resid;
    for (std::size_t i = 0; i < spacings.size(); ++i)
      resid[i] = dirac_residual_fd(wave, pt, spacings[i]);
    for (std::size_t i = 0; i + 1 < resid.size(); ++i)
      res.fd_orders.push_back(std::log2(resid[i] / resid[i + 1]));
  }
  res.fd_worst_gap = 0;
  for (double o : res.fd_orders) res.fd_worst_gap = std::max(res.fd_worst_gap, std::abs(o - 2));
  return res;
}

// ---------------------------------------------------------------------------
// sliding symmetry

struct SlidingSuiteResult {
  std::array<AxisCheck<double>, 4> translation{};  // worst per axis over all waves
  double max_translation = 0;
  double max_rel_form_residual = 0;  // group-theoretical form on valid waves
  double factor_2pi_dev = 0;         // 2 pi * form residual vs Dirac residual
  double gap_violation = 0;          // detuned amplitudes must keep >= 0.1 m ||psi||
  int waves = 0, samples = 0;
};

inline SlidingSuiteResult run_sliding_suite(std::uint64_t seed, int waves, int samples) {
  SplitMix64 rng(seed);
  SlidingSuiteResult res;
  res.waves = waves;
  res.samples = samples;
  for (auto& t : res.translation) t.pass = true;

  for (int w = 0; w < waves; ++w) {
    // translation relation needs all momentum components nonzero
    const FourMomentum<double> p1 = random_all_nonzero(rng);
    const BispinorWave<double> wave1{p1, solve_amplitude(p1)[0]};
    const TranslationReport<double> trep = verify_translation_relation(wave1, samples, rng);
    for (int a = 0; a < 4; ++a) {
      auto& agg = res.translation[a];
      agg.max_residual = std::max(agg.max_residual, trep.axes[a].max_residual);
      agg.samples += trep.axes[a].samples;
      agg.pass = agg.pass && trep.axes[a].pass;
      res.max_translation = std::max(res.max_translation, agg.max_residual);
    }

    // the cancelled form also covers vanishing momentum components
    FourMomentum<double> p2 = random_on_shell(rng, 1 + (w % 3));  // massive cycle
    const auto basis = solve_amplitude(p2);
    const BispinorWave<double> wave2{p2, basis[0]};
    const SlidingFormReport<double> srep = verify_sliding_form(wave2, samples, rng);
    res.max_rel_form_residual =
        std::max(res.max_rel_form_residual, srep.max_residual / wave2.amplitude.norm());

    // generic amplitudes: the form is the Dirac equation over 2 pi, and the
    // operator's spectral gap keeps the residual away from zero
    const BispinorWave<double> detuned{p2, random_bispinor(rng)};
    for (int s = 0; s < 4; ++s) {
      const SpacetimePoint<double> pt = random_point(rng);
      const double r_form = sliding_form_residual(detuned, pt);
      const double r_dirac = dirac_residual(detuned, pt);
      res.factor_2pi_dev = std::max(
          res.factor_2pi_dev, std::abs(2 * std::numbers::pi * r_form - r_dirac) / (1 + r_dirac));
      res.gap_violation =
          std::max(res.gap_violation, 0.1 * p2.m * detuned.amplitude.norm() -
                                          2 * std::numbers::pi * r_form);
    }
  }
  res.gap_violation = std::max(res.gap_violation, 0.0);
  return res;
}

// ---------------------------------------------------------------------------
// reflection solution maps

struct ReflectSuiteResult {
  double max_rel_solution_residual = 0;  // reflected fields still solve the equation
  double max_double_reflection = 0;      // same-axis twice = signature * psi
  double max_momentum_pattern = 0;       // complementary components negate
  double max_field_wave_mismatch = 0;    // closure view equals plane-wave view
  int waves = 0, points = 0;
};

inline ReflectSuiteResult run_reflect_suite(std::uint64_t seed, int waves, int points) {
  SplitMix64 rng(seed);
  const GammaSet<double>& g = gamma_set<double>();
  ReflectSuiteResult res;
  res.waves = waves;
  res.points = points;

  for (int w = 0; w < waves; ++w) {
    const FourMomentum<double> p = random_on_shell(rng, w);
    const BispinorWave<double> wave{p, solve_amplitude(p)[0]};
    for (Axis axis : all_axes) {
      const ReflectionMap<double> map{axis};
      const ReflectedField<double> refl = reflect_solution(map, wave);
      const BispinorWave<double> rw = refl.as_wave();
      for (Axis b : all_axes) {
        const double expected = b == axis ? p[b] : -p[b];
        res.max_momentum_pattern =
            std::max(res.max_momentum_pattern, std::abs(rw.momentum[b] - expected));
      }
      const double sign = metric_sign(axis);
      for (int s = 0; s < points; ++s) {
        const SpacetimePoint<double> pt = random_point(rng);
        res.max_rel_solution_residual = std::max(
            res.max_rel_solution_residual, dirac_residual(rw, pt) / rw.amplitude.norm());
        res.max_field_wave_mismatch =
            std::max(res.max_field_wave_mismatch, (refl(pt) - evaluate(rw, pt)).norm());
        const ReflectedField<double> twice = reflect_solution(map, rw);
        res.max_double_reflection = std::max(
            res.max_double_reflection, (twice(pt) - sign * evaluate(wave, pt)).norm());
      }
    }
  }
  return res;
}

// ---------------------------------------------------------------------------
// 1D manifold

struct ManifoldSuiteResult {
  double circle_b_dev = 0;          // unit circle solved exactly
  double circle_perimeter_dev = 0;  // perimeter formula exact on circles
  double amax_endpoint_dev = 0;     // x_max(0) equals a_max
  double amax_value_dev = 0;        // a_max(2 pi) = 4/3
  double perimeter_roundtrip = 0;   // constraint re-verified over the family
  double monotone_margin = -1e300;  // max(x_max(T_i) - x_max(T_{i+1})), < 0 when strict
  double evenness_dev = 0;          // x_max(-T) vs x_max(T)
  double scaling_dev = 0;           // region_at(s l0, s T) = s region_at(l0, T)
  double refinement_dev = 0;        // grid vs doubled grid
  double representation_residual = 0;
  double translation_dev = 0;
  double periodicity_dev = 0;
  double detuned_residual_dev = 0;  // frequency scale 1.1 gives exactly 0.1 m0
};

inline ManifoldSuiteResult run_manifold_suite(double l0, int grid) {
  ManifoldSuiteResult res;
  const double two_pi = 2 * std::numbers::pi;

  // circle wave checks on a handful of positions and perimeters
  for (double l : {two_pi, l0, 3.7}) {
    const CircleManifold<double> man = make_circle(l);
    for (double x : {0.0, 0.3, -2.5, 7.1}) {
      res.representation_residual = std::max(res.representation_residual,
                                             representation_residual(man, x));
      res.translation_dev = std::max(res.translation_dev, translation_deviation(man, x));
      res.periodicity_dev = std::max(res.periodicity_dev, periodicity_deviation(man, x));
      res.detuned_residual_dev =
          std::max(res.detuned_residual_dev,
                   std::abs(representation_residual(man, x, 1.1) - 0.1 * man.m0));
    }
  }

  res.circle_b_dev = std::abs(solve_ellipse_b(two_pi, 1.0).b - 1.0);
  for (double r : {1.0, 0.5, 2.0})
    res.circle_perimeter_dev =
        std::max(res.circle_perimeter_dev, std::abs(ellipse_perimeter(r, r) - two_pi * r));

  const double a_max = max_semiaxis(l0);
  res.amax_endpoint_dev = std::abs(region_at(l0, 0.0, grid).x_max - a_max);
  res.amax_value_dev = std::abs(max_semiaxis(two_pi) - 4.0 / 3.0);

  for (int i = 0; i <= grid; ++i) {
    const EllipseShape<double> e = solve_ellipse_b(l0, a_max * (double(i) / grid));
    res.perimeter_roundtrip = std::max(
        res.perimeter_roundtrip, std::abs(ellipse_perimeter(e.a, e.b) - l0) / l0);
  }

  double prev = -1;
  for (int i = 0; i <= 30; ++i) {
    const double T = 3.0 * i / 30;
    const RegionSnapshot<double> snap = region_at(l0, T, grid);
    if (i > 0) res.monotone_margin = std::max(res.monotone_margin, prev - snap.x_max);
    prev = snap.x_max;
    res.evenness_dev =
        std::max(res.evenness_dev, std::abs(region_at(l0, -T, grid).x_max - snap.x_max));
    res.refinement_dev =
        std::max(res.refinement_dev,
                 std::abs(region_at(l0, T, 2 * grid).x_max - snap.x_max) / snap.x_max);
    for (const double s : {0.5, 3.0, 10.0})
      res.scaling_dev = std::max(res.scaling_dev,
                                 std::abs(region_at(s * l0, s * T, grid).x_max - s * snap.x_max) /
                                     (s * snap.x_max));
  }
  return res;
}

// ---------------------------------------------------------------------------
// Weyl geometry

struct WeylSuiteResult {
  OrderSweep curl_of_gradient;   // curvature of an exactly sampled gradient
  OrderSweep gauge_invariance;   // curvature deviation under a sampled gauge shift
  OrderSweep bianchi;            // cyclic identity on an exactly sampled curvature
  OrderSweep em_covariance;      // long-derivative covariance, full grid route
  double discrete_gauge_invariance = 0;  // grid-difference route: exact to roundoff
  double discrete_bianchi = 0;           // grid-difference route: exact to roundoff
  double gauge_group = 0;                // s1 then s2 equals s1 s2
  double identity_scale = 0;             // scale = 1 changes nothing
  double linear_curvature = 0;           // phi_t = k x gives F_tx = k exactly
  int nt = 0, nx = 0, refinements = 0;
};

inline Grid4<double> slice_grid(int nt, int nx) {
  return make_grid<double>({nt, nx, 1, 1}, {1.0 / (nt - 1), 1.0 / (nx - 1), 1.0, 1.0});
}

inline WeylSuiteResult run_weyl_suite(int nt, int nx, int refinements, std::uint64_t seed) {
  SplitMix64 rng(seed);
  WeylSuiteResult res;
  res.nt = nt;
  res.nx = nx;
  res.refinements = refinements;

  const std::array<bool, 4> tx{true, true, false, false};
  const double k_max = 7, amp = 1;
  const int n_modes = 5;
  auto smooth = [&] { return make_smooth_scalar<double>(rng, n_modes, k_max, amp, tx); };

  // all reference fields are fixed before the resolution loop
  const SmoothScalar<double> chi = smooth();       // gauge scalar
  const SmoothScalar<double> ln_scale = smooth();  // ln of the gauge factor
  std::array<SmoothScalar<double>, 4> phi_ref;     // generic connectivity
  for (auto& c : phi_ref) c = smooth();
  const SmoothScalar<double> chi_re = smooth(), chi_im = smooth();  // EM gauge function
  std::array<std::pair<SmoothScalar<double>, SmoothScalar<double>>, 4> a_ref;
  for (auto& c : a_ref) c = {smooth(), smooth()};
  std::array<std::pair<SmoothScalar<double>, SmoothScalar<double>>, 4> psi_ref;
  for (auto& c : psi_ref) c = {smooth(), smooth()};
  const double charge = 0.8;

  for (int level = 0; level <= refinements; ++level) {
    const int mt = ((nt - 1) << level) + 1, mx = ((nx - 1) << level) + 1;
    const Grid4<double> g = slice_grid(mt, mx);
    const std::int64_t n = g.size();

    NodeArray4<double> phi(n, 4), grad_chi(n, 4), grad_ln_scale(n, 4);
    for (int a = 0; a < 4; ++a) {
      phi.col(a) = sample_value(g, phi_ref[a]);
      grad_chi.col(a) = sample_gradient(g, chi, a);
      grad_ln_scale.col(a) = sample_gradient(g, ln_scale, a);
    }
    const NodeArray<double> ones = NodeArray<double>::Ones(n);

    // curl of an exactly sampled gradient: analytically zero, discretely O(h^2)
    {
      const CurvatureField<double> F = scale_curvature(WeylField<double>{g, ones, grad_chi});
      double worst = 0;
      for (std::int64_t node = 0; node < n; ++node) {
        if (!g.interior(node)) continue;
        for (int p = 0; p < 6; ++p) worst = std::max(worst, std::abs(F.F(node, p)));
      }
      res.curl_of_gradient.deviation.push_back(worst);
    }

    // gauge shift applied in analytic form: curvature deviation is O(h^2)
    {
      const CurvatureField<double> F0 = scale_curvature(WeylField<double>{g, ones, phi});
      const NodeArray4<double> shifted = phi - grad_ln_scale;
      const CurvatureField<double> F1 = scale_curvature(WeylField<double>{g, ones, shifted});
      double worst = 0;
      for (std::int64_t node = 0; node < n; ++node) {
        if (!g.interior(node)) continue;
        for (int p = 0; p < 6; ++p)
          worst = std::max(worst, std::abs(F1.F(node, p) - F0.F(node, p)));
      }
      res.gauge_invariance.deviation.push_back(worst);
    }

    // cyclic identity on the exactly sampled curvature of phi_ref
    {
      CurvatureField<double> F{g, Eigen::Array<double, Eigen::Dynamic, 6>(n, 6)};
      for (int p = 0; p < 6; ++p) {
        const auto [i, k] = curvature_pairs[p];
        for (std::int64_t node = 0; node < n; ++node) {
          const auto x = g.position(node);
          F.F(node, p) = phi_ref[i].gradient(x, k) - phi_ref[k].gradient(x, i);
        }
      }
      res.bianchi.deviation.push_back(bianchi_residual(F));
    }

    // electromagnetic covariance along each active axis, everything on the grid
    {
      ComplexNodeArray<double> chi_c =
          sample_value(g, chi_re).cast<Complex<double>>() +
          Complex<double>(0, 1) * sample_value(g, chi_im).cast<Complex<double>>();
      ComplexNodeArray4<double> A(n, 4);
      BispinorField<double> psi(n, 4);
      for (int a = 0; a < 4; ++a) {
        A.col(a) = sample_value(g, a_ref[a].first).cast<Complex<double>>() +
                   Complex<double>(0, 1) * sample_value(g, a_ref[a].second).cast<Complex<double>>();
        psi.col(a) = (sample_value(g, psi_ref[a].first).cast<Complex<double>>() +
                      Complex<double>(0, 1) *
                          sample_value(g, psi_ref[a].second).cast<Complex<double>>())
                         .matrix();
      }
      const PotentialField<double> pot{g, A, charge};
      ComplexNodeArray4<double> A2(n, 4);
      for (int a = 0; a < 4; ++a)
        A2.col(a) = A.col(a) - grid_derivative(g, chi_c, a);
      const PotentialField<double> pot2{g, A2, charge};
      const ComplexNodeArray<double> phase = (Complex<double>(0, -charge) * chi_c).exp();
      BispinorField<double> psi2(n, 4);
      for (int a = 0; a < 4; ++a) psi2.col(a) = (phase * psi.col(a).array()).matrix();

      double worst = 0;
      for (int axis = 0; axis < 4; ++axis) {
        if (!g.active(axis)) continue;
        const BispinorField<double> lhs = long_derivative(pot2, psi2, axis);
        const BispinorField<double> rhs = long_derivative(pot, psi, axis);
        for (std::int64_t node = 0; node < n; ++node) {
          if (!g.interior(node)) continue;
          for (int c = 0; c < 4; ++c)
            worst = std::max(worst, std::abs(lhs(node, c) - phase(node) * rhs(node, c)));
        }
      }
      res.em_covariance.deviation.push_back(worst);
    }

    // grid-difference-route identities and exactness checks, base grid only
    if (level == 0) {
      const NodeArray<double> lambda = sample_value(g, chi_re).exp();
      const WeylField<double> f = make_weyl_field(g, lambda, phi);
      const NodeArray<double> s1 = sample_value(g, ln_scale).exp();
      const NodeArray<double> s2 = sample_value(g, chi_im).exp();

      res.discrete_gauge_invariance = curvature_gauge_invariance(f, s1);
      res.discrete_bianchi = bianchi_residual(scale_curvature(f));

      const WeylField<double> two_step = gauge_transform(gauge_transform(f, s1), s2);
      const NodeArray<double> s12 = s1 * s2;
      const WeylField<double> one_step = gauge_transform(f, s12);
      res.gauge_group =
          std::max((two_step.lambda - one_step.lambda).abs().maxCoeff(),
                   (two_step.phi - one_step.phi).abs().maxCoeff());

      const WeylField<double> same = gauge_transform(f, ones);
      res.identity_scale = std::max((same.lambda - f.lambda).abs().maxCoeff(),
                                    (same.phi - f.phi).abs().maxCoeff());

      NodeArray4<double> linear = NodeArray4<double>::Zero(n, 4);
      const double k = 2.5;
      for (std::int64_t node = 0; node < n; ++node)
        linear(node, 0) = k * g.position(node)[1];  // phi_t = k x
      const CurvatureField<double> F = scale_curvature(WeylField<double>{g, ones, linear});
      for (std::int64_t node = 0; node < n; ++node) {
        if (!g.interior(node)) continue;
        res.linear_curvature =
            std::max(res.linear_curvature, std::abs(F.F(node, 0) - k));  // F_tx = +k
        for (int p = 1; p < 6; ++p)
          res.linear_curvature = std::max(res.linear_curvature, std::abs(F.F(node, p)));
      }
    }
  }

  res.curl_of_gradient.finish();
  res.gauge_invariance.finish();
  res.bianchi.finish();
  res.em_covariance.finish();
  return res;
}

}  // namespace dirackit
