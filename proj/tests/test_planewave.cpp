#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dirackit/planewave.hpp"
#include "dirackit/sampling.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <numbers>

using namespace dirackit;
using C = Complex<double>;
using M4 = ComplexMatrix4<double>;

namespace {

constexpr double two_pi = 2 * std::numbers::pi;

// independent null-space oracle: eigen-decomposition instead of the SVD route,
// compared through the basis-independent projector
M4 null_projector_by_eigensolver(const M4& d, double scale) {
  Eigen::ComplexEigenSolver<M4> es(d);
  M4 p = M4::Zero();
  int dim = 0;
  // eigenvectors of a non-normal matrix need not be orthogonal; orthogonalize
  Eigen::Matrix<C, 4, Eigen::Dynamic> basis(4, 4);
  for (int i = 0; i < 4; ++i) {
    if (std::abs(es.eigenvalues()(i)) > 1e-8 * scale) continue;
    Bispinor<double> v = es.eigenvectors().col(i);
    for (int j = 0; j < dim; ++j) v -= basis.col(j).dot(v) * basis.col(j);
    basis.col(dim++) = v / v.norm();
  }
  for (int j = 0; j < dim; ++j) p += basis.col(j) * basis.col(j).adjoint();
  return p;
}

M4 null_projector_from_basis(const std::array<Bispinor<double>, 2>& b) {
  return b[0] * b[0].adjoint() + b[1] * b[1].adjoint();
}

}  // namespace

TEST_CASE("on_shell_construction") {
  const auto rest = make_on_shell<double>({0, 0, 0}, 1);
  CHECK(rest.p_t == 1.0);

  const auto triple = make_on_shell<double>({3, 0, 0}, 4);
  CHECK(triple.p_t == 5.0);  // 3-4-5 triple, exact in doubles

  const auto massless = make_on_shell<double>({1, 2, 2}, 0);
  CHECK(massless.p_t == 3.0);  // sqrt(1+4+4)
  CHECK(massless.m == 0.0);

  CHECK(rest.p_t > 0);
  CHECK(rest.shell_defect() < 1e-15);
  CHECK(is_on_shell(triple));
  CHECK_FALSE(is_on_shell(FourMomentum<double>{1, 1, 0, 0, 1}));
  CHECK_THROWS_AS((make_on_shell<double>({1, 0, 0}, -1)), std::domain_error);
  CHECK_THROWS_AS((make_on_shell<double>({0, 0, 0}, 0)), std::domain_error);
}

TEST_CASE("four_momentum_axis_access") {
  const FourMomentum<double> p{5, 3, 2, 1, std::sqrt(11.0)};
  CHECK(p[Axis::T] == 5.0);
  CHECK(p[Axis::X] == 3.0);
  CHECK(p[Axis::Y] == 2.0);
  CHECK(p[Axis::Z] == 1.0);
  CHECK(p.shell_defect() < 1e-15);
}

TEST_CASE("wavelength_reduction") {
  // rest frame with m = 2pi: all wavelengths reduce to unit inverse lengths
  const auto rest = make_on_shell<double>({0, 0, 0}, two_pi);
  const auto wl = wavelengths(rest);
  CHECK(wl.inv_l[0] == 1.0);
  CHECK(wl.inv_l[1] == 0.0);
  CHECK(wl.inv_l[2] == 0.0);
  CHECK(wl.inv_l[3] == 0.0);
  CHECK(wl.inv_l_m == 1.0);
  CHECK(wl.shell_defect() < 1e-15);

  // 25 - 9 = 16 carried through the 1/2pi scaling
  const FourMomentum<double> p{5, 3, 0, 0, 4};
  const auto w = wavelengths(p);
  CHECK(w.inv_l[0] == doctest::Approx(5 / two_pi).epsilon(1e-15));
  CHECK(w.inv_l[1] == doctest::Approx(3 / two_pi).epsilon(1e-15));
  CHECK(w.shell_defect() < 1e-15);

  // massless: the mass wavelength drops out, 1 - 1 = 0
  const auto wm = wavelengths(FourMomentum<double>{1, 1, 0, 0, 0});
  CHECK(wm.inv_l_m == 0.0);
  CHECK(wm.shell_defect() < 1e-15);
}

TEST_CASE("rest_frame_null_space_has_dimension_two") {
  const FourMomentum<double> p{1, 0, 0, 0, 1};
  const M4 d = momentum_space_operator(p);
  // operator is m (gamma^t - I); eigen-decomposition gives the null dimension
  Eigen::ComplexEigenSolver<M4> es(d);
  int null_dim = 0;
  for (int i = 0; i < 4; ++i)
    if (std::abs(es.eigenvalues()(i)) < 1e-12) ++null_dim;
  CHECK(null_dim == 2);

  const auto basis = solve_amplitude(p);
  for (const auto& b : basis) {
    CHECK((d * b).norm() < 1e-12 * b.norm());
    CHECK(b.norm() == doctest::Approx(1.0).epsilon(1e-14));
  }
  CHECK(std::abs(basis[0].dot(basis[1])) < 1e-14);

  const M4 p_eig = null_projector_by_eigensolver(d, 2 * p.m);
  CHECK((p_eig - null_projector_from_basis(basis)).norm() < 1e-12);
}

TEST_CASE("moving_frame_solutions_cross_checked_against_eigensolver") {
  const FourMomentum<double> p{5, 3, 0, 0, 4};
  const M4 d = momentum_space_operator(p);
  const auto basis = solve_amplitude(p);
  for (const auto& b : basis) CHECK((d * b).norm() < 1e-12);
  CHECK(std::abs(basis[0].norm() - 1) < 1e-14);
  CHECK(std::abs(basis[1].norm() - 1) < 1e-14);
  CHECK(std::abs(basis[0].dot(basis[1])) < 1e-14);

  const M4 p_eig = null_projector_by_eigensolver(d, p.p_t + p.m);
  CHECK((p_eig - null_projector_from_basis(basis)).norm() < 1e-12);
}

TEST_CASE("off_shell_momentum_is_rejected") {
  CHECK_THROWS_AS(solve_amplitude(FourMomentum<double>{1, 1, 0, 0, 1}), std::domain_error);
}

TEST_CASE("plane_wave_evaluation") {
  const FourMomentum<double> p{5, 3, 0, 0, 4};
  const BispinorWave<double> w{p, solve_amplitude(p)[0]};

  // exponent vanishes at the origin
  CHECK((evaluate(w, SpacetimePoint<double>{0, 0, 0, 0}) - w.amplitude).norm() == 0.0);

  // p.x = 5*0.1 - 3*0.2 = -0.1, so the phase is exp(+0.1 i)
  const C ph = phase_factor(p, SpacetimePoint<double>{0.1, 0.2, 0, 0});
  CHECK(std::abs(ph - std::polar(1.0, 0.1)) < 1e-15);

  // rest frame, one full period exp(-2pi i) = 1
  const auto rest = make_on_shell<double>({0, 0, 0}, 1.0);
  const BispinorWave<double> wr{rest, solve_amplitude(rest)[0]};
  const SpacetimePoint<double> period{two_pi / rest.m, 0.3, -0.4, 2.0};
  CHECK((evaluate(wr, period) - wr.amplitude).norm() < 1e-14);
}

TEST_CASE("wavelength_form_matches_momentum_form") {
  SplitMix64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const FourMomentum<double> p = random_all_nonzero(rng);
    const BispinorWave<double> w{p, solve_amplitude(p)[0]};
    const SpacetimePoint<double> pt = random_point(rng);
    CHECK((evaluate(w, pt) - evaluate_wavelength_form(w, pt)).norm() < 1e-12);
  }
  // vanishing components are represented by infinite wavelengths and still agree
  const auto p0 = make_on_shell<double>({2, 0, 0}, 1.5);
  const BispinorWave<double> w0{p0, solve_amplitude(p0)[0]};
  const SpacetimePoint<double> pt{0.7, -0.3, 0.9, 1.1};
  CHECK((evaluate(w0, pt) - evaluate_wavelength_form(w0, pt)).norm() < 1e-13);
}

TEST_CASE("residual_of_exact_solutions_vanishes") {
  SplitMix64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const FourMomentum<double> p = random_on_shell(rng, trial);
    const auto basis = solve_amplitude(p);
    CHECK(basis[0].norm() > 0);  // constructed solutions are nonzero
    for (int s = 0; s < 4; ++s) {
      const SpacetimePoint<double> pt = random_point(rng);
      CHECK(dirac_residual(BispinorWave<double>{p, basis[0]}, pt) < 1e-12);
      CHECK(dirac_residual(BispinorWave<double>{p, basis[1]}, pt) < 1e-12);
    }
  }
}

TEST_CASE("residual_grows_linearly_with_amplitude_perturbation") {
  SplitMix64 rng(23);
  const FourMomentum<double> p{5, 3, 0, 0, 4};
  const double scale = std::abs(p.p_t) + std::abs(p.p_x) + std::abs(p.p_y) +
                       std::abs(p.p_z) + p.m;
  BispinorWave<double> w{p, solve_amplitude(p)[0]};
  w.amplitude += 1e-3 * random_bispinor(rng);
  const double r = dirac_residual(w, SpacetimePoint<double>{0.2, -0.7, 0.4, 0.1});
  CHECK(r > 0.05 * 1e-3 * scale);
  CHECK(r < 3.0 * 1e-3 * scale);
}

TEST_CASE("finite_difference_residual_is_second_order") {
  SplitMix64 rng(41);
  const FourMomentum<double> p = random_all_nonzero(rng);
  const BispinorWave<double> w{p, solve_amplitude(p)[0]};
  const SpacetimePoint<double> pt{0.3, -0.2, 0.5, 0.8};
  const double h = 1e-2;
  const double r1 = dirac_residual_fd(w, pt, h);
  const double r2 = dirac_residual_fd(w, pt, h / 2);
  CHECK(r1 / r2 == doctest::Approx(4.0).epsilon(0.05));  // Richardson ratio
  CHECK_THROWS_AS(dirac_residual_fd(w, pt, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(dirac_residual_fd(w, pt, -1e-3), std::invalid_argument);
}

TEST_CASE("spacetime_point_shifting") {
  const SpacetimePoint<double> pt{1, 2, 3, 4};
  CHECK(pt[Axis::T] == 1.0);
  CHECK(pt[Axis::Z] == 4.0);
  const auto moved = pt.shifted(Axis::Y, -0.5);
  CHECK(moved.y == 2.5);
  CHECK(moved.x == 2.0);
}
