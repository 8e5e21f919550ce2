#pragma once

// Planar Weyl geometry on a sampling grid: scale function lambda > 0 and
// connectivity one-form phi_mu, gauge transformations
//   lambda' = s lambda,  phi'_mu = phi_mu - d_mu ln s,
// scale curvature F_ik = d phi_i / dx_k - d phi_k / dx_i, the cyclic
// (Maxwell-like) identity, and the electromagnetic long derivative
// (d_mu - i e A_mu) psi with its gauge covariance.
//
// Discrete central differences commute exactly, so the curl of a discrete
// gradient -- and with it the curvature deviation under gauge_transform --
// vanishes to roundoff wherever every stencil involved is central (depth-2
// interior).  The one-sided boundary closure does not commute; norms of
// those identities are therefore taken at depth 2.  O(h^2) truncation is
// the honest error model when gradients or curvatures enter as analytic
// samples, which is how the convergence-order suites drive these operators.

#include "dirackit/clifford.hpp"
#include "dirackit/grid.hpp"
#include "dirackit/rng.hpp"

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

namespace dirackit {

template <class Scalar = double>
using NodeArray = Eigen::Array<Scalar, Eigen::Dynamic, 1>;

template <class Scalar = double>
using NodeArray4 = Eigen::Array<Scalar, Eigen::Dynamic, 4>;

template <class Scalar = double>
using ComplexNodeArray = Eigen::Array<Complex<Scalar>, Eigen::Dynamic, 1>;

template <class Scalar = double>
using ComplexNodeArray4 = Eigen::Array<Complex<Scalar>, Eigen::Dynamic, 4>;

// one bispinor per node (row)
template <class Scalar = double>
using BispinorField = Eigen::Matrix<Complex<Scalar>, Eigen::Dynamic, 4>;

template <class Scalar = double>
struct WeylField {
  Grid4<Scalar> grid;
  NodeArray<Scalar> lambda;  // positive scale factor per node
  NodeArray4<Scalar> phi;    // connectivity phi_mu per node
};

template <class Scalar>
WeylField<Scalar> make_weyl_field(const Grid4<Scalar>& grid, NodeArray<Scalar> lambda,
                                  NodeArray4<Scalar> phi) {
  if (lambda.size() != grid.size() || phi.rows() != grid.size())
    throw std::invalid_argument("make_weyl_field: field size does not match grid");
  if (!(lambda > 0).all())
    throw std::domain_error("make_weyl_field: scale function must be positive everywhere");
  return {grid, std::move(lambda), std::move(phi)};
}

inline constexpr std::array<std::pair<int, int>, 6> curvature_pairs{
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

inline int curvature_pair_index(int i, int k) {
  for (int c = 0; c < 6; ++c)
    if (curvature_pairs[c].first == i && curvature_pairs[c].second == k) return c;
  throw std::invalid_argument("curvature_pair_index: need i < k");
}

// six independent components of the antisymmetric F_ik; boundary nodes carry
// first-order one-sided values and are excluded from norms via interior()
template <class Scalar = double>
struct CurvatureField {
  Grid4<Scalar> grid;
  Eigen::Array<Scalar, Eigen::Dynamic, 6> F;  // ordered as curvature_pairs

  Scalar component(std::int64_t node, int i, int k) const {
    if (i == k) return 0;
    return i < k ? F(node, curvature_pair_index(i, k)) : -F(node, curvature_pair_index(k, i));
  }
};

// lambda' = scale lambda, phi'_mu = phi_mu - d_mu ln scale (grid differences)
template <class Scalar>
WeylField<Scalar> gauge_transform(const WeylField<Scalar>& f, const NodeArray<Scalar>& scale) {
  if (scale.size() != f.grid.size())
    throw std::invalid_argument("gauge_transform: scale size does not match grid");
  if (!(scale > 0).all())
    throw std::domain_error("gauge_transform: scale must be positive everywhere");
  WeylField<Scalar> out{f.grid, f.lambda * scale, f.phi};
  const NodeArray<Scalar> ln_s = scale.log();
  for (int a = 0; a < 4; ++a)
    if (f.grid.active(a)) out.phi.col(a) -= grid_derivative(f.grid, ln_s, a);
  return out;
}

// F_ik = d phi_i / dx_k - d phi_k / dx_i
template <class Scalar>
CurvatureField<Scalar> scale_curvature(const WeylField<Scalar>& f) {
  for (int a = 0; a < 4; ++a)
    if (f.grid.active(a) && f.grid.extents[a] < 3)
      throw std::invalid_argument("scale_curvature: differenced axes need extent >= 3");
  CurvatureField<Scalar> c{f.grid, Eigen::Array<Scalar, Eigen::Dynamic, 6>(f.grid.size(), 6)};
  for (int p = 0; p < 6; ++p) {
    const auto [i, k] = curvature_pairs[p];
    c.F.col(p) =
        grid_derivative(f.grid, f.phi.col(i), k) - grid_derivative(f.grid, f.phi.col(k), i);
  }
  return c;
}

// max over depth-2 interior nodes and axis triples (i,k,l) of
// d_i F_kl + d_k F_li + d_l F_ik, all derivatives central
template <class Scalar>
Scalar bianchi_residual(const CurvatureField<Scalar>& c) {
  const Grid4<Scalar>& g = c.grid;
  std::array<std::array<NodeArray<Scalar>, 4>, 6> dF;  // dF[pair][axis]
  for (int p = 0; p < 6; ++p)
    for (int a = 0; a < 4; ++a) dF[p][a] = grid_derivative(g, c.F.col(p), a);

  constexpr std::array<std::array<int, 3>, 4> triples{
      {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}};
  Scalar worst = 0;
  bool any_interior = false;
  for (std::int64_t node = 0; node < g.size(); ++node) {
    if (!g.interior(node, 2)) continue;
    any_interior = true;
    for (const auto& [i, k, l] : triples) {
      // d_i F_kl - d_k F_il + d_l F_ik with stored i < k < l components
      const Scalar cyc = dF[curvature_pair_index(k, l)][i](node) -
                         dF[curvature_pair_index(i, l)][k](node) +
                         dF[curvature_pair_index(i, k)][l](node);
      worst = std::max(worst, std::abs(cyc));
    }
  }
  if (!any_interior) throw std::domain_error("bianchi_residual: no depth-2 interior nodes");
  return worst;
}

// max over depth-2 interior nodes of |F(gauge_transform(f, scale)) - F(f)|;
// identically zero there up to roundoff (central differences commute)
template <class Scalar>
Scalar curvature_gauge_invariance(const WeylField<Scalar>& f, const NodeArray<Scalar>& scale) {
  const CurvatureField<Scalar> before = scale_curvature(f);
  const CurvatureField<Scalar> after = scale_curvature(gauge_transform(f, scale));
  Scalar worst = 0;
  bool any_interior = false;
  for (std::int64_t node = 0; node < f.grid.size(); ++node) {
    if (!f.grid.interior(node, 2)) continue;
    any_interior = true;
    for (int p = 0; p < 6; ++p)
      worst = std::max(worst, std::abs(after.F(node, p) - before.F(node, p)));
  }
  if (!any_interior)
    throw std::domain_error("curvature_gauge_invariance: no depth-2 interior nodes");
  return worst;
}

template <class Scalar = double>
struct PotentialField {
  Grid4<Scalar> grid;
  ComplexNodeArray4<Scalar> A;  // electromagnetic potential per node
  Scalar e;                     // charge
};

// (d_axis - i e A_axis) psi per node, derivative by grid differences
template <class Scalar>
BispinorField<Scalar> long_derivative(const PotentialField<Scalar>& p,
                                      const BispinorField<Scalar>& psi, int axis) {
  if (psi.rows() != p.grid.size())
    throw std::invalid_argument("long_derivative: field size does not match grid");
  const Complex<Scalar> ie(0, p.e);
  BispinorField<Scalar> out(psi.rows(), 4);
  for (int c = 0; c < 4; ++c) {
    const ComplexNodeArray<Scalar> d = grid_derivative(p.grid, psi.col(c), axis);
    out.col(c) = (d - ie * p.A.col(axis) * psi.col(c).array()).matrix();
  }
  return out;
}

// The complex gauge function chi whose electromagnetic phase exp(-ie chi)
// reproduces the real metric rescaling by 1/lambda: chi = ln(lambda) / (ie),
// the branch consistent with phi_mu = ie A_mu and the shift A -> A - d chi.
template <class Scalar>
ComplexNodeArray<Scalar> gauge_parameter_for_scale(const NodeArray<Scalar>& lambda, Scalar e) {
  if (e == 0) throw std::domain_error("gauge_parameter_for_scale: charge must be nonzero");
  if (!(lambda > 0).all())
    throw std::domain_error("gauge_parameter_for_scale: scale must be positive everywhere");
  return lambda.log().template cast<Complex<Scalar>>() / Complex<Scalar>(0, e);
}

// Band-limited random scalar, sum_j amp_j cos(k_j . x + theta_j), with exact
// value and gradient: the reference fields for convergence-order runs.
template <class Scalar = double>
struct SmoothScalar {
  struct Mode {
    std::array<Scalar, 4> k;
    Scalar amp;
    Scalar theta;
  };
  std::vector<Mode> modes;

  Scalar value(const std::array<Scalar, 4>& x) const {
    Scalar v = 0;
    for (const Mode& m : modes)
      v += m.amp * std::cos(m.k[0] * x[0] + m.k[1] * x[1] + m.k[2] * x[2] + m.k[3] * x[3] +
                            m.theta);
    return v;
  }

  Scalar gradient(const std::array<Scalar, 4>& x, int axis) const {
    Scalar v = 0;
    for (const Mode& m : modes)
      v -= m.amp * m.k[axis] *
           std::sin(m.k[0] * x[0] + m.k[1] * x[1] + m.k[2] * x[2] + m.k[3] * x[3] + m.theta);
    return v;
  }
};

// wavevectors only along the requested axes, so sampled fields are constant
// along inactive grid axes
template <class Scalar = double>
SmoothScalar<Scalar> make_smooth_scalar(SplitMix64& rng, int n_modes, Scalar k_max,
                                        Scalar amplitude, const std::array<bool, 4>& axes) {
  SmoothScalar<Scalar> s;
  s.modes.resize(n_modes);
  for (auto& m : s.modes) {
    for (int a = 0; a < 4; ++a) m.k[a] = axes[a] ? Scalar(rng.uniform(-k_max, k_max)) : 0;
    m.amp = amplitude * Scalar(rng.uniform(0.5, 1)) / n_modes;
    m.theta = Scalar(rng.uniform(0, 2 * std::numbers::pi_v<double>));
  }
  return s;
}

template <class Scalar>
NodeArray<Scalar> sample_value(const Grid4<Scalar>& g, const SmoothScalar<Scalar>& s) {
  NodeArray<Scalar> out(g.size());
  for (std::int64_t n = 0; n < g.size(); ++n) out(n) = s.value(g.position(n));
  return out;
}

template <class Scalar>
NodeArray<Scalar> sample_gradient(const Grid4<Scalar>& g, const SmoothScalar<Scalar>& s,
                                  int axis) {
  NodeArray<Scalar> out(g.size());
  for (std::int64_t n = 0; n < g.size(); ++n) out(n) = s.gradient(g.position(n), axis);
  return out;
}

}  // namespace dirackit
