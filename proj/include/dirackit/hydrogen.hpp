#pragma once

// Dirac-Coulomb bound states.  The central-potential reduction gives two
// coupled radial amplitudes,
//   df/dr = -(kappa/r) f + (E + m - V) g
//   dg/dr = +(kappa/r) g - (E - m - V) f,      V(r) = -Z alpha / r + v0,
// integrated as a fixed-step classical Runge-Kutta scheme on t = ln r (the
// step in r then shrinks like r itself, resolving both the r^gamma origin
// behaviour and the exponential tail).  Eigenvalues come from two-sided
// shooting: integrate out from r_min on the regular r^gamma branch, in from
// r_max on the decaying branch, and bisect the energy on the sign change of
// the normalized Wronskian f_out g_in - g_out f_in at the matching radius.
// The closed-form fine-structure spectrum serves as an independent oracle.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace dirackit {

template <class Scalar = double>
struct CoulombProblem {
  int Z = 1;
  Scalar alpha = Scalar(1) / Scalar(137.035999);  // fine-structure constant
  Scalar m = 1;                                   // electron mass
};

struct QuantumNumbers {
  int n;      // principal
  int kappa;  // Dirac angular quantum number, nonzero
};

// kappa runs over -1..-n and +1..+(n-1)
inline bool admissible(const QuantumNumbers& q) {
  return q.n >= 1 && q.kappa != 0 && q.kappa >= -q.n && q.kappa <= q.n - 1;
}

inline std::vector<QuantumNumbers> levels_up_to(int n_max) {
  std::vector<QuantumNumbers> out;
  for (int n = 1; n <= n_max; ++n)
    for (int kappa = -n; kappa <= n - 1; ++kappa)
      if (kappa != 0) out.push_back({n, kappa});
  return out;
}

template <class Scalar>
void validate_problem(const CoulombProblem<Scalar>& p) {
  if (p.Z < 1) throw std::domain_error("CoulombProblem: Z must be >= 1");
  if (!(p.m > 0)) throw std::domain_error("CoulombProblem: mass must be positive");
  if (!(p.Z * p.alpha > 0 && p.Z * p.alpha < 1))
    throw std::domain_error("CoulombProblem: need 0 < Z alpha < 1");
}

// m [1 + (Z alpha / (n - |kappa| + sqrt(kappa^2 - (Z alpha)^2)))^2]^(-1/2)
template <class Scalar>
Scalar sommerfeld_energy(const CoulombProblem<Scalar>& p, const QuantumNumbers& q) {
  validate_problem(p);
  if (!admissible(q)) throw std::domain_error("sommerfeld_energy: inadmissible (n, kappa)");
  const Scalar za = p.Z * p.alpha;
  const Scalar k2 = Scalar(q.kappa) * Scalar(q.kappa);
  if (!(za < std::abs(Scalar(q.kappa))))
    throw std::domain_error("sommerfeld_energy: Z alpha >= |kappa|, root is imaginary");
  const Scalar gamma = std::sqrt(k2 - za * za);
  const Scalar denom = Scalar(q.n - std::abs(q.kappa)) + gamma;
  const Scalar ratio = za / denom;
  return p.m / std::sqrt(1 + ratio * ratio);
}

template <class Scalar = double>
struct RadialGrid {
  Scalar r_min, r_max;
  int nodes = 20000;
};

// r in [1e-6, 300] units of the ground-state length scale 1/(m alpha Z)
template <class Scalar>
RadialGrid<Scalar> default_grid(const CoulombProblem<Scalar>& p, int nodes = 20000) {
  const Scalar unit = 1 / (p.m * p.alpha * p.Z);
  return {Scalar(1e-6) * unit, Scalar(300) * unit, nodes};
}

template <class Scalar = double>
struct RadialSolution {
  Scalar energy;
  Eigen::Array<Scalar, Eigen::Dynamic, 1> r, f, g;
};

namespace detail {

// radial right-hand side on the log axis t = ln r (both equations scaled by r)
template <class Scalar>
struct RadialRhs {
  Scalar kappa, E, m, za, v0;

  void operator()(Scalar r, Scalar f, Scalar g, Scalar& df, Scalar& dg) const {
    const Scalar wp = r * (E + m - v0) + za;  // r (E + m - V)
    const Scalar wm = r * (E - m - v0) + za;  // r (E - m - V)
    df = -kappa * f + wp * g;
    dg = kappa * g - wm * f;
  }
};

// Fixed-step RK4 from grid index i0 to i1 (either direction).  Renormalizes
// when values pass 1e250, rescaling the already-stored prefix to keep the
// stored solution consistent; store may be null for defect-only runs.
template <class Scalar>
void integrate_radial(const RadialRhs<Scalar>& rhs, const Eigen::Array<Scalar, Eigen::Dynamic, 1>& r,
                      int i0, int i1, Scalar f, Scalar g, Scalar* f_store, Scalar* g_store,
                      Scalar& f_end, Scalar& g_end) {
  const int dir = i1 >= i0 ? 1 : -1;
  // log-uniform grid: substep radii are fixed multiples of the start radius
  const Scalar ratio = std::pow(r(i0 + dir) / r(i0), Scalar(0.5));
  auto store = [&](int i, Scalar fv, Scalar gv) {
    if (f_store) { f_store[i] = fv; g_store[i] = gv; }
  };
  store(i0, f, g);
  for (int i = i0; i != i1; i += dir) {
    const Scalar r0 = r(i), rm = r(i) * ratio, r1 = r(i + dir);
    const Scalar dt = std::log(r1 / r0);
    Scalar k1f, k1g, k2f, k2g, k3f, k3g, k4f, k4g;
    rhs(r0, f, g, k1f, k1g);
    rhs(rm, f + dt / 2 * k1f, g + dt / 2 * k1g, k2f, k2g);
    rhs(rm, f + dt / 2 * k2f, g + dt / 2 * k2g, k3f, k3g);
    rhs(r1, f + dt * k3f, g + dt * k3g, k4f, k4g);
    f += dt / 6 * (k1f + 2 * k2f + 2 * k3f + k4f);
    g += dt / 6 * (k1g + 2 * k2g + 2 * k3g + k4g);
    if (!std::isfinite(f) || !std::isfinite(g))
      throw std::runtime_error("radial integration diverged: grid too coarse near origin");
    const Scalar mag = std::max(std::abs(f), std::abs(g));
    if (mag > Scalar(1e250)) {
      f /= mag;
      g /= mag;
      if (f_store)
        for (int j = i0; j != i + dir; j += dir) { f_store[j] /= mag; g_store[j] /= mag; }
    }
    store(i + dir, f, g);
  }
  f_end = f;
  g_end = g;
}

}  // namespace detail

// Two-sided shooting with an oracle-informed bracket ladder.  The bracket
// starts at +-1e-8 m around the oracle value (plus any potential offset) and
// widens tenfold up to +-1e-3 m; starting narrow keeps neighbouring
// principal levels of the same kappa channel out of the bracket.
template <class Scalar>
RadialSolution<Scalar> solve_bound_state(const CoulombProblem<Scalar>& p, const QuantumNumbers& q,
                                         const RadialGrid<Scalar>& grid,
                                         Scalar potential_offset = 0) {
  validate_problem(p);
  if (!admissible(q)) throw std::domain_error("solve_bound_state: inadmissible (n, kappa)");
  if (!(grid.r_min > 0 && grid.r_min < grid.r_max))
    throw std::invalid_argument("solve_bound_state: need 0 < r_min < r_max");
  if (grid.nodes < 100) throw std::invalid_argument("solve_bound_state: need >= 100 nodes");

  const Scalar za = p.Z * p.alpha;
  const Scalar gamma = std::sqrt(Scalar(q.kappa) * q.kappa - za * za);
  const int n_nodes = grid.nodes;
  const Scalar dt = std::log(grid.r_max / grid.r_min) / (n_nodes - 1);
  if (dt * (std::abs(Scalar(q.kappa)) + za + 1) > Scalar(0.5))
    throw std::runtime_error("solve_bound_state: grid too coarse near origin");

  Eigen::Array<Scalar, Eigen::Dynamic, 1> r(n_nodes);
  for (int i = 0; i < n_nodes; ++i) r(i) = grid.r_min * std::exp(dt * i);

  // match near the wavefunction peak, r ~ n^2 / (m alpha Z)
  const Scalar r_match = Scalar(q.n) * q.n / (p.m * p.alpha * p.Z);
  int i_match = int(std::lround(std::log(r_match / grid.r_min) / dt));
  i_match = std::clamp(i_match, 1, n_nodes - 2);

  const Scalar v0 = potential_offset;
  auto defect = [&](Scalar E) {
    const detail::RadialRhs<Scalar> rhs{Scalar(q.kappa), E, p.m, za, v0};
    Scalar fo, go, fi, gi;
    // regular branch at the origin: (f, g) ~ r^gamma (Z alpha, gamma + kappa)
    detail::integrate_radial(rhs, r, 0, i_match, za, gamma + q.kappa, (Scalar*)nullptr,
                             (Scalar*)nullptr, fo, go);
    // decaying branch at infinity: g/f -> -sqrt((m - E')/(m + E')), E' = E - v0
    const Scalar ratio_inf = -std::sqrt((p.m - (E - v0)) / (p.m + (E - v0)));
    detail::integrate_radial(rhs, r, n_nodes - 1, i_match, Scalar(1), ratio_inf,
                             (Scalar*)nullptr, (Scalar*)nullptr, fi, gi);
    const Scalar no = std::hypot(fo, go), ni = std::hypot(fi, gi);
    return (fo * gi - go * fi) / (no * ni);
  };

  // bound-state window for the effective energy E - v0 is (0, m)
  const Scalar e_lo_lim = v0 + Scalar(1e-12) * p.m;
  const Scalar e_hi_lim = v0 + p.m * (1 - std::numeric_limits<Scalar>::epsilon());
  const Scalar e_oracle = sommerfeld_energy(p, q) + v0;

  Scalar lo = 0, hi = 0, d_lo = 0, d_hi = 0;
  bool bracketed = false;
  for (Scalar rel = Scalar(1e-8); rel <= Scalar(1.1e-3); rel *= 10) {
    lo = std::max(e_oracle - rel * p.m, e_lo_lim);
    hi = std::min(e_oracle + rel * p.m, e_hi_lim);
    d_lo = defect(lo);
    d_hi = defect(hi);
    if ((d_lo < 0) != (d_hi < 0)) {
      bracketed = true;
      break;
    }
  }
  if (!bracketed) throw std::runtime_error("solve_bound_state: state not found in bracket");

  Scalar mid = (lo + hi) / 2;
  for (int it = 0; it < 200 && hi - lo > 4 * std::numeric_limits<Scalar>::epsilon() * p.m; ++it) {
    mid = (lo + hi) / 2;
    const Scalar d_mid = defect(mid);
    if (d_mid == 0) break;
    if ((d_mid < 0) == (d_lo < 0)) {
      lo = mid;
      d_lo = d_mid;
    } else {
      hi = mid;
      d_hi = d_mid;
    }
  }
  const Scalar E = mid;
  if (!(std::abs(defect(E)) < Scalar(1e-10)))
    throw std::runtime_error("solve_bound_state: matching defect did not converge");

  // final pass with storage, glue the two branches at the matching node
  RadialSolution<Scalar> sol;
  sol.energy = E;
  sol.r = r;
  sol.f.resize(n_nodes);
  sol.g.resize(n_nodes);
  Eigen::Array<Scalar, Eigen::Dynamic, 1> fi_arr(n_nodes), gi_arr(n_nodes);
  const detail::RadialRhs<Scalar> rhs{Scalar(q.kappa), E, p.m, za, v0};
  Scalar fo, go, fi, gi;
  detail::integrate_radial(rhs, r, 0, i_match, za, gamma + q.kappa, sol.f.data(), sol.g.data(),
                           fo, go);
  const Scalar ratio_inf = -std::sqrt((p.m - (E - v0)) / (p.m + (E - v0)));
  detail::integrate_radial(rhs, r, n_nodes - 1, i_match, Scalar(1), ratio_inf, fi_arr.data(),
                           gi_arr.data(), fi, gi);
  // least-squares proportionality factor between the branches at the match
  const Scalar s = (fo * fi + go * gi) / (fi * fi + gi * gi);
  for (int i = i_match + 1; i < n_nodes; ++i) {
    sol.f(i) = s * fi_arr(i);
    sol.g(i) = s * gi_arr(i);
  }

  // normalize  int (f^2 + g^2) dr = 1  by the trapezoid rule
  Scalar norm2 = 0;
  for (int i = 0; i + 1 < n_nodes; ++i) {
    const Scalar y0 = sol.f(i) * sol.f(i) + sol.g(i) * sol.g(i);
    const Scalar y1 = sol.f(i + 1) * sol.f(i + 1) + sol.g(i + 1) * sol.g(i + 1);
    norm2 += (y0 + y1) / 2 * (r(i + 1) - r(i));
  }
  const Scalar scale = 1 / std::sqrt(norm2);
  sol.f *= scale;
  sol.g *= scale;
  return sol;
}

template <class Scalar = double>
struct SpectrumRow {
  int Z, n, kappa;
  Scalar E_numeric, E_oracle, rel_err;  // rel_err = |E_numeric - E_oracle| / m
};

template <class Scalar>
std::vector<SpectrumRow<Scalar>> compute_spectrum(const CoulombProblem<Scalar>& p, int n_max,
                                                  const RadialGrid<Scalar>& grid) {
  std::vector<SpectrumRow<Scalar>> rows;
  for (const QuantumNumbers& q : levels_up_to(n_max)) {
    const Scalar e_num = solve_bound_state(p, q, grid).energy;
    const Scalar e_ora = sommerfeld_energy(p, q);
    rows.push_back({p.Z, q.n, q.kappa, e_num, e_ora, std::abs(e_num - e_ora) / p.m});
  }
  return rows;
}

template <class Scalar = double>
struct GaugeShiftReport {
  Scalar shift;             // applied constant potential offset (energy units)
  Scalar zero_shift_error;  // re-solve with offset 0 reproduces the spectrum
  Scalar shift_error;       // max |E(v0) - E(0) - v0| / m over tested levels
  Scalar additivity_error;  // |E(2 v0) - E(v0) - v0| / m on the ground state
  Scalar tolerance{};
  bool pass{};
};

// A constant added to the potential is the spectral fingerprint of the pure
// gauge A_t -> A_t + c, chi = c t: every eigenvalue must shift by exactly the
// added constant (given here directly in energy units, i.e. the product e c).
template <class Scalar>
GaugeShiftReport<Scalar> gauge_shift_check(const CoulombProblem<Scalar>& p, Scalar c,
                                           const RadialGrid<Scalar>& grid,
                                           Scalar tolerance = Scalar(1e-8)) {
  GaugeShiftReport<Scalar> rep;
  rep.shift = c;
  rep.tolerance = tolerance;
  rep.zero_shift_error = 0;
  rep.shift_error = 0;
  const std::vector<QuantumNumbers> levels{{1, -1}, {2, -1}};
  for (const QuantumNumbers& q : levels) {
    const Scalar e0 = solve_bound_state(p, q, grid, Scalar(0)).energy;
    const Scalar e0_again = solve_bound_state(p, q, grid, Scalar(0)).energy;
    const Scalar ec = solve_bound_state(p, q, grid, c).energy;
    rep.zero_shift_error = std::max(rep.zero_shift_error, std::abs(e0_again - e0) / p.m);
    rep.shift_error = std::max(rep.shift_error, std::abs(ec - e0 - c) / p.m);
  }
  const Scalar ec1 = solve_bound_state(p, QuantumNumbers{1, -1}, grid, c).energy;
  const Scalar ec2 = solve_bound_state(p, QuantumNumbers{1, -1}, grid, 2 * c).energy;
  rep.additivity_error = std::abs(ec2 - ec1 - c) / p.m;
  rep.pass = rep.zero_shift_error <= tolerance && rep.shift_error <= tolerance &&
             rep.additivity_error <= tolerance;
  return rep;
}

}  // namespace dirackit
