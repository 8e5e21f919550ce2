#pragma once

// Dirac gamma matrices in the block representation built from Pauli matrices,
// plus the small set of Clifford-algebra helpers everything else consumes.
// Entries are Gaussian integers (0, +-1, +-i), so identities like
// {gamma^mu, gamma^nu} = 2 g^{mu nu} I hold exactly in floating point.

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <stdexcept>

namespace dirackit {

enum class Axis : int { T = 0, X = 1, Y = 2, Z = 3 };

inline constexpr std::array<Axis, 4> all_axes{Axis::T, Axis::X, Axis::Y, Axis::Z};

inline constexpr const char* axis_name(Axis a) {
  constexpr const char* names[4] = {"t", "x", "y", "z"};
  return names[static_cast<int>(a)];
}

// metric signature (+1, -1, -1, -1)
inline constexpr int metric_sign(Axis a) { return a == Axis::T ? +1 : -1; }

template <class Scalar = double>
using Complex = std::complex<Scalar>;

template <class Scalar = double>
using ComplexMatrix2 = Eigen::Matrix<Complex<Scalar>, 2, 2>;

template <class Scalar = double>
using ComplexMatrix4 = Eigen::Matrix<Complex<Scalar>, 4, 4>;

template <class Scalar = double>
using Bispinor = Eigen::Matrix<Complex<Scalar>, 4, 1>;

// sigma_1 = (0 1; 1 0), sigma_2 = (0 -i; i 0), sigma_3 = (1 0; 0 -1)
template <class Scalar = double>
ComplexMatrix2<Scalar> pauli_matrix(int k) {
  const Complex<Scalar> i(0, 1);
  ComplexMatrix2<Scalar> s;
  switch (k) {
    case 1: s << 0, 1, 1, 0; break;
    case 2: s << 0, -i, i, 0; break;
    case 3: s << 1, 0, 0, -1; break;
    default: throw std::invalid_argument("pauli_matrix: k must be 1, 2 or 3");
  }
  return s;
}

template <class Scalar = double>
struct GammaSet {
  std::array<ComplexMatrix4<Scalar>, 4> gamma;  // indexed by Axis
  std::array<int, 4> signature{+1, -1, -1, -1};

  const ComplexMatrix4<Scalar>& operator[](Axis a) const {
    return gamma[static_cast<int>(a)];
  }
};

// Time matrix has identity blocks off the diagonal, spatial matrix k has
// blocks (0, -sigma_k; sigma_k, 0).
template <class Scalar = double>
GammaSet<Scalar> build_gamma_set() {
  GammaSet<Scalar> g;
  const ComplexMatrix2<Scalar> id2 = ComplexMatrix2<Scalar>::Identity();
  g.gamma[0].setZero();
  g.gamma[0].template block<2, 2>(0, 2) = id2;
  g.gamma[0].template block<2, 2>(2, 0) = id2;
  for (int k = 1; k <= 3; ++k) {
    const ComplexMatrix2<Scalar> s = pauli_matrix<Scalar>(k);
    g.gamma[k].setZero();
    g.gamma[k].template block<2, 2>(0, 2) = -s;
    g.gamma[k].template block<2, 2>(2, 0) = s;
  }
  return g;
}

// shared immutable instance; construction is cheap but callers hit this a lot
template <class Scalar = double>
const GammaSet<Scalar>& gamma_set() {
  static const GammaSet<Scalar> g = build_gamma_set<Scalar>();
  return g;
}

template <class Scalar>
ComplexMatrix4<Scalar> anticommutator(const ComplexMatrix4<Scalar>& a,
                                      const ComplexMatrix4<Scalar>& b) {
  return a * b + b * a;
}

template <class Scalar>
Bispinor<Scalar> apply(const ComplexMatrix4<Scalar>& m, const Bispinor<Scalar>& s) {
  return m * s;
}

}  // namespace dirackit
