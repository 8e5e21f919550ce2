#pragma once

// Uniform 4D sampling grid with row-major node storage (t slowest, z
// fastest).  An axis of extent 1 is inactive: fields are constant along it
// and no derivative is taken there.  Differentiation uses second-order
// central differences on interior nodes and first-order one-sided stencils
// at the boundary, so norms of discrete identities are taken on interior
// nodes only.

#include <Eigen/Dense>

#include <array>
#include <cstdint>
#include <stdexcept>

namespace dirackit {

template <class Scalar = double>
struct Grid4 {
  std::array<int, 4> extents{2, 2, 1, 1};
  std::array<Scalar, 4> spacing{1, 1, 1, 1};
  std::array<Scalar, 4> origin{0, 0, 0, 0};

  std::int64_t size() const {
    return std::int64_t(extents[0]) * extents[1] * extents[2] * extents[3];
  }

  bool active(int axis) const { return extents[axis] >= 2; }

  std::int64_t stride(int axis) const {
    std::int64_t s = 1;
    for (int a = 3; a > axis; --a) s *= extents[a];
    return s;
  }

  std::int64_t node(const std::array<int, 4>& idx) const {
    return ((std::int64_t(idx[0]) * extents[1] + idx[1]) * extents[2] + idx[2]) * extents[3] +
           idx[3];
  }

  std::array<int, 4> index_of(std::int64_t node) const {
    std::array<int, 4> idx;
    idx[3] = int(node % extents[3]); node /= extents[3];
    idx[2] = int(node % extents[2]); node /= extents[2];
    idx[1] = int(node % extents[1]); node /= extents[1];
    idx[0] = int(node);
    return idx;
  }

  int axis_index(std::int64_t node, int axis) const {
    return int((node / stride(axis)) % extents[axis]);
  }

  Scalar coordinate(int axis, int idx) const { return origin[axis] + spacing[axis] * idx; }

  std::array<Scalar, 4> position(std::int64_t node) const {
    const std::array<int, 4> idx = index_of(node);
    return {coordinate(0, idx[0]), coordinate(1, idx[1]), coordinate(2, idx[2]),
            coordinate(3, idx[3])};
  }

  // at least `depth` nodes away from every boundary of every active axis
  bool interior(std::int64_t node, int depth = 1) const {
    for (int a = 0; a < 4; ++a) {
      if (!active(a)) continue;
      const int idx = axis_index(node, a);
      if (idx < depth || idx >= extents[a] - depth) return false;
    }
    return true;
  }
};

template <class Scalar>
Grid4<Scalar> make_grid(const std::array<int, 4>& extents, const std::array<Scalar, 4>& spacing,
                        const std::array<Scalar, 4>& origin = {0, 0, 0, 0}) {
  for (int a = 0; a < 4; ++a) {
    if (extents[a] < 1) throw std::invalid_argument("make_grid: extents must be >= 1");
    if (!(spacing[a] > 0)) throw std::invalid_argument("make_grid: spacing must be positive");
  }
  return {extents, spacing, origin};
}

template <class Scalar>
bool same_layout(const Grid4<Scalar>& a, const Grid4<Scalar>& b) {
  return a.extents == b.extents && a.spacing == b.spacing && a.origin == b.origin;
}

// d/dx_axis of a per-node column by central differences (one-sided at the
// boundary); identically zero along inactive axes
template <class Scalar, class Derived>
Eigen::Array<typename Derived::Scalar, Eigen::Dynamic, 1> grid_derivative(
    const Grid4<Scalar>& g, const Eigen::DenseBase<Derived>& values, int axis) {
  using T = typename Derived::Scalar;
  const auto& v = values.derived();
  if (v.size() != g.size()) throw std::invalid_argument("grid_derivative: size mismatch");
  Eigen::Array<T, Eigen::Dynamic, 1> out(g.size());
  if (!g.active(axis)) {
    out.setZero();
    return out;
  }
  const std::int64_t s = g.stride(axis);
  const int n = g.extents[axis];
  const Scalar h = g.spacing[axis];
  for (std::int64_t node = 0; node < g.size(); ++node) {
    const int idx = g.axis_index(node, axis);
    if (idx >= 1 && idx + 1 < n)
      out(node) = (v(node + s) - v(node - s)) / (2 * h);
    else if (idx == 0)
      out(node) = (v(node + s) - v(node)) / h;
    else
      out(node) = (v(node) - v(node - s)) / h;
  }
  return out;
}

}  // namespace dirackit
