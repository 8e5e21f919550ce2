#pragma once

// CSV and binary serialization.  Numbers are printed with %.17g (shortest
// form that still round-trips doubles exactly) through snprintf with the C
// locale semantics of the numeric formats, so output is deterministic.
//
// Field binary layout (little-endian):
//   4 x uint64   extents (t, x, y, z)
//   4 x float64  spacing
//   4 x float64  origin
//   then per node in row-major order (t slowest, z fastest):
//   5 x float64  lambda, phi_t, phi_x, phi_y, phi_z

#include "dirackit/hydrogen.hpp"
#include "dirackit/manifold1d.hpp"
#include "dirackit/weyl.hpp"

#include <bit>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace dirackit {

static_assert(std::endian::native == std::endian::little,
              "binary field layout is little-endian");

inline std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace detail {

inline std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path.string());
  return out;
}

inline std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open input file: " + path.string());
  return in;
}

}  // namespace detail

inline void write_manifold_csv(const std::filesystem::path& path,
                               const std::vector<RegionSnapshot<double>>& series) {
  auto out = detail::open_out(path);
  out << "T,x_min,x_max\n";
  for (const auto& s : series)
    out << g17(s.T) << "," << g17(s.x_min) << "," << g17(s.x_max) << "\n";
}

inline void write_hydrogen_csv(const std::filesystem::path& path,
                               const std::vector<SpectrumRow<double>>& rows) {
  auto out = detail::open_out(path);
  out << "Z,n,kappa,E_numeric,E_oracle,rel_err\n";
  for (const auto& r : rows)
    out << r.Z << "," << r.n << "," << r.kappa << "," << g17(r.E_numeric) << ","
        << g17(r.E_oracle) << "," << g17(r.rel_err) << "\n";
}

inline void write_radial_csv(const std::filesystem::path& path,
                             const RadialSolution<double>& sol) {
  auto out = detail::open_out(path);
  out << "r,f,g\n";
  for (Eigen::Index i = 0; i < sol.r.size(); ++i)
    out << g17(sol.r(i)) << "," << g17(sol.f(i)) << "," << g17(sol.g(i)) << "\n";
}

inline void write_weyl_csv(const std::filesystem::path& path, const WeylField<double>& f) {
  auto out = detail::open_out(path);
  out << "node,t,x,y,z,lambda,phi_t,phi_x,phi_y,phi_z\n";
  for (std::int64_t n = 0; n < f.grid.size(); ++n) {
    const auto pos = f.grid.position(n);
    out << n;
    for (double c : pos) out << "," << g17(c);
    out << "," << g17(f.lambda(n));
    for (int a = 0; a < 4; ++a) out << "," << g17(f.phi(n, a));
    out << "\n";
  }
}

inline WeylField<double> read_weyl_csv(const std::filesystem::path& path,
                                       const Grid4<double>& grid) {
  auto in = detail::open_in(path);
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty field CSV");
  WeylField<double> f{grid, NodeArray<double>(grid.size()), NodeArray4<double>(grid.size(), 4)};
  std::int64_t count = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ss(line);
    std::string cell;
    std::vector<double> vals;
    while (std::getline(ss, cell, ',')) vals.push_back(std::strtod(cell.c_str(), nullptr));
    if (vals.size() != 10) throw std::runtime_error("malformed field CSV row");
    const auto node = std::int64_t(vals[0]);
    if (node < 0 || node >= grid.size()) throw std::runtime_error("field CSV node out of range");
    f.lambda(node) = vals[5];
    for (int a = 0; a < 4; ++a) f.phi(node, a) = vals[6 + a];
    ++count;
  }
  if (count != grid.size()) throw std::runtime_error("field CSV node count mismatch");
  return f;
}

inline void write_weyl_binary(const std::filesystem::path& path, const WeylField<double>& f) {
  auto out = detail::open_out(path);
  auto put_u64 = [&](std::uint64_t v) { out.write(reinterpret_cast<const char*>(&v), 8); };
  auto put_f64 = [&](double v) { out.write(reinterpret_cast<const char*>(&v), 8); };
  for (int a = 0; a < 4; ++a) put_u64(std::uint64_t(f.grid.extents[a]));
  for (int a = 0; a < 4; ++a) put_f64(f.grid.spacing[a]);
  for (int a = 0; a < 4; ++a) put_f64(f.grid.origin[a]);
  for (std::int64_t n = 0; n < f.grid.size(); ++n) {
    put_f64(f.lambda(n));
    for (int a = 0; a < 4; ++a) put_f64(f.phi(n, a));
  }
}

inline WeylField<double> read_weyl_binary(const std::filesystem::path& path) {
  auto in = detail::open_in(path);
  auto get_u64 = [&] {
    std::uint64_t v;
    in.read(reinterpret_cast<char*>(&v), 8);
    return v;
  };
  auto get_f64 = [&] {
    double v;
    in.read(reinterpret_cast<char*>(&v), 8);
    return v;
  };
  Grid4<double> grid;
  for (int a = 0; a < 4; ++a) grid.extents[a] = int(get_u64());
  for (int a = 0; a < 4; ++a) grid.spacing[a] = get_f64();
  for (int a = 0; a < 4; ++a) grid.origin[a] = get_f64();
  if (!in) throw std::runtime_error("truncated field binary header");
  WeylField<double> f{grid, NodeArray<double>(grid.size()), NodeArray4<double>(grid.size(), 4)};
  for (std::int64_t n = 0; n < grid.size(); ++n) {
    f.lambda(n) = get_f64();
    for (int a = 0; a < 4; ++a) f.phi(n, a) = get_f64();
  }
  if (!in) throw std::runtime_error("truncated field binary data");
  return f;
}

}  // namespace dirackit
