// Command-line front end: every verification suite and simulation as a
// subcommand with a machine-readable report.
//
// Exit codes: 0 all checks pass, 1 tolerance failure, 2 usage error.
// Default output lands in DIRACKIT_OUT_DIR (if set) as <command>.<ext>;
// --out overrides verbatim.  On failure the report is also printed to stderr
// regardless of the chosen file format.

#include <CLI11.hpp>
#include <json.hpp>

#include "dirackit/io.hpp"
#include "dirackit/report.hpp"
#include "dirackit/suites.hpp"

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

fs::path resolve_out(const std::string& user_out, const std::string& default_name) {
  if (!user_out.empty()) return user_out;
  if (const char* dir = std::getenv("DIRACKIT_OUT_DIR"); dir && *dir)
    return fs::path(dir) / default_name;
  return default_name;
}

void write_checks_csv(const fs::path& path, const dirackit::Report& rep) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path.string());
  out << "name,max_deviation,tolerance,pass\n";
  for (const auto& c : rep.checks)
    out << c.name << "," << dirackit::g17(c.max_deviation) << ","
        << dirackit::g17(c.tolerance) << "," << (c.pass ? 1 : 0) << "\n";
}

int emit(const dirackit::Report& rep, const std::string& out, const std::string& format) {
  const bool csv = format == "csv";
  const fs::path path = resolve_out(out, rep.command + (csv ? ".csv" : ".json"));
  if (csv)
    write_checks_csv(path, rep);
  else
    rep.write(path);
  if (!rep.pass()) {
    std::cerr << rep.to_json().dump(2) << "\n";
    std::cout << "FAIL " << path.string() << "\n";
    return 1;
  }
  std::cout << "PASS " << path.string() << "\n";
  return 0;
}

json sweep_json(const dirackit::OrderSweep& s) {
  return {{"deviation", s.deviation}, {"order", s.order}};
}

// ---------------------------------------------------------------------------

struct PlanewaveArgs {
  std::uint64_t seed = 1;
  int waves = 100, points = 10;
  double tol = 1e-10, order_window = 0.2;
  std::string out, format = "json";
};

int run_planewave(const PlanewaveArgs& a) {
  const auto r = dirackit::run_planewave_suite(a.seed, a.waves, a.points);
  dirackit::Report rep;
  rep.command = "planewave-verify";
  rep.params = {{"seed", a.seed},     {"waves", a.waves},
                {"points", a.points}, {"tol", a.tol},
                {"order_window", a.order_window}};
  rep.add("analytic_residual", r.max_rel_residual, a.tol);
  rep.add("mass_shell_momentum_form", r.max_shell_defect, 1e-12);
  rep.add("mass_shell_wavelength_form", r.max_wavelength_defect, 1e-12);
  rep.add("wavelength_phase_agreement", r.max_form_disagreement, a.tol);
  rep.add("basis_orthonormality", r.max_basis_defect, 1e-12);
  rep.add("difference_residual_order_gap", r.fd_worst_gap, a.order_window);
  rep.details["fd_orders"] = r.fd_orders;
  return emit(rep, a.out, a.format);
}

struct SlidingArgs {
  std::uint64_t seed = 2;
  int waves = 50, samples = 8;
  double tol = 1e-10;
  std::string out, format = "json";
};

int run_sliding(const SlidingArgs& a) {
  const auto r = dirackit::run_sliding_suite(a.seed, a.waves, a.samples);
  dirackit::Report rep;
  rep.command = "sliding-verify";
  rep.params = {
      {"seed", a.seed}, {"waves", a.waves}, {"samples", a.samples}, {"tol", a.tol}};
  rep.add("translation_relation", r.max_translation, a.tol);
  rep.add("cancelled_form_residual", r.max_rel_form_residual, a.tol);
  rep.add("factor_2pi_consistency", r.factor_2pi_dev, 1e-12);
  rep.add("spectral_gap_violation", r.gap_violation, 0.0);
  json tr = json::object();
  for (dirackit::Axis axis : dirackit::all_axes) {
    const auto& c = r.translation[static_cast<int>(axis)];
    tr[dirackit::axis_name(axis)] = {
        {"max_residual", c.max_residual}, {"samples", c.samples}, {"pass", c.pass}};
  }
  rep.details["translation"] = tr;
  return emit(rep, a.out, a.format);
}

struct ReflectArgs {
  std::uint64_t seed = 3;
  int waves = 50, points = 6;
  double tol = 1e-10;
  std::string out, format = "json";
};

int run_reflect(const ReflectArgs& a) {
  const auto r = dirackit::run_reflect_suite(a.seed, a.waves, a.points);
  dirackit::Report rep;
  rep.command = "reflect-verify";
  rep.params = {
      {"seed", a.seed}, {"waves", a.waves}, {"points", a.points}, {"tol", a.tol}};
  rep.add("reflected_solution_residual", r.max_rel_solution_residual, a.tol);
  rep.add("double_reflection", r.max_double_reflection, a.tol);
  rep.add("momentum_component_pattern", r.max_momentum_pattern, 0.0);
  rep.add("field_vs_wave_view", r.max_field_wave_mismatch, 0.0);
  return emit(rep, a.out, a.format);
}

struct ManifoldArgs {
  double l0 = 2 * std::numbers::pi;
  double t_start = 0, t_end = 3;
  int steps = 10, grid = 1024;
  double tol = 1e-12;
  std::string out, format = "csv";
};

int run_manifold(const ManifoldArgs& a) {
  const auto series = dirackit::propagate(a.l0, a.t_start, a.t_end, a.steps, a.grid);

  dirackit::Report rep;
  rep.command = "manifold-sim";
  rep.params = {{"l0", a.l0},     {"t_start", a.t_start}, {"t_end", a.t_end},
                {"steps", a.steps}, {"grid", a.grid},     {"tol", a.tol}};

  // the reachable-region width must grow strictly whenever |T| does
  bool ordered = true;
  double margin = -1e300;
  for (std::size_t i = 0; i + 1 < series.size(); ++i) {
    ordered = ordered && std::abs(series[i].T) < std::abs(series[i + 1].T);
    margin = std::max(margin, series[i].x_max - series[i + 1].x_max);
  }
  if (ordered) rep.add("x_max_strictly_increasing", margin, 0.0);

  // ring-wave representation checks on the manifold of the same perimeter
  const auto man = dirackit::make_circle(a.l0);
  double resid = 0, trans = 0, period = 0;
  for (double x : {0.0, 0.3, -2.5, 7.1}) {
    resid = std::max(resid, dirackit::representation_residual(man, x));
    trans = std::max(trans, dirackit::translation_deviation(man, x));
    period = std::max(period, dirackit::periodicity_deviation(man, x));
  }
  rep.add("ring_representation_residual", resid, a.tol);
  rep.add("ring_translation", trans, a.tol);
  rep.add("ring_periodicity", period, a.tol);

  const bool csv = a.format == "csv";
  const fs::path path = resolve_out(a.out, rep.command + std::string(csv ? ".csv" : ".json"));
  if (csv) {
    dirackit::write_manifold_csv(path, series);
  } else {
    json rows = json::array();
    for (const auto& s : series)
      rows.push_back({{"T", s.T}, {"x_min", s.x_min}, {"x_max", s.x_max}});
    rep.details["series"] = rows;
    rep.write(path);
  }
  if (!rep.pass()) {
    std::cerr << rep.to_json().dump(2) << "\n";
    std::cout << "FAIL " << path.string() << "\n";
    return 1;
  }
  std::cout << "PASS " << path.string() << "\n";
  return 0;
}

struct WeylArgs {
  int nt = 64, nx = 64, refinements = 2;
  std::uint64_t seed = 7;
  double order_window = 0.2, resid_tol = 1e-10;
  std::string out, format = "json", dump_csv, dump_binary;
};

int run_weyl(const WeylArgs& a) {
  const auto r = dirackit::run_weyl_suite(a.nt, a.nx, a.refinements, a.seed);
  dirackit::Report rep;
  rep.command = "weyl-check";
  rep.params = {{"nt", a.nt},     {"nx", a.nx},
                {"refinements", a.refinements}, {"seed", a.seed},
                {"order_window", a.order_window}, {"resid_tol", a.resid_tol}};
  rep.add("gradient_curl_order_gap", r.curl_of_gradient.worst_gap(), a.order_window);
  rep.add("gauge_invariance_order_gap", r.gauge_invariance.worst_gap(), a.order_window);
  rep.add("cyclic_identity_order_gap", r.bianchi.worst_gap(), a.order_window);
  rep.add("em_covariance_order_gap", r.em_covariance.worst_gap(), a.order_window);
  rep.add("grid_gauge_invariance", r.discrete_gauge_invariance, a.resid_tol);
  rep.add("grid_cyclic_identity", r.discrete_bianchi, a.resid_tol);
  rep.add("gauge_group_composition", r.gauge_group, a.resid_tol);
  rep.add("unit_scale_identity", r.identity_scale, 0.0);
  rep.add("linear_connectivity_curvature", r.linear_curvature, 1e-12);
  rep.details["gradient_curl"] = sweep_json(r.curl_of_gradient);
  rep.details["gauge_invariance"] = sweep_json(r.gauge_invariance);
  rep.details["cyclic_identity"] = sweep_json(r.bianchi);
  rep.details["em_covariance"] = sweep_json(r.em_covariance);

  if (!a.dump_csv.empty() || !a.dump_binary.empty()) {
    dirackit::SplitMix64 rng(a.seed);
    const auto g = dirackit::slice_grid(a.nt, a.nx);
    const std::array<bool, 4> tx{true, true, false, false};
    const auto lam_ref = dirackit::make_smooth_scalar<double>(rng, 5, 7.0, 1.0, tx);
    dirackit::NodeArray4<double> phi(g.size(), 4);
    for (int c = 0; c < 4; ++c)
      phi.col(c) = sample_value(g, dirackit::make_smooth_scalar<double>(rng, 5, 7.0, 1.0, tx));
    dirackit::NodeArray<double> lam = sample_value(g, lam_ref).exp();
    const auto field = dirackit::make_weyl_field(g, std::move(lam), std::move(phi));
    if (!a.dump_csv.empty()) dirackit::write_weyl_csv(a.dump_csv, field);
    if (!a.dump_binary.empty()) dirackit::write_weyl_binary(a.dump_binary, field);
  }
  return emit(rep, a.out, a.format);
}

struct HydrogenArgs {
  int Z = 1, n_max = 3, nodes = 20000;
  double alpha = 1.0 / 137.035999, mass = 1.0;
  double tol = 1e-6;
  double gauge_shift = 0, gauge_tol = 1e-8;
  std::string out, format = "csv", dump_radial;
  int radial_n = 1, radial_kappa = -1;
};

int run_hydrogen(const HydrogenArgs& a) {
  const dirackit::CoulombProblem<double> prob{a.Z, a.alpha, a.mass};
  dirackit::validate_problem(prob);
  const auto grid = dirackit::default_grid(prob, a.nodes);
  const auto rows = dirackit::compute_spectrum(prob, a.n_max, grid);

  dirackit::Report rep;
  rep.command = "hydrogen-spectrum";
  rep.params = {{"Z", a.Z},         {"n_max", a.n_max}, {"nodes", a.nodes},
                {"alpha", a.alpha}, {"mass", a.mass},   {"tol", a.tol}};

  double worst = 0;
  for (const auto& row : rows) worst = std::max(worst, row.rel_err);
  rep.add("energy_vs_closed_form", worst, a.tol);

  if (a.gauge_shift != 0) {
    const auto gs =
        dirackit::gauge_shift_check(prob, a.gauge_shift * a.mass, grid, a.gauge_tol);
    rep.params["gauge_shift"] = a.gauge_shift;
    rep.add("gauge_shift_zero_reference", gs.zero_shift_error, a.gauge_tol);
    rep.add("gauge_shift_spectrum_offset", gs.shift_error, a.gauge_tol);
    rep.add("gauge_shift_additivity", gs.additivity_error, a.gauge_tol);
  }

  if (!a.dump_radial.empty()) {
    const dirackit::QuantumNumbers q{a.radial_n, a.radial_kappa};
    if (!dirackit::admissible(q))
      throw CLI::ValidationError("--radial-n/--radial-kappa",
                                 "inadmissible quantum numbers");
    dirackit::write_radial_csv(a.dump_radial, dirackit::solve_bound_state(prob, q, grid));
  }

  const bool csv = a.format == "csv";
  const fs::path path = resolve_out(a.out, rep.command + std::string(csv ? ".csv" : ".json"));
  if (csv) {
    dirackit::write_hydrogen_csv(path, rows);
  } else {
    json jrows = json::array();
    for (const auto& r : rows)
      jrows.push_back({{"Z", r.Z},
                       {"n", r.n},
                       {"kappa", r.kappa},
                       {"E_numeric", r.E_numeric},
                       {"E_oracle", r.E_oracle},
                       {"rel_err", r.rel_err}});
    rep.details["rows"] = jrows;
    rep.write(path);
  }
  if (!rep.pass()) {
    std::cerr << rep.to_json().dump(2) << "\n";
    std::cout << "FAIL " << path.string() << "\n";
    return 1;
  }
  std::cout << "PASS " << path.string() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bispinor-wave verification toolkit"};
  app.require_subcommand(1);

  PlanewaveArgs pw;
  auto* pw_cmd = app.add_subcommand(
      "planewave-verify", "plane-wave solutions: residuals, mass shell, wavelength form");
  pw_cmd->add_option("--seed", pw.seed, "RNG seed");
  pw_cmd->add_option("--waves", pw.waves, "number of random waves")->check(CLI::PositiveNumber);
  pw_cmd->add_option("--points", pw.points, "sample points per wave")
      ->check(CLI::PositiveNumber);
  pw_cmd->add_option("--tol", pw.tol, "residual tolerance");
  pw_cmd->add_option("--order-window", pw.order_window, "allowed |order - 2|");
  pw_cmd->add_option("--out", pw.out, "output path");
  pw_cmd->add_option("--format", pw.format, "json | csv")
      ->check(CLI::IsMember({"json", "csv"}));

  SlidingArgs sl;
  auto* sl_cmd = app.add_subcommand(
      "sliding-verify", "translation operators, periodicity, cancelled equation form");
  sl_cmd->add_option("--seed", sl.seed, "RNG seed");
  sl_cmd->add_option("--waves", sl.waves, "number of random waves")->check(CLI::PositiveNumber);
  sl_cmd->add_option("--samples", sl.samples, "sample points per wave and axis")
      ->check(CLI::PositiveNumber);
  sl_cmd->add_option("--tol", sl.tol, "residual tolerance");
  sl_cmd->add_option("--out", sl.out, "output path");
  sl_cmd->add_option("--format", sl.format, "json | csv")
      ->check(CLI::IsMember({"json", "csv"}));

  ReflectArgs rf;
  auto* rf_cmd =
      app.add_subcommand("reflect-verify", "reflection solution maps and double reflection");
  rf_cmd->add_option("--seed", rf.seed, "RNG seed");
  rf_cmd->add_option("--waves", rf.waves, "number of random waves")->check(CLI::PositiveNumber);
  rf_cmd->add_option("--points", rf.points, "sample points per wave and axis")
      ->check(CLI::PositiveNumber);
  rf_cmd->add_option("--tol", rf.tol, "residual tolerance");
  rf_cmd->add_option("--out", rf.out, "output path");
  rf_cmd->add_option("--format", rf.format, "json | csv")
      ->check(CLI::IsMember({"json", "csv"}));

  ManifoldArgs mf;
  auto* mf_cmd = app.add_subcommand(
      "manifold-sim", "closed-manifold region growth: T, x_min, x_max time series");
  mf_cmd->add_option("--l0", mf.l0, "manifold perimeter")->check(CLI::PositiveNumber);
  mf_cmd->add_option("--t-start", mf.t_start, "first time");
  mf_cmd->add_option("--t-end", mf.t_end, "last time");
  mf_cmd->add_option("--steps", mf.steps, "number of rows")->check(CLI::Range(2, 1 << 20));
  mf_cmd->add_option("--grid", mf.grid, "family sweep resolution")
      ->check(CLI::Range(2, 1 << 24));
  mf_cmd->add_option("--tol", mf.tol, "ring-wave residual tolerance");
  mf_cmd->add_option("--out", mf.out, "output path");
  mf_cmd->add_option("--format", mf.format, "csv | json")
      ->check(CLI::IsMember({"json", "csv"}));

  WeylArgs wy;
  auto* wy_cmd = app.add_subcommand(
      "weyl-check", "scale geometry: gauge invariance, cyclic identity, EM covariance");
  wy_cmd->add_option("--nt", wy.nt, "grid nodes along t")->check(CLI::Range(3, 1 << 16));
  wy_cmd->add_option("--nx", wy.nx, "grid nodes along x")->check(CLI::Range(3, 1 << 16));
  wy_cmd->add_option("--refinements", wy.refinements, "number of grid halvings")
      ->check(CLI::Range(1, 8));
  wy_cmd->add_option("--seed", wy.seed, "RNG seed");
  wy_cmd->add_option("--order-window", wy.order_window, "allowed |order - 2|");
  wy_cmd->add_option("--resid-tol", wy.resid_tol, "grid-route identity tolerance");
  wy_cmd->add_option("--dump-csv", wy.dump_csv, "write the sampled field as CSV");
  wy_cmd->add_option("--dump-binary", wy.dump_binary, "write the sampled field as binary");
  wy_cmd->add_option("--out", wy.out, "output path");
  wy_cmd->add_option("--format", wy.format, "json | csv")
      ->check(CLI::IsMember({"json", "csv"}));

  HydrogenArgs hy;
  auto* hy_cmd = app.add_subcommand(
      "hydrogen-spectrum", "Coulomb bound states vs the closed-form energy oracle");
  hy_cmd->add_option("--Z", hy.Z, "nuclear charge")->check(CLI::PositiveNumber);
  hy_cmd->add_option("--n-max", hy.n_max, "largest principal quantum number")
      ->check(CLI::PositiveNumber);
  hy_cmd->add_option("--alpha", hy.alpha, "fine-structure constant")
      ->check(CLI::PositiveNumber);
  hy_cmd->add_option("--mass", hy.mass, "particle mass")->check(CLI::PositiveNumber);
  hy_cmd->add_option("--nodes", hy.nodes, "radial grid nodes")->check(CLI::Range(50, 1 << 24));
  hy_cmd->add_option("--tol", hy.tol, "relative energy tolerance");
  hy_cmd->add_option("--gauge-shift", hy.gauge_shift,
                     "also verify a constant potential shift (units of mass)");
  hy_cmd->add_option("--gauge-tol", hy.gauge_tol, "gauge-shift tolerance");
  hy_cmd->add_option("--dump-radial", hy.dump_radial, "write one radial solution as CSV");
  hy_cmd->add_option("--radial-n", hy.radial_n, "principal number for --dump-radial");
  hy_cmd->add_option("--radial-kappa", hy.radial_kappa, "kappa for --dump-radial");
  hy_cmd->add_option("--out", hy.out, "output path");
  hy_cmd->add_option("--format", hy.format, "csv | json")
      ->check(CLI::IsMember({"json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (pw_cmd->parsed()) return run_planewave(pw);
    if (sl_cmd->parsed()) return run_sliding(sl);
    if (rf_cmd->parsed()) return run_reflect(rf);
    if (mf_cmd->parsed()) return run_manifold(mf);
    if (wy_cmd->parsed()) return run_weyl(wy);
    if (hy_cmd->parsed()) return run_hydrogen(hy);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
