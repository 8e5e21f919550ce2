// Acceptance gate for the toolkit: eight criteria, one verdict line each,
// nonzero exit if any fails.  Each criterion re-derives its facts through the
// public interfaces (plus an independent matrix multiply where the claim is
// about exactness) and enforces its wall-clock budget.

#include "dirackit/hydrogen.hpp"
#include "dirackit/suites.hpp"

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using dirackit::Axis;
using dirackit::all_axes;
using Matrix4 = dirackit::ComplexMatrix4<double>;

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

struct Gate {
  int index = 0;
  int failed = 0;

  // prints "[PASS] n. name (t s)" and collects failures; a body returns the
  // list of violated facts, empty meaning the criterion holds
  void criterion(const char* name, double limit_s,
                 const std::function<std::vector<std::string>()>& body) {
    ++index;
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<std::string> problems;
    try {
      problems = body();
    } catch (const std::exception& e) {
      problems.push_back(std::string("unexpected exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (limit_s > 0 && secs > limit_s)
      problems.push_back("took " + fmt(secs) + " s, budget " + fmt(limit_s) + " s");
    const bool ok = problems.empty();
    failed += ok ? 0 : 1;
    std::printf("[%s] %d. %s (%.2f s)\n", ok ? "PASS" : "FAIL", index, name, secs);
    for (const std::string& p : problems) std::printf("       - %s\n", p.c_str());
    std::fflush(stdout);
  }
};

void expect(std::vector<std::string>& problems, bool ok, const std::string& fact) {
  if (!ok) problems.push_back(fact);
}

// brute-force product, independent of Eigen's kernels
Matrix4 slow_mul(const Matrix4& a, const Matrix4& b) {
  Matrix4 c = Matrix4::Zero();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) c(i, j) += a(i, k) * b(k, j);
  return c;
}

int shell(const std::string& cmd) {
  const int status = std::system(cmd.c_str());
  if (status == -1 || !WIFEXITED(status)) return -1;
  return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main() {
  Gate gate;
  std::printf("acceptance: bispinor-wave verification toolkit\n");

  gate.criterion("anticommutators match the metric exactly", 1.0, [] {
    std::vector<std::string> bad;
    const auto& g = dirackit::gamma_set<double>();
    for (Axis i : all_axes)
      for (Axis k : all_axes) {
        const Matrix4 anti = slow_mul(g[i], g[k]) + slow_mul(g[k], g[i]);
        Matrix4 want = Matrix4::Zero();
        if (i == k) want = 2.0 * double(dirackit::metric_sign(i)) * Matrix4::Identity();
        const double dev = (anti - want).cwiseAbs().maxCoeff();
        expect(bad, dev == 0.0,
               std::string("{") + dirackit::axis_name(i) + "," + dirackit::axis_name(k) +
                   "} deviates by " + fmt(dev));
      }
    return bad;
  });

  dirackit::PlanewaveSuiteResult pw;
  gate.criterion("random solutions: analytic residual and difference order", 5.0, [&pw] {
    std::vector<std::string> bad;
    pw = dirackit::run_planewave_suite(1, 100, 10);
    expect(bad, pw.max_rel_residual < 1e-12,
           "relative residual " + fmt(pw.max_rel_residual) + " over 1e-12");
    expect(bad, pw.fd_worst_gap <= 0.1,
           "difference-quotient order off 2 by " + fmt(pw.fd_worst_gap));
    return bad;
  });

  gate.criterion("mass shell holds in momentum and wavelength forms", 0.0, [&pw] {
    std::vector<std::string> bad;
    expect(bad, pw.waves == 100, "suite did not run");
    expect(bad, pw.max_shell_defect < 1e-12,
           "momentum-form defect " + fmt(pw.max_shell_defect) + " over 1e-12");
    expect(bad, pw.max_wavelength_defect < 1e-12,
           "wavelength-form defect " + fmt(pw.max_wavelength_defect) + " over 1e-12");
    return bad;
  });

  gate.criterion("translations, cancelled form, and reflection maps", 10.0, [] {
    std::vector<std::string> bad;
    const auto sl = dirackit::run_sliding_suite(4, 20, 20);
    expect(bad, sl.max_translation < 1e-10,
           "translation relation residual " + fmt(sl.max_translation) + " over 1e-10");
    expect(bad, sl.max_rel_form_residual < 1e-10,
           "cancelled-form residual " + fmt(sl.max_rel_form_residual) + " over 1e-10");
    expect(bad, sl.factor_2pi_dev < 1e-12,
           "2 pi factor deviation " + fmt(sl.factor_2pi_dev) + " over 1e-12");
    expect(bad, sl.gap_violation == 0.0,
           "detuned amplitude slipped under the spectral gap by " + fmt(sl.gap_violation));
    const auto rf = dirackit::run_reflect_suite(9, 20, 20);
    expect(bad, rf.max_rel_solution_residual < 1e-10,
           "reflected-solution residual " + fmt(rf.max_rel_solution_residual) + " over 1e-10");
    expect(bad, rf.max_double_reflection < 1e-10,
           "double reflection deviates by " + fmt(rf.max_double_reflection));
    expect(bad, rf.max_momentum_pattern < 1e-10,
           "momentum component pattern off by " + fmt(rf.max_momentum_pattern));
    expect(bad, rf.max_field_wave_mismatch < 1e-10,
           "field view vs wave view differ by " + fmt(rf.max_field_wave_mismatch));
    return bad;
  });

  gate.criterion("swept ellipse family: exactness and region growth", 5.0, [] {
    std::vector<std::string> bad;
    const auto mf = dirackit::run_manifold_suite(2 * std::numbers::pi, 1024);
    expect(bad, mf.circle_b_dev == 0.0, "unit circle width off by " + fmt(mf.circle_b_dev));
    expect(bad, mf.circle_perimeter_dev == 0.0,
           "circle perimeter off by " + fmt(mf.circle_perimeter_dev));
    expect(bad, mf.amax_value_dev == 0.0,
           "width bound at perimeter 2 pi off by " + fmt(mf.amax_value_dev));
    expect(bad, mf.amax_endpoint_dev == 0.0,
           "region width at T = 0 misses the bound by " + fmt(mf.amax_endpoint_dev));
    expect(bad, mf.monotone_margin < 0.0, "region width is not strictly increasing");
    expect(bad, mf.evenness_dev == 0.0, "region width is uneven in T");
    expect(bad, mf.scaling_dev < 1e-10,
           "scaling covariance off by " + fmt(mf.scaling_dev) + " over 1e-10");
    expect(bad, mf.perimeter_roundtrip < 1e-10,
           "family perimeter drifts by " + fmt(mf.perimeter_roundtrip));
    return bad;
  });

  gate.criterion("geometry identities converge at second order", 30.0, [] {
    std::vector<std::string> bad;
    const auto wy = dirackit::run_weyl_suite(64, 64, 2, 7);
    const auto order = [&bad](const char* what, const dirackit::OrderSweep& s) {
      expect(bad, s.worst_gap() <= 0.2,
             std::string(what) + " order off 2 by " + fmt(s.worst_gap()));
    };
    order("curl of gradient", wy.curl_of_gradient);
    order("curvature gauge invariance", wy.gauge_invariance);
    order("cyclic curvature identity", wy.bianchi);
    order("long-derivative covariance", wy.em_covariance);
    expect(bad, wy.discrete_gauge_invariance <= 1e-10,
           "grid-route gauge invariance " + fmt(wy.discrete_gauge_invariance) + " over 1e-10");
    expect(bad, wy.discrete_bianchi <= 1e-10,
           "grid-route cyclic identity " + fmt(wy.discrete_bianchi) + " over 1e-10");
    return bad;
  });

  gate.criterion("bound-state spectrum against the closed form", 60.0, [] {
    std::vector<std::string> bad;
    const dirackit::CoulombProblem<double> p;
    const auto grid = dirackit::default_grid(p);
    const auto rows = dirackit::compute_spectrum(p, 3, grid);
    double worst = 0;
    for (const auto& r : rows) worst = std::max(worst, r.rel_err);
    expect(bad, rows.size() == 9, "expected 9 levels up to n = 3");
    expect(bad, worst < 1e-6, "spectrum error " + fmt(worst) + " over 1e-6");

    auto energy = [&rows](int n, int kappa) {
      for (const auto& r : rows)
        if (r.n == n && r.kappa == kappa) return r.E_numeric;
      return 0.0;
    };
    const int pairs[3][2] = {{2, 1}, {3, 1}, {3, 2}};
    for (const auto& pr : pairs) {
      const double gap = std::abs(energy(pr[0], -pr[1]) - energy(pr[0], pr[1])) / p.m;
      expect(bad, gap < 1e-6,
             "levels of equal |kappa| split by " + fmt(gap) + " at n = " + fmt(pr[0]));
    }

    const double binding = p.m - energy(1, -1);
    const double nonrel = p.alpha * p.alpha * p.m / 2;
    expect(bad, std::abs(binding - nonrel) / nonrel < 1e-3,
           "binding misses the weak-coupling limit by " +
               fmt(std::abs(binding - nonrel) / nonrel));

    const auto gs = dirackit::gauge_shift_check(p, 0.001 * p.m, grid);
    expect(bad, gs.zero_shift_error < 1e-8,
           "zero-shift reference moved by " + fmt(gs.zero_shift_error));
    expect(bad, gs.shift_error < 1e-8,
           "constant offset shifts levels non-rigidly by " + fmt(gs.shift_error));
    expect(bad, gs.additivity_error < 1e-8,
           "offset additivity off by " + fmt(gs.additivity_error));
    return bad;
  });

  gate.criterion("command-line runs: seeded determinism and exit codes", 0.0, [] {
    std::vector<std::string> bad;
    const fs::path dir = fs::temp_directory_path() / "dirackit_acceptance";
    fs::create_directories(dir);
    const std::string bin = std::string("'") + DIRACKIT_BIN + "'";
    const std::string quiet = " > /dev/null 2>&1";

    const fs::path a = dir / "a.json", b = dir / "b.json";
    const int ra =
        shell(bin + " planewave-verify --seed 5 --out '" + a.string() + "'" + quiet);
    const int rb =
        shell(bin + " planewave-verify --seed 5 --out '" + b.string() + "'" + quiet);
    expect(bad, ra == 0 && rb == 0, "passing run should exit 0");
    expect(bad, slurp(a) == slurp(b) && !slurp(a).empty(),
           "same seed must reproduce the report byte for byte");

    const int rf = shell(bin + " planewave-verify --waves 10 --tol 1e-18 --out '" +
                         (dir / "f.json").string() + "'" + quiet);
    expect(bad, rf == 1, "failed verification should exit 1, got " + fmt(rf));
    const int ru = shell(bin + " planewave-verify --no-such-flag" + quiet);
    expect(bad, ru == 2, "usage error should exit 2, got " + fmt(ru));
    return bad;
  });

  std::printf("%d/%d criteria passed\n", gate.index - gate.failed, gate.index);
  return gate.failed == 0 ? 0 : 1;
}
