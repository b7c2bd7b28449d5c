// Acceptance gate: one line per criterion, [PASS]/[FAIL], nonzero exit on
// any failure. Criteria with a runtime budget time themselves and fail when
// they overrun.

#include "sampled_field.hpp"
#include "spectral.hpp"
#include "verify.hpp"

#include "run_cli.hpp"

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <limits>
#include <string>
#include <vector>

using namespace wigner;

namespace {

using Clock = std::chrono::steady_clock;

double elapsed(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct SetOutcome {
  bool ok = true;
  std::string binding;  // the check closest to (or past) its tolerance
};

SetOutcome run_set(const std::vector<std::string>& names) {
  SetOutcome out;
  double worst_ratio = -1.0;
  for (const auto& name : names) {
    try {
      const VerificationReport r = run_check(name);
      if (!r.passed) out.ok = false;
      const double ratio =
          r.tolerance > 0.0
              ? r.measured_error / r.tolerance
              : (r.measured_error > 0.0
                     ? std::numeric_limits<double>::infinity()
                     : 0.0);
      if (ratio > worst_ratio) {
        worst_ratio = ratio;
        char buf[192];
        std::snprintf(buf, sizeof buf, "%s measured %.3g, tolerance %.3g",
                      r.check_name.c_str(), r.measured_error, r.tolerance);
        out.binding = buf;
      }
    } catch (const std::exception& e) {
      out.ok = false;
      out.binding = name + " raised: " + e.what();
      return out;
    }
  }
  return out;
}

std::string with_budget(const SetOutcome& s, double dt, double budget) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%s; %.3f s of %.0f s budget",
                s.binding.c_str(), dt, budget);
  return buf;
}

}  // namespace

int main() {
  int failures = 0;
  const auto report = [&failures](int num, const char* label, bool ok,
                                  const std::string& detail) {
    std::printf("[%s] criterion %2d: %s (%s)\n", ok ? "PASS" : "FAIL", num,
                label, detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
  };

  {
    const auto t0 = Clock::now();
    const SetOutcome s = run_set(
        {"rotation_commutator_table", "translation_like_commutator_table",
         "plane_motion_isomorphism", "boost_rotation_composition",
         "nilpotent_cubes", "generator_entry_values"});
    const double dt = elapsed(t0);
    report(1, "generator algebra closes exactly in integer arithmetic",
           s.ok && dt < 1.0, with_budget(s, dt, 1.0));
  }

  {
    const auto t0 = Clock::now();
    const SetOutcome s =
        run_set({"contraction_slope_j2", "contraction_scale_j2"});
    const double dt = elapsed(t0);
    report(2, "boosted rotation contracts onto the translation generator",
           s.ok && dt < 1.0, with_budget(s, dt, 1.0));
  }

  {
    const SetOutcome s =
        run_set({"lightlike_invariance", "gauge_shift_transverse"});
    report(3, "light-like momentum fixed and polarization shifted along it",
           s.ok, s.binding);
  }

  {
    const auto t0 = Clock::now();
    const SetOutcome s = run_set({"normalization_grid"});
    const double dt = elapsed(t0);
    report(4, "unit norm across the mode and rapidity grid",
           s.ok && dt < 30.0, with_budget(s, dt, 30.0));
  }

  {
    const SetOutcome s = run_set({"eigenvalue_residual_order"});
    report(5, "difference-operator residual shrinks at second order", s.ok,
           s.binding);
  }

  {
    double dev = 0.0;
    double imag = 0.0;
    bool ok = true;
    std::string detail;
    try {
      for (double eta : {0.0, 1.0, 2.0}) {
        const Rapidity r(eta);
        const double range = default_grid_range(r);
        const GridAxis axis{-range, range, 41};
        const auto grid = transform_grid(0, r, axis, axis, 1e-9);
        for (int i = 0; i < 41; ++i)
          for (int j = 0; j < 41; ++j) {
            const auto value = grid[static_cast<std::size_t>(i) * 41 + j];
            const double closed = phi_ground(r, {axis.at(i), axis.at(j)});
            dev = std::max(dev, std::abs(value.real() - closed));
            imag = std::max(imag, std::abs(value.imag()));
          }
      }
      ok = dev <= 1e-6 && imag <= 1e-10;
      char buf[192];
      std::snprintf(buf, sizeof buf,
                    "41x41 grids, eta in {0,1,2}: deviation %.3g (tol 1e-6), "
                    "imaginary %.3g (tol 1e-10)",
                    dev, imag);
      detail = buf;
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("raised: ") + e.what();
    }
    report(6, "numeric transform matches the closed momentum form", ok, detail);
  }

  {
    const SetOutcome s = run_set({"uncertainty_product_z_analytic",
                                  "uncertainty_product_z_quadrature",
                                  "uncertainty_product_z_frozen"});
    report(7, "longitudinal uncertainty product grows as cosh^2(2 eta)/4", s.ok,
           s.binding);
  }

  {
    const SetOutcome s = run_set(
        {"conjugate_product_invariance", "conjugate_product_quadrature"});
    report(8, "conjugate light-cone uncertainty products stay at 1/4", s.ok,
           s.binding);
  }

  {
    const SetOutcome s =
        run_set({"time_dilation_fermilab", "time_dilation_order"});
    report(9, "overlap time ratio matches the beam-energy estimate", s.ok,
           s.binding);
  }

  {
    const SetOutcome s = run_set({"dispersion_ultrarelativistic_window",
                                  "dispersion_nonrelativistic_window"});
    report(10, "dispersion limits agree inside their windows", s.ok, s.binding);
  }

  {
    const std::vector<std::string> commands = {
        "verify algebra",
        "moments --eta 0,1,2",
        "wavefunction --n 1 --eta 1 --grid 21x21",
        "dispersion 0.938 2",
    };
    bool ok = true;
    std::string detail = "4 commands, two runs each, byte-identical output";
    try {
      for (const auto& cmd : commands) {
        const CliResult a = run_cli(cmd, "WIGNERLAB_TOL=1e-9 ");
        const CliResult b = run_cli(cmd, "WIGNERLAB_TOL=1e-9 ");
        if (a.code != 0 || b.code != 0) {
          ok = false;
          detail = "'" + cmd + "' exited nonzero";
          break;
        }
        if (a.out != b.out) {
          ok = false;
          detail = "'" + cmd + "' produced differing bytes";
          break;
        }
      }
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("raised: ") + e.what();
    }
    report(11, "repeated runs are byte-identical", ok, detail);
  }

  if (failures > 0) std::printf("%d criterion(s) failed\n", failures);
  return failures;
}
