#include "wignerlab/wignerlab.h"

#include "little_group.hpp"
#include "minkowski.hpp"
#include "observables.hpp"
#include "oscillator.hpp"
#include "sampled_field.hpp"
#include "spectral.hpp"
#include "verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

struct wl_field {
  wigner::SampledField field;
};

struct wl_report {
  std::vector<wigner::VerificationReport> entries;
};

namespace {

template <typename F>
wl_status guarded(F&& f) noexcept {
  try {
    f();
    return WL_OK;
  } catch (const wigner::envelope_error&) {
    return WL_ERR_UNSUPPORTED;
  } catch (const std::domain_error&) {
    return WL_ERR_DOMAIN;
  } catch (const std::invalid_argument&) {
    return WL_ERR_INVALID;
  } catch (const std::length_error&) {
    return WL_ERR_UNSUPPORTED;
  } catch (const std::bad_alloc&) {
    return WL_ERR_INTERNAL;
  } catch (...) {
    return WL_ERR_INTERNAL;
  }
}

constexpr wigner::Generator generator_table[8] = {
    wigner::Generator::J1, wigner::Generator::J2, wigner::Generator::J3,
    wigner::Generator::K1, wigner::Generator::K2, wigner::Generator::K3,
    wigner::Generator::N1, wigner::Generator::N2};

std::optional<wigner::Generator> to_generator(wl_generator g) {
  const int v = static_cast<int>(g);
  if (v < 0 || v > 7) return std::nullopt;
  return generator_table[v];
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void copy_mat(const wigner::Mat4& m, double out[16]) {
  std::copy(m.a.begin(), m.a.end(), out);
}

wigner::Mat4 mat_from(const double m[16]) {
  wigner::Mat4 out;
  std::copy(m, m + 16, out.a.begin());
  return out;
}

void copy_cmat(const wigner::CMat4& m, double re[16], double im[16]) {
  for (int k = 0; k < 16; ++k) {
    re[k] = m.e[static_cast<std::size_t>(k)].real();
    im[k] = m.e[static_cast<std::size_t>(k)].imag();
  }
}

void copy_moments(const wigner::MomentReport& r, wl_moment_report* out) {
  out->eta = r.eta;
  out->var_z = r.var_z;
  out->var_t = r.var_t;
  out->var_u = r.var_u;
  out->var_v = r.var_v;
  out->var_qz = r.var_qz;
  out->var_q0 = r.var_q0;
  out->var_qu = r.var_qu;
  out->var_qv = r.var_qv;
  out->product_z_qz = r.product_z_qz;
  out->product_u_qu = r.product_u_qu;
  out->product_v_qv = r.product_v_qv;
}

wl_status make_axis(double lo, double hi, int count, wigner::GridAxis* out) {
  if (count < 2 || !(lo < hi)) return WL_ERR_INVALID;
  *out = wigner::GridAxis{lo, hi, count};
  return WL_OK;
}

}  // namespace

extern "C" {

const char* wl_status_name(wl_status s) {
  switch (s) {
    case WL_OK: return "ok";
    case WL_ERR_DOMAIN: return "domain";
    case WL_ERR_UNSUPPORTED: return "unsupported";
    case WL_ERR_INVALID: return "invalid";
    case WL_ERR_IO: return "io";
    case WL_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* wl_version(void) { return "0.1.0"; }

/* ----------------------------------------------------------- kinematics */

double wl_norm_squared(const double p[4]) {
  return wigner::norm_squared({p[0], p[1], p[2], p[3]});
}

wl_status wl_boost_z(double eta, double m[16]) {
  if (m == nullptr) return WL_ERR_INVALID;
  return guarded([&] { copy_mat(wigner::boost_z(wigner::Rapidity(eta)), m); });
}

wl_status wl_apply_matrix(const double m[16], const double p[4], double out[4]) {
  if (m == nullptr || p == nullptr || out == nullptr) return WL_ERR_INVALID;
  const wigner::FourVector q = mat_from(m) * wigner::FourVector{p[0], p[1], p[2], p[3]};
  out[0] = q.x;
  out[1] = q.y;
  out[2] = q.z;
  out[3] = q.t;
  return WL_OK;
}

wl_status wl_dispersion_energy(double m, double p, double* out) {
  if (out == nullptr) return WL_ERR_INVALID;
  return guarded([&] { *out = wigner::dispersion_energy(m, p); });
}

wl_status wl_dispersion_limits(double m, double p, double* exact,
                               double* nonrelativistic,
                               double* ultrarelativistic) {
  if (exact == nullptr || nonrelativistic == nullptr ||
      ultrarelativistic == nullptr)
    return WL_ERR_INVALID;
  return guarded([&] {
    const wigner::DispersionLimits d = wigner::dispersion_limits(m, p);
    *exact = d.exact;
    *nonrelativistic = d.nonrelativistic;
    *ultrarelativistic = d.ultrarelativistic;
  });
}

wl_status wl_rapidity_from_energy(double m, double energy, double* eta) {
  if (eta == nullptr) return WL_ERR_INVALID;
  return guarded([&] { *eta = wigner::rapidity_from_energy(m, energy).value; });
}

/* --------------------------------------------------------- little group */

const char* wl_generator_name(wl_generator g) {
  const auto gen = to_generator(g);
  return gen ? wigner::generator_name(*gen) : nullptr;
}

wl_status wl_generator_from_name(const char* name, wl_generator* out) {
  if (name == nullptr || out == nullptr) return WL_ERR_INVALID;
  const auto gen = wigner::generator_from_name(name);
  if (!gen) return WL_ERR_INVALID;
  for (int v = 0; v < 8; ++v)
    if (generator_table[v] == *gen) {
      *out = static_cast<wl_generator>(v);
      return WL_OK;
    }
  return WL_ERR_INTERNAL;
}

wl_status wl_generator_entries(wl_generator g, double re[16], double im[16]) {
  if (re == nullptr || im == nullptr) return WL_ERR_INVALID;
  const auto gen = to_generator(g);
  if (!gen) return WL_ERR_INVALID;
  const wigner::GMat4& m = wigner::generator(*gen);
  for (int k = 0; k < 16; ++k) {
    re[k] = static_cast<double>(m.e[static_cast<std::size_t>(k)].re);
    im[k] = static_cast<double>(m.e[static_cast<std::size_t>(k)].im);
  }
  return WL_OK;
}

wl_status wl_exp_generator(wl_generator g, double xi, double m[16]) {
  if (m == nullptr || !std::isfinite(xi)) return WL_ERR_INVALID;
  const auto gen = to_generator(g);
  if (!gen) return WL_ERR_INVALID;
  return guarded([&] { copy_mat(wigner::exp_generator(*gen, xi), m); });
}

wl_status wl_boost_conjugate(wl_generator g, double eta, int order_b_g_binv,
                             double re[16], double im[16]) {
  if (re == nullptr || im == nullptr) return WL_ERR_INVALID;
  const auto gen = to_generator(g);
  if (!gen) return WL_ERR_INVALID;
  const auto order = order_b_g_binv != 0 ? wigner::ConjugationOrder::BGBInv
                                         : wigner::ConjugationOrder::BInvGB;
  return guarded([&] {
    copy_cmat(wigner::boost_conjugate(*gen, wigner::Rapidity(eta), order), re, im);
  });
}

wl_status wl_contraction_fit_run(wl_generator j, double eta,
                                 int order_b_g_binv, wl_contraction_fit* out) {
  if (out == nullptr) return WL_ERR_INVALID;
  const auto gen = to_generator(j);
  if (!gen) return WL_ERR_INVALID;
  const auto order = order_b_g_binv != 0 ? wigner::ConjugationOrder::BGBInv
                                         : wigner::ConjugationOrder::BInvGB;
  return guarded([&] {
    const wigner::ContractionFit fit =
        wigner::contraction_fit(*gen, wigner::Rapidity(eta), order);
    out->eta = fit.eta;
    out->fitted_scale = fit.fitted_scale;
    out->residual_norm = fit.residual_norm;
  });
}

wl_status wl_leaves_invariant(const double m[16], const double p[4], double tol,
                              int* out) {
  if (m == nullptr || p == nullptr || out == nullptr || !(tol >= 0))
    return WL_ERR_INVALID;
  return guarded([&] {
    *out = wigner::leaves_invariant(mat_from(m), {p[0], p[1], p[2], p[3]}, tol)
               ? 1
               : 0;
  });
}

wl_status wl_gauge_shift_residual(const double eps[4], const double p[4],
                                  double xi, wl_generator which, double* out) {
  if (eps == nullptr || p == nullptr || out == nullptr || !std::isfinite(xi))
    return WL_ERR_INVALID;
  const auto gen = to_generator(which);
  if (!gen) return WL_ERR_INVALID;
  return guarded([&] {
    *out = wigner::gauge_shift_residual({eps[0], eps[1], eps[2], eps[3]},
                                        {p[0], p[1], p[2], p[3]}, xi, *gen);
  });
}

/* ----------------------------------------------------------- oscillator */

wl_status wl_to_lightcone(double z, double t, double* u, double* v) {
  if (u == nullptr || v == nullptr) return WL_ERR_INVALID;
  const wigner::LightConePoint p = wigner::to_lightcone(z, t);
  *u = p.u;
  *v = p.v;
  return WL_OK;
}

wl_status wl_from_lightcone(double u, double v, double* z, double* t) {
  if (z == nullptr || t == nullptr) return WL_ERR_INVALID;
  const wigner::SpacetimePoint p = wigner::from_lightcone({u, v});
  *z = p.z;
  *t = p.t;
  return WL_OK;
}

wl_status wl_boost_lightcone(double u, double v, double eta, double* u_out,
                             double* v_out) {
  if (u_out == nullptr || v_out == nullptr) return WL_ERR_INVALID;
  return guarded([&] {
    const wigner::LightConePoint p =
        wigner::boost_point({u, v}, wigner::Rapidity(eta));
    *u_out = p.u;
    *v_out = p.v;
  });
}

wl_status wl_hermite(int n, double x, double* out) {
  if (out == nullptr || n < 0) return WL_ERR_INVALID;
  *out = wigner::hermite(n, x);
  return WL_OK;
}

wl_status wl_psi(int n, double eta, double z, double t, double* out) {
  if (out == nullptr) return WL_ERR_INVALID;
  return guarded([&] {
    *out = wigner::psi(wigner::OscillatorState(n, wigner::Rapidity(eta)), z, t);
  });
}

wl_status wl_psi_norm(int n, double eta, double tol, double* out) {
  if (out == nullptr || !(tol > 0)) return WL_ERR_INVALID;
  return guarded([&] {
    *out = wigner::norm_quadrature(
        wigner::OscillatorState(n, wigner::Rapidity(eta)), tol);
  });
}

wl_status wl_psi_overlap(int m, int n, double eta, double tol, double* out) {
  if (out == nullptr || !(tol > 0)) return WL_ERR_INVALID;
  return guarded([&] {
    *out = wigner::overlap_quadrature(m, n, wigner::Rapidity(eta), tol);
  });
}

wl_status wl_fkr_residual(int n, double h, double* out) {
  if (out == nullptr) return WL_ERR_INVALID;
  return guarded([&] { *out = wigner::fkr_residual(n, h); });
}

wl_status wl_fkr_residual_lambda(int n, double h, double lambda, double* out) {
  if (out == nullptr) return WL_ERR_INVALID;
  return guarded([&] { *out = wigner::fkr_residual_lambda(n, h, lambda); });
}

/* ------------------------------------------------------------- spectral */

double wl_kernel_phase(double qz, double q0, double z, double t) {
  return wigner::kernel_phase({qz, q0}, z, t);
}

wl_status wl_lightcone_momentum(double qz, double q0, double* qu, double* qv) {
  if (qu == nullptr || qv == nullptr) return WL_ERR_INVALID;
  const wigner::MomentumLightCone m = wigner::lightcone_momentum({qz, q0});
  *qu = m.qu;
  *qv = m.qv;
  return WL_OK;
}

wl_status wl_phi_ground(double eta, double qz, double q0, double* out) {
  if (out == nullptr) return WL_ERR_INVALID;
  return guarded(
      [&] { *out = wigner::phi_ground(wigner::Rapidity(eta), {qz, q0}); });
}

wl_status wl_fourier_transform(int n, double eta, double qz, double q0,
                               double tol, double* re, double* im) {
  if (re == nullptr || im == nullptr || !(tol > 0)) return WL_ERR_INVALID;
  return guarded([&] {
    const std::complex<double> val =
        wigner::fourier_quadrature(n, wigner::Rapidity(eta), {qz, q0}, tol);
    *re = val.real();
    *im = val.imag();
  });
}

/* ---------------------------------------------------------- observables */

wl_status wl_second_moments(double eta, wl_moment_report* out) {
  if (out == nullptr) return WL_ERR_INVALID;
  return guarded(
      [&] { copy_moments(wigner::second_moments(wigner::Rapidity(eta)), out); });
}

wl_status wl_moments_quadrature(double eta, double tol, wl_moment_report* out) {
  if (out == nullptr || !(tol > 0)) return WL_ERR_INVALID;
  return guarded([&] {
    copy_moments(wigner::moments_quadrature(wigner::Rapidity(eta), tol), out);
  });
}

wl_status wl_interaction_time_ratio(double eta, double* out) {
  if (out == nullptr) return WL_ERR_INVALID;
  return guarded(
      [&] { *out = wigner::interaction_time_ratio(wigner::Rapidity(eta)); });
}

wl_status wl_longitudinal_density(double eta, int momentum_axis, double x,
                                  double* out) {
  if (out == nullptr) return WL_ERR_INVALID;
  const auto axis =
      momentum_axis != 0 ? wigner::DensityAxis::Qz : wigner::DensityAxis::Z;
  return guarded([&] {
    *out = wigner::longitudinal_density(wigner::Rapidity(eta), axis, x);
  });
}

/* --------------------------------------------------------------- fields */

wl_status wl_field_sample_psi(int n, double eta, double z_min, double z_max,
                              int z_count, double t_min, double t_max,
                              int t_count, wl_field** out) {
  if (out == nullptr) return WL_ERR_INVALID;
  wigner::GridAxis za;
  wigner::GridAxis ta;
  if (make_axis(z_min, z_max, z_count, &za) != WL_OK ||
      make_axis(t_min, t_max, t_count, &ta) != WL_OK)
    return WL_ERR_INVALID;
  return guarded([&] {
    *out = new wl_field{
        wigner::sample_psi(n, wigner::Rapidity(eta), za, ta)};
  });
}

wl_status wl_field_sample_phi(double eta, double qz_min, double qz_max,
                              int qz_count, double q0_min, double q0_max,
                              int q0_count, wl_field** out) {
  if (out == nullptr) return WL_ERR_INVALID;
  wigner::GridAxis qza;
  wigner::GridAxis q0a;
  if (make_axis(qz_min, qz_max, qz_count, &qza) != WL_OK ||
      make_axis(q0_min, q0_max, q0_count, &q0a) != WL_OK)
    return WL_ERR_INVALID;
  return guarded([&] {
    *out = new wl_field{wigner::sample_phi(wigner::Rapidity(eta), qza, q0a)};
  });
}

wl_status wl_default_grid_range(double eta, double* out) {
  if (out == nullptr) return WL_ERR_INVALID;
  return guarded(
      [&] { *out = wigner::default_grid_range(wigner::Rapidity(eta)); });
}

wl_status wl_field_shape(const wl_field* f, int* rows, int* cols) {
  if (f == nullptr || rows == nullptr || cols == nullptr) return WL_ERR_INVALID;
  *rows = f->field.axis0.count;
  *cols = f->field.axis1.count;
  return WL_OK;
}

wl_status wl_field_value(const wl_field* f, int i, int j, double* out) {
  if (f == nullptr || out == nullptr) return WL_ERR_INVALID;
  if (i < 0 || i >= f->field.axis0.count || j < 0 || j >= f->field.axis1.count)
    return WL_ERR_INVALID;
  *out = f->field.value(i, j);
  return WL_OK;
}

wl_status wl_field_to_csv(const wl_field* f, char** out) {
  if (f == nullptr || out == nullptr) return WL_ERR_INVALID;
  return guarded([&] {
    char* s = dup_string(f->field.to_csv());
    if (s == nullptr) throw std::bad_alloc();
    *out = s;
  });
}

void wl_field_free(wl_field* f) { delete f; }

/* ---------------------------------------------------------- verification */

wl_status wl_verify_run(const char* suite, double quad_tol, wl_report** out) {
  if (suite == nullptr || out == nullptr || !(quad_tol > 0))
    return WL_ERR_INVALID;
  const auto parsed = wigner::suite_from_name(suite);
  if (!parsed) return WL_ERR_INVALID;
  return guarded(
      [&] { *out = new wl_report{wigner::run_suite(*parsed, quad_tol)}; });
}

int wl_report_count(const wl_report* r) {
  return r == nullptr ? 0 : static_cast<int>(r->entries.size());
}

int wl_report_all_passed(const wl_report* r) {
  if (r == nullptr) return 0;
  for (const auto& e : r->entries)
    if (!e.passed) return 0;
  return 1;
}

const char* wl_report_entry_name(const wl_report* r, int i) {
  if (r == nullptr || i < 0 || i >= wl_report_count(r)) return nullptr;
  return r->entries[static_cast<std::size_t>(i)].check_name.c_str();
}

int wl_report_entry_passed(const wl_report* r, int i) {
  if (r == nullptr || i < 0 || i >= wl_report_count(r)) return -1;
  return r->entries[static_cast<std::size_t>(i)].passed ? 1 : 0;
}

wl_status wl_report_entry_json(const wl_report* r, int i, char** out) {
  if (r == nullptr || out == nullptr || i < 0 || i >= wl_report_count(r))
    return WL_ERR_INVALID;
  return guarded([&] {
    char* s =
        dup_string(wigner::to_json(r->entries[static_cast<std::size_t>(i)]).dump());
    if (s == nullptr) throw std::bad_alloc();
    *out = s;
  });
}

void wl_report_free(wl_report* r) { delete r; }

void wl_string_free(char* s) { std::free(s); }

}  // extern "C"
