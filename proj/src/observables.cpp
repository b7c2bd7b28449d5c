#include "observables.hpp"

#include "oscillator.hpp"
#include "quadrature.hpp"
#include "spectral.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace wigner {

MomentReport second_moments(Rapidity eta) {
  const double e2 = std::exp(2.0 * eta.value);
  const double ch = std::cosh(2.0 * eta.value);
  MomentReport r;
  r.eta = eta.value;
  r.var_u = 0.5 * e2;
  r.var_v = 0.5 / e2;
  r.var_z = 0.5 * ch;  // (var_u + var_v)/2 + cross terms that vanish
  r.var_t = 0.5 * ch;
  r.var_qu = 0.5 / e2;
  r.var_qv = 0.5 * e2;
  r.var_qz = 0.5 * ch;
  r.var_q0 = 0.5 * ch;
  r.product_z_qz = r.var_z * r.var_qz;
  r.product_u_qu = r.var_u * r.var_qu;
  r.product_v_qv = r.var_v * r.var_qv;
  return r;
}

namespace {

struct PlaneMoments {
  double m_a = 0.0;  // second moment along the first light-cone axis
  double m_b = 0.0;
  double m_s = 0.0;  // along (a + b)/sqrt(2)
  double m_d = 0.0;  // along (a - b)/sqrt(2)
};

// Integrates x^2 f(x,y)^2 for the four quadratic monomials of interest in a
// frame where f is polynomial x Gaussian: axes (scale_a * x, scale_b * y).
template <class F>
PlaneMoments quadratic_moments(double scale_a, double scale_b, int nodes,
                               double tol, F&& f) {
  PlaneMoments prev{};
  bool have_prev = false;
  for (int count = nodes;; count += 8) {
    const HermiteRule rule = gauss_hermite(count);
    PlaneMoments m{};
    for (int i = 0; i < count; ++i) {
      const double a = scale_a * rule.nodes[i];
      const double wa = rule.modified_weights[i] * scale_a;
      for (int j = 0; j < count; ++j) {
        const double b = scale_b * rule.nodes[j];
        const double w = wa * rule.modified_weights[j] * scale_b;
        const double val = f(a, b);
        const double dens = w * val * val;
        const double s = (a + b) * (std::numbers::sqrt2 / 2.0);
        const double d = (a - b) * (std::numbers::sqrt2 / 2.0);
        m.m_a += dens * a * a;
        m.m_b += dens * b * b;
        m.m_s += dens * s * s;
        m.m_d += dens * d * d;
      }
    }
    const double diff =
        have_prev ? std::max({std::abs(m.m_a - prev.m_a), std::abs(m.m_b - prev.m_b),
                              std::abs(m.m_s - prev.m_s), std::abs(m.m_d - prev.m_d)})
                  : 0.0;
    const double scale = std::max({1.0, std::abs(m.m_a), std::abs(m.m_b)});
    if (have_prev && diff <= tol * scale) return m;
    if (count >= nodes + 4 * 8) return m;
    prev = m;
    have_prev = true;
  }
}

}  // namespace

MomentReport moments_quadrature(Rapidity eta, double tol) {
  require_quadrature_envelope(0, eta.value);
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");

  const OscillatorState ground(0, eta);
  const double su = std::exp(eta.value);
  const double sv = std::exp(-eta.value);

  // spacetime side: axes (u, v) = (e^eta x, e^{-eta} y)
  const PlaneMoments st =
      quadratic_moments(su, sv, 24, tol, [&](double u, double v) {
        const auto [z, t] = from_lightcone({u, v});
        return psi(ground, z, t);
      });

  // momentum side: phi is widest along qv, so (qu, qv) = (e^{-eta} x, e^eta y)
  const PlaneMoments mom =
      quadratic_moments(sv, su, 24, tol, [&](double qu, double qv) {
        const MomentumPoint q{(qv - qu) * (std::numbers::sqrt2 / 2.0),
                              (qv + qu) * (std::numbers::sqrt2 / 2.0)};
        return phi_ground(eta, q);
      });

  MomentReport r;
  r.eta = eta.value;
  r.var_u = st.m_a;
  r.var_v = st.m_b;
  r.var_z = st.m_s;  // z = (u + v)/sqrt(2)
  r.var_t = st.m_d;  // t = (u - v)/sqrt(2)
  r.var_qu = mom.m_a;
  r.var_qv = mom.m_b;
  r.var_qz = mom.m_d;  // qz = (qv - qu)/sqrt(2)
  r.var_q0 = mom.m_s;  // q0 = (qv + qu)/sqrt(2)
  r.product_z_qz = r.var_z * r.var_qz;
  r.product_u_qu = r.var_u * r.var_qu;
  r.product_v_qv = r.var_v * r.var_qv;
  return r;
}

double interaction_time_ratio(Rapidity eta) {
  if (eta.value < 0.0)
    throw std::domain_error("interaction_time_ratio expects eta >= 0");
  return std::exp(-2.0 * eta.value);
}

double longitudinal_density(Rapidity eta, DensityAxis axis, double x) {
  (void)axis;  // both marginals share one profile; the axis tags intent
  const double var = std::cosh(2.0 * eta.value);  // 2 * variance
  return std::exp(-x * x / var) / std::sqrt(std::numbers::pi * var);
}

}  // namespace wigner
