#include "oscillator.hpp"

#include "quadrature.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace wigner {

namespace {

constexpr double inv_sqrt2 = std::numbers::sqrt2 / 2.0;

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace

void require_quadrature_envelope(int n, double eta) {
  if (n < 0 || n > max_quadrature_n)
    throw envelope_error("quadrature envelope: n must be in [0, " +
                         std::to_string(max_quadrature_n) + "]");
  if (std::abs(eta) > max_quadrature_eta)
    throw envelope_error("quadrature envelope: |eta| must be <= " +
                         std::to_string(max_quadrature_eta));
}

LightConePoint to_lightcone(double z, double t) {
  return {(z + t) * inv_sqrt2, (z - t) * inv_sqrt2};
}

SpacetimePoint from_lightcone(const LightConePoint& p) {
  return {(p.u + p.v) * inv_sqrt2, (p.u - p.v) * inv_sqrt2};
}

LightConePoint boost_point(const LightConePoint& p, Rapidity eta) {
  return {std::exp(eta.value) * p.u, std::exp(-eta.value) * p.v};
}

double hermite(int n, double x) {
  if (n < 0) throw std::invalid_argument("hermite needs n >= 0");
  if (n == 0) return 1.0;
  double hm = 1.0;
  double h = 2.0 * x;
  for (int k = 1; k < n; ++k) {
    const double hn = 2.0 * x * h - 2.0 * k * hm;
    hm = h;
    h = hn;
  }
  return h;
}

OscillatorState::OscillatorState(int n_, Rapidity eta_) : n(n_), eta(eta_) {
  if (n_ < 0) throw std::invalid_argument("oscillator excitation must be >= 0");
}

double psi(const OscillatorState& s, double z, double t) {
  const auto [u, v] = to_lightcone(z, t);
  const double eu = std::exp(-s.eta.value);  // scales u
  const double ev = std::exp(s.eta.value);   // scales v
  const double a = eu * u;
  const double b = ev * v;
  const double zr = (a + b) * inv_sqrt2;  // rest-frame z

  if (s.n <= 30) {
    const double coeff =
        1.0 / std::sqrt(std::numbers::pi * factorial(s.n) * std::exp2(s.n));
    return coeff * hermite(s.n, zr) * std::exp(-0.5 * (a * a + b * b));
  }
  // a^2 + b^2 - zr^2 = (a - b)^2 / 2, so the Gaussian deficit beyond the
  // normalized Hermite function never goes positive and cannot overflow.
  const double d = a - b;
  return std::pow(std::numbers::pi, -0.25) * hermite_normalized(s.n, zr) *
         std::exp(-0.25 * d * d);
}

namespace {

// Common tensor Gauss-Hermite pass in the squeeze-adapted light-cone frame:
// u = e^{eta} x, v = e^{-eta} y has unit Jacobian and turns |psi|^2 into a
// polynomial times e^{-x^2-y^2}, so the rule converges immediately and the
// node-doubling check is just confirmation.
template <class F>
double adapted_plane_integral(double eta, int min_nodes, double tol, F&& f) {
  const double su = std::exp(eta);
  const double sv = std::exp(-eta);
  double prev = 0.0;
  bool have_prev = false;
  for (int nodes = min_nodes;; nodes += 8) {
    const HermiteRule rule = gauss_hermite(nodes);
    double sum = 0.0;
    for (int i = 0; i < nodes; ++i) {
      const double u = su * rule.nodes[i];
      const double wi = rule.modified_weights[i];
      double row = 0.0;
      for (int j = 0; j < nodes; ++j) {
        const double v = sv * rule.nodes[j];
        row += rule.modified_weights[j] * f(from_lightcone({u, v}));
      }
      sum += wi * row;
    }
    if (have_prev && std::abs(sum - prev) <= tol * std::max(1.0, std::abs(sum)))
      return sum;
    if (nodes >= min_nodes + 4 * 8) return sum;  // polynomial case: already exact
    prev = sum;
    have_prev = true;
  }
}

}  // namespace

double norm_quadrature(const OscillatorState& s, double tol) {
  require_quadrature_envelope(s.n, s.eta.value);
  const int start = std::max(24, 2 * s.n + 10);
  return adapted_plane_integral(s.eta.value, start, tol, [&](SpacetimePoint p) {
    const double val = psi(s, p.z, p.t);
    return val * val;
  });
}

double overlap_quadrature(int m, int n, Rapidity eta, double tol) {
  require_quadrature_envelope(m, eta.value);
  require_quadrature_envelope(n, eta.value);
  const OscillatorState sm(m, eta);
  const OscillatorState sn(n, eta);
  const int start = std::max(24, m + n + 10);
  return adapted_plane_integral(eta.value, start, tol, [&](SpacetimePoint p) {
    return psi(sm, p.z, p.t) * psi(sn, p.z, p.t);
  });
}

double fkr_residual_lambda(int n, double h, double lambda) {
  if (!(h > 0.0) || h > 0.5)
    throw std::invalid_argument("fkr residual needs 0 < h <= 0.5");
  require_quadrature_envelope(n, 0.0);
  const OscillatorState s(n, Rapidity(0.0));
  const double extent = 3.0;
  const auto count = static_cast<long>(std::llround(2.0 * extent / h));
  double worst = 0.0;
  for (long i = 1; i < count; ++i) {
    const double z = -extent + i * h;
    for (long j = 1; j < count; ++j) {
      const double t = -extent + j * h;
      const double c = psi(s, z, t);
      const double lap = (psi(s, z + h, t) + psi(s, z - h, t) +
                          psi(s, z, t + h) + psi(s, z, t - h) - 4.0 * c) /
                         (h * h);
      const double r = -0.5 * (lap - (z * z + t * t) * c) - lambda * c;
      worst = std::max(worst, std::abs(r));
    }
  }
  return worst;
}

double fkr_residual(int n, double h) {
  return fkr_residual_lambda(n, h, n + 1.0);
}

}  // namespace wigner
