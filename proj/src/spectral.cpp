#include "spectral.hpp"

#include "oscillator.hpp"
#include "quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace wigner {

namespace {

constexpr double inv_sqrt2 = std::numbers::sqrt2 / 2.0;
constexpr double two_pi = 2.0 * std::numbers::pi;

// Amplitude Gaussian scales of the boosted mode along u and v, plus the
// classically allowed widening of the Hermite factor.
double support_u(int n, double eta) {
  return (9.0 + std::sqrt(2.0 * n + 1.0)) * std::exp(eta);
}
double support_v(int n, double eta) {
  return (9.0 + std::sqrt(2.0 * n + 1.0)) * std::exp(-eta);
}

}  // namespace

MomentumLightCone lightcone_momentum(const MomentumPoint& q) {
  return {(q.q0 - q.qz) * inv_sqrt2, (q.q0 + q.qz) * inv_sqrt2};
}

double kernel_phase(const MomentumPoint& q, double z, double t) {
  return q.qz * z - q.q0 * t;
}

double phi_ground(Rapidity eta, const MomentumPoint& q) {
  const auto [qu, qv] = lightcone_momentum(q);
  const double e2 = std::exp(2.0 * eta.value);
  // reciprocal of the spacetime squeeze: e^{+2 eta} multiplies qu^2
  return (1.0 / std::sqrt(std::numbers::pi)) *
         std::exp(-0.5 * (e2 * qu * qu + qv * qv / e2));
}

std::complex<double> fourier_quadrature(int n, Rapidity eta,
                                        const MomentumPoint& q, double tol) {
  require_quadrature_envelope(n, eta.value);
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");

  const OscillatorState s(n, eta);
  const auto [qu, qv] = lightcone_momentum(q);

  std::complex<double> prev{};
  bool have_prev = false;
  for (int refine = 0; refine <= 3; ++refine) {
    const PanelAxis ua = composite_axis(support_u(n, eta.value),
                                        std::exp(eta.value), std::abs(qu), refine);
    const PanelAxis va = composite_axis(support_v(n, eta.value),
                                        std::exp(-eta.value), std::abs(qv), refine);
    std::complex<double> sum{};
    for (std::size_t i = 0; i < ua.nodes.size(); ++i) {
      const double u = ua.nodes[i];
      std::complex<double> row{};
      for (std::size_t j = 0; j < va.nodes.size(); ++j) {
        const auto [z, t] = from_lightcone({u, va.nodes[j]});
        row += va.weights[j] * psi(s, z, t) *
               std::polar(1.0, -kernel_phase(q, z, t));
      }
      sum += ua.weights[i] * row;
    }
    sum /= two_pi;
    if (have_prev &&
        std::abs(sum - prev) <= tol * std::max(1.0, std::abs(sum)))
      return sum;
    prev = sum;
    have_prev = true;
  }
  return prev;
}

namespace {

struct GridTransform {
  std::vector<std::complex<double>> values;
};

std::vector<std::complex<double>> transform_grid_once(int n, Rapidity eta,
                                                      const GridAxis& qza,
                                                      const GridAxis& q0a,
                                                      int refine) {
  const OscillatorState s(n, eta);
  const double step = qza.step();

  // Largest phase frequencies along u and v over the whole grid.
  double amax = 0.0;
  double bmax = 0.0;
  for (double zq : {qza.min, qza.max})
    for (double tq : {q0a.min, q0a.max}) {
      amax = std::max(amax, std::abs(zq - tq) * inv_sqrt2);
      bmax = std::max(bmax, std::abs(zq + tq) * inv_sqrt2);
    }

  const PanelAxis ua =
      composite_axis(support_u(n, eta.value), std::exp(eta.value), amax, refine);
  const PanelAxis va =
      composite_axis(support_v(n, eta.value), std::exp(-eta.value), bmax, refine);
  const std::size_t nu = ua.nodes.size();
  const std::size_t nv = va.nodes.size();

  // qz_i - q0_j and qz_i + q0_j each take only count0+count1-1 values on a
  // shared-step grid, so the kernel collapses onto two small phase tables.
  const int ne = qza.count + q0a.count - 1;
  std::vector<double> a_of_d(ne);
  std::vector<double> b_of_e(ne);
  for (int d = 0; d < ne; ++d)
    a_of_d[d] =
        ((qza.min - q0a.min) + (d - (q0a.count - 1)) * step) * inv_sqrt2;
  for (int e = 0; e < ne; ++e)
    b_of_e[e] = ((qza.min + q0a.min) + e * step) * inv_sqrt2;

  std::vector<std::complex<double>> ephase_v(static_cast<std::size_t>(ne) * nv);
  for (int e = 0; e < ne; ++e)
    for (std::size_t l = 0; l < nv; ++l)
      ephase_v[e * nv + l] = std::polar(va.weights[l], -b_of_e[e] * va.nodes[l]);

  // T[k][e] = sum_l w_l psi(u_k, v_l) exp(-i b_e v_l)
  std::vector<std::complex<double>> t_table(nu * static_cast<std::size_t>(ne));
  std::vector<double> frow(nv);
  for (std::size_t k = 0; k < nu; ++k) {
    for (std::size_t l = 0; l < nv; ++l) {
      const auto [z, t] = from_lightcone({ua.nodes[k], va.nodes[l]});
      frow[l] = psi(s, z, t);
    }
    for (int e = 0; e < ne; ++e) {
      std::complex<double> acc{};
      const std::complex<double>* ph = &ephase_v[e * nv];
      for (std::size_t l = 0; l < nv; ++l) acc += frow[l] * ph[l];
      t_table[k * ne + e] = acc;
    }
  }

  std::vector<std::complex<double>> out(
      static_cast<std::size_t>(qza.count) * q0a.count);
  std::vector<std::complex<double>> uphase(nu);
  for (int d = 0; d < ne; ++d) {
    for (std::size_t k = 0; k < nu; ++k)
      uphase[k] = std::polar(ua.weights[k], -a_of_d[d] * ua.nodes[k]);
    // i - j = d - (count1 - 1)
    const int diff = d - (q0a.count - 1);
    for (int j = std::max(0, -diff);
         j < q0a.count && diff + j < qza.count; ++j) {
      const int i = diff + j;
      std::complex<double> acc{};
      const std::complex<double>* tk = t_table.data();
      const int e = i + j;
      for (std::size_t k = 0; k < nu; ++k) acc += uphase[k] * tk[k * ne + e];
      out[static_cast<std::size_t>(i) * q0a.count + j] = acc / two_pi;
    }
  }
  return out;
}

}  // namespace

std::vector<std::complex<double>> transform_grid(int n, Rapidity eta,
                                                 const GridAxis& qza,
                                                 const GridAxis& q0a,
                                                 double tol) {
  require_quadrature_envelope(n, eta.value);
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  if (qza.count < 2 || q0a.count < 2)
    throw std::invalid_argument("transform_grid needs count >= 2 per axis");
  const double s0 = qza.step();
  const double s1 = q0a.step();
  if (std::abs(s0 - s1) > 1e-12 * std::max(std::abs(s0), std::abs(s1)))
    throw std::invalid_argument("transform_grid needs a shared grid step");

  auto coarse = transform_grid_once(n, eta, qza, q0a, 0);
  auto fine = transform_grid_once(n, eta, qza, q0a, 1);
  double dev = 0.0;
  for (std::size_t k = 0; k < coarse.size(); ++k)
    dev = std::max(dev, std::abs(fine[k] - coarse[k]));
  if (dev > tol)
    throw std::runtime_error("transform_grid failed to converge to tolerance");
  return fine;
}

}  // namespace wigner
