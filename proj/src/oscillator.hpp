#pragma once

#include "minkowski.hpp"

#include <stdexcept>

namespace wigner {

// Quadrature-backed operations accept only this window; closed-form
// evaluation itself has no such limit.
inline constexpr int max_quadrature_n = 12;
inline constexpr double max_quadrature_eta = 4.0;

struct envelope_error : std::domain_error {
  using std::domain_error::domain_error;
};

void require_quadrature_envelope(int n, double eta);

struct LightConePoint {
  double u;
  double v;
};

struct SpacetimePoint {
  double z;
  double t;
};

// u = (z + t)/sqrt(2), v = (z - t)/sqrt(2)
LightConePoint to_lightcone(double z, double t);
SpacetimePoint from_lightcone(const LightConePoint& p);

// A z-boost scales the light-cone axes reciprocally: u -> e^eta u, v -> e^{-eta} v.
LightConePoint boost_point(const LightConePoint& p, Rapidity eta);

// Physicists' Hermite polynomial H_n by the raw recurrence. Overflows for
// large n and |x|; the wave function below switches representation instead.
double hermite(int n, double x);

// One transverse-integrated mode of the covariant oscillator: longitudinal
// excitation n in the hadron rest frame, boosted to rapidity eta.
struct OscillatorState {
  int n;
  Rapidity eta;

  OscillatorState(int n_, Rapidity eta_);

  // 2-D (z, t) eigenvalue of -(1/2)(d^2/dz^2 + d^2/dt^2 - z^2 - t^2)
  double lambda() const { return n + 1.0; }
};

// Boosted wave function at a spacetime point. For n <= 30 this is the
// textbook Hermite-polynomial form; above that it switches to orthonormal
// Hermite functions evaluated in the squeezed frame so nothing overflows.
double psi(const OscillatorState& s, double z, double t);

// L^2 norm over the (z, t) plane by Gauss-Hermite tensor quadrature in the
// squeeze-adapted frame. Converged to tol via node-count doubling.
double norm_quadrature(const OscillatorState& s, double tol = 1e-9);

// Overlap integral of two modes at a common rapidity.
double overlap_quadrature(int m, int n, Rapidity eta, double tol = 1e-9);

// Sup over a centered grid (spacing h) of the eigenvalue-equation residual
// with a second-order finite-difference Laplacian, rest frame only.
double fkr_residual(int n, double h);
double fkr_residual_lambda(int n, double h, double lambda);

}  // namespace wigner
