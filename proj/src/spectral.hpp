#pragma once

#include "minkowski.hpp"
#include "sampled_field.hpp"

#include <complex>
#include <vector>

namespace wigner {

struct MomentumPoint {
  double qz;
  double q0;
};

struct MomentumLightCone {
  double qu;  // conjugate to u: (q0 - qz)/sqrt(2)
  double qv;  // conjugate to v: (q0 + qz)/sqrt(2)
};

MomentumLightCone lightcone_momentum(const MomentumPoint& q);

// Phase of the plane-wave kernel, qz z - q0 t, written on light-cone
// variables. Algebraically equal to -qu u + qv v.
double kernel_phase(const MomentumPoint& q, double z, double t);

// Ground-state momentum-energy amplitude: the transform of the boosted
// Gaussian. Squeezing acts reciprocally, wide in qu where psi is narrow in u.
double phi_ground(Rapidity eta, const MomentumPoint& q);

// Transform of the n-th boosted mode at one momentum point, by composite
// Gauss-Legendre panels over the light-cone plane with panel widths tied to
// the Gaussian envelope and the local oscillation frequency. Refined until
// two dyadic levels agree to tol.
std::complex<double> fourier_quadrature(int n, Rapidity eta,
                                        const MomentumPoint& q,
                                        double tol = 1e-9);

// Same transform on a full momentum grid. Both axes must share one step so
// phase factors fold onto index sums; values are row-major in qz.
std::vector<std::complex<double>> transform_grid(int n, Rapidity eta,
                                                 const GridAxis& qz_axis,
                                                 const GridAxis& q0_axis,
                                                 double tol = 1e-9);

}  // namespace wigner
