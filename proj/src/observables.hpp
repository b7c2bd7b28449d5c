#pragma once

#include "minkowski.hpp"

namespace wigner {

// Ground-state second moments of |psi|^2 and |phi|^2 at rapidity eta,
// together with the uncertainty products that expose which pairs dilate
// under the boost and which stay frozen at the minimum.
struct MomentReport {
  double eta;
  double var_z;
  double var_t;
  double var_u;
  double var_v;
  double var_qz;
  double var_q0;
  double var_qu;
  double var_qv;
  double product_z_qz;
  double product_u_qu;
  double product_v_qv;
};

MomentReport second_moments(Rapidity eta);

// Same fields, every entry an explicit 2-D integral of the sampled density
// by Gauss-Hermite tensor quadrature in the squeeze-adapted frames.
MomentReport moments_quadrature(Rapidity eta, double tol = 1e-9);

// Longitudinal interaction-time ratio seen from the lab: contraction of the
// struck hadron's internal time scale, e^{-2 eta}.
double interaction_time_ratio(Rapidity eta);

enum class DensityAxis { Z, Qz };

// Marginal densities of the boosted ground state along z or qz; both are
// centered Gaussians of variance cosh(2 eta)/2.
double longitudinal_density(Rapidity eta, DensityAxis axis, double x);

}  // namespace wigner
