#pragma once

#include <functional>
#include <vector>

namespace wigner {

struct QuadRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// n-point rule on [-1, 1], weight 1. Exact for polynomials of degree 2n-1.
QuadRule gauss_legendre(int n);

struct HermiteRule {
  std::vector<double> nodes;
  std::vector<double> weights;           // for integrands f(x) e^{-x^2}
  std::vector<double> modified_weights;  // for plain f(x) with Gaussian decay
};

// n-point Gauss-Hermite rule. Nodes by bisection + Newton on the normalized
// Hermite functions, which keeps everything finite out to large n; the
// modified weights come out directly as 1/(n h_{n-1}(x_i)^2), so no e^{x^2}
// blow-up is ever formed.
HermiteRule gauss_hermite(int n);

// Composite Gauss-Legendre nodes covering [-half_width, half_width], panel
// width min(sigma, osc_limit/freq) so both the Gaussian envelope and the
// oscillation exp(i freq x) stay resolved by a fixed-order panel rule.
struct PanelAxis {
  std::vector<double> nodes;
  std::vector<double> weights;
};

PanelAxis composite_axis(double half_width, double sigma, double freq,
                         int refine = 0, int order = 24);

// Orthonormal Hermite function h_n(x) = H_n(x) e^{-x^2/2} / (pi^{1/4} 2^{n/2} sqrt(n!)).
double hermite_normalized(int n, double x);

}  // namespace wigner
