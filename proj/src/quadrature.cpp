#include "quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace wigner {

namespace {

// P_n(x) and P_n'(x) by the three-term recurrence.
void legendre_pair(int n, double x, double& p, double& dp) {
  double pm = 1.0;
  double pc = x;
  for (int k = 1; k < n; ++k) {
    const double pn = ((2.0 * k + 1.0) * x * pc - k * pm) / (k + 1.0);
    pm = pc;
    pc = pn;
  }
  p = pc;
  dp = n * (x * pc - pm) / (x * x - 1.0);
}

}  // namespace

QuadRule gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre needs n >= 1");
  QuadRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  if (n == 1) {
    rule.nodes[0] = 0.0;
    rule.weights[0] = 2.0;
    return rule;
  }
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double p = 0.0;
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      legendre_pair(n, x, p, dp);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    legendre_pair(n, x, p, dp);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[n - 1 - i] = x;
    rule.weights[n - 1 - i] = w;
    rule.nodes[i] = -x;
    rule.weights[i] = w;
  }
  if (n % 2 == 1) rule.nodes[half - 1] = 0.0;
  return rule;
}

double hermite_normalized(int n, double x) {
  if (n < 0) throw std::invalid_argument("hermite_normalized needs n >= 0");
  const double h0 = std::pow(std::numbers::pi, -0.25) * std::exp(-0.5 * x * x);
  if (n == 0) return h0;
  double hm = h0;
  double h = std::sqrt(2.0) * x * h0;
  for (int k = 1; k < n; ++k) {
    const double hn =
        x * std::sqrt(2.0 / (k + 1.0)) * h - std::sqrt(k / (k + 1.0)) * hm;
    hm = h;
    h = hn;
  }
  return h;
}

HermiteRule gauss_hermite(int n) {
  if (n < 1) throw std::invalid_argument("gauss_hermite needs n >= 1");

  // March the interlacing ladder: roots of h_k sit strictly between
  // consecutive roots of h_{k-1}, with outer brackets at +/- sqrt(2k+1).
  std::vector<double> prev;  // roots of h_{k-1}
  std::vector<double> cur{0.0};
  for (int k = 2; k <= n; ++k) {
    prev = cur;
    cur.assign(k, 0.0);
    const double bound = std::sqrt(2.0 * k + 1.0);
    for (int i = 0; i < k; ++i) {
      double lo = i == 0 ? -bound : prev[i - 1];
      double hi = i == k - 1 ? bound : prev[i];
      double flo = hermite_normalized(k, lo);
      for (int it = 0; it < 200 && hi - lo > 1e-15 * (1.0 + std::abs(lo)); ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = hermite_normalized(k, mid);
        if ((flo < 0.0) == (fm < 0.0)) {
          lo = mid;
          flo = fm;
        } else {
          hi = mid;
        }
      }
      double x = 0.5 * (lo + hi);
      for (int it = 0; it < 4; ++it) {
        const double h = hermite_normalized(k, x);
        const double dh =
            std::sqrt(2.0 * k) * hermite_normalized(k - 1, x) - x * h;
        if (dh == 0.0) break;
        x -= h / dh;
      }
      cur[i] = x;
    }
    // symmetry clean-up keeps the rule exactly even
    for (int i = 0; i < k / 2; ++i) {
      const double s = 0.5 * (cur[i] - cur[k - 1 - i]);
      cur[i] = s;
      cur[k - 1 - i] = -s;
    }
    if (k % 2 == 1) cur[k / 2] = 0.0;
  }

  HermiteRule rule;
  rule.nodes = cur;
  rule.weights.resize(n);
  rule.modified_weights.resize(n);
  for (int i = 0; i < n; ++i) {
    const double hprev = hermite_normalized(n - 1, rule.nodes[i]);
    const double mw = 1.0 / (n * hprev * hprev);
    rule.modified_weights[i] = mw;
    rule.weights[i] = mw * std::exp(-rule.nodes[i] * rule.nodes[i]);
  }
  return rule;
}

PanelAxis composite_axis(double half_width, double sigma, double freq,
                         int refine, int order) {
  if (!(half_width > 0.0) || !(sigma > 0.0))
    throw std::invalid_argument("composite_axis needs positive extents");
  if (order < 2 || refine < 0 || refine > 12)
    throw std::invalid_argument("composite_axis order/refine out of range");

  const double osc_limit = 20.0;  // phase advance per panel, radians
  double width = sigma;
  if (freq > 0.0 && osc_limit / freq < width) width = osc_limit / freq;
  width /= static_cast<double>(1 << refine);

  auto panels = static_cast<long>(std::ceil(2.0 * half_width / width));
  if (panels < 4) panels = 4;
  if (panels > 4'000'000) throw std::length_error("composite_axis panel count");

  const QuadRule gl = gauss_legendre(order);
  const double step = 2.0 * half_width / static_cast<double>(panels);

  PanelAxis axis;
  axis.nodes.reserve(static_cast<std::size_t>(panels) * order);
  axis.weights.reserve(static_cast<std::size_t>(panels) * order);
  for (long p = 0; p < panels; ++p) {
    const double center = -half_width + (p + 0.5) * step;
    for (int i = 0; i < order; ++i) {
      axis.nodes.push_back(center + 0.5 * step * gl.nodes[i]);
      axis.weights.push_back(0.5 * step * gl.weights[i]);
    }
  }
  return axis;
}

}  // namespace wigner
