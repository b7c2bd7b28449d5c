#include "minkowski.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace wigner {

Rapidity::Rapidity(double eta) : value(eta) {
  if (!std::isfinite(eta)) {
    throw std::invalid_argument("rapidity must be finite");
  }
}

Mat4 Mat4::identity() {
  Mat4 m;
  for (int i = 0; i < 4; ++i) m(i, i) = 1.0;
  return m;
}

Mat4 operator*(const Mat4& l, const Mat4& r) {
  Mat4 out;
  for (int i = 0; i < 4; ++i) {
    for (int k = 0; k < 4; ++k) {
      const double lik = l(i, k);
      if (lik == 0.0) continue;
      for (int j = 0; j < 4; ++j) out(i, j) += lik * r(k, j);
    }
  }
  return out;
}

FourVector operator*(const Mat4& m, const FourVector& p) {
  double out[4] = {0, 0, 0, 0};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) out[i] += m(i, j) * p[j];
  }
  return {out[0], out[1], out[2], out[3]};
}

Mat4 operator-(const Mat4& l, const Mat4& r) {
  Mat4 out;
  for (int i = 0; i < 16; ++i) out.a[i] = l.a[i] - r.a[i];
  return out;
}

double sup_norm(const Mat4& m) {
  double s = 0.0;
  for (double v : m.a) s = std::max(s, std::abs(v));
  return s;
}

double norm_squared(const FourVector& p) {
  return p.t * p.t - p.x * p.x - p.y * p.y - p.z * p.z;
}

Mat4 boost_z(Rapidity eta) {
  const double ch = std::cosh(eta.value);
  const double sh = std::sinh(eta.value);
  Mat4 m = Mat4::identity();
  m(2, 2) = ch;
  m(2, 3) = sh;
  m(3, 2) = sh;
  m(3, 3) = ch;
  return m;
}

double dispersion_energy(double m, double p) {
  if (m < 0.0) throw std::domain_error("mass must be non-negative");
  return std::hypot(m, p);
}

DispersionLimits dispersion_limits(double m, double p) {
  DispersionLimits out;
  out.exact = dispersion_energy(m, p);
  out.nonrelativistic = m > 0.0 ? m + p * p / (2.0 * m)
                                : std::numeric_limits<double>::infinity();
  out.ultrarelativistic = std::abs(p);
  return out;
}

Rapidity rapidity_from_energy(double m, double energy) {
  if (m <= 0.0) throw std::domain_error("rapidity_from_energy needs m > 0");
  if (energy < m) throw std::domain_error("energy below rest mass");
  return Rapidity(std::acosh(energy / m));
}

}  // namespace wigner
