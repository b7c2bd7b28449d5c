#pragma once

#include <array>
#include <cstddef>

namespace wigner {

// Component order is (x, y, z, t) throughout; metric signature (-,-,-,+).
struct FourVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
  double t = 0.0;

  double operator[](std::size_t i) const {
    const double c[4] = {x, y, z, t};
    return c[i];
  }
};

// Additive boost parameter along z: tanh(eta) = v/c. Finite by construction.
struct Rapidity {
  double value;
  explicit Rapidity(double eta);
};

// Dense 4x4 real matrix acting on FourVector, row-major.
struct Mat4 {
  std::array<double, 16> a{};

  double& operator()(int r, int c) { return a[4 * r + c]; }
  double operator()(int r, int c) const { return a[4 * r + c]; }

  static Mat4 identity();
};

Mat4 operator*(const Mat4& l, const Mat4& r);
FourVector operator*(const Mat4& m, const FourVector& p);
Mat4 operator-(const Mat4& l, const Mat4& r);
double sup_norm(const Mat4& m);

// t^2 - x^2 - y^2 - z^2; sign classifies time-like (+) / light-like (0) / space-like (-)
double norm_squared(const FourVector& p);

// z-boost: z' = z cosh(eta) + t sinh(eta), t' = z sinh(eta) + t cosh(eta)
Mat4 boost_z(Rapidity eta);

// sqrt(m^2 + p^2) for m >= 0; throws std::domain_error on negative mass
double dispersion_energy(double m, double p);

struct DispersionLimits {
  double exact;
  double nonrelativistic;  // m + p^2/(2m); +inf when m == 0
  double ultrarelativistic;
};

DispersionLimits dispersion_limits(double m, double p);

// eta with m cosh(eta) = energy; requires m > 0 and energy >= m
Rapidity rapidity_from_energy(double m, double energy);

}  // namespace wigner
