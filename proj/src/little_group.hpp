#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <string_view>
#include <optional>

#include "minkowski.hpp"

namespace wigner {

// Gaussian integer a + b i. Generator matrices have entries in {0, +/-i} and
// stay inside Z[i] under commutators, so the algebra checks are exact.
struct GaussInt {
  std::int64_t re = 0;
  std::int64_t im = 0;

  friend GaussInt operator+(GaussInt l, GaussInt r) { return {l.re + r.re, l.im + r.im}; }
  friend GaussInt operator-(GaussInt l, GaussInt r) { return {l.re - r.re, l.im - r.im}; }
  friend GaussInt operator*(GaussInt l, GaussInt r) {
    return {l.re * r.re - l.im * r.im, l.re * r.im + l.im * r.re};
  }
  friend bool operator==(GaussInt l, GaussInt r) = default;
};

inline constexpr GaussInt g_i{0, 1};  // the unit imaginary

template <int N>
struct GaussMat {
  std::array<GaussInt, static_cast<std::size_t>(N) * N> e{};

  GaussInt& operator()(int r, int c) { return e[N * r + c]; }
  GaussInt operator()(int r, int c) const { return e[N * r + c]; }

  friend GaussMat operator+(const GaussMat& l, const GaussMat& r) {
    GaussMat out;
    for (std::size_t k = 0; k < l.e.size(); ++k) out.e[k] = l.e[k] + r.e[k];
    return out;
  }
  friend GaussMat operator-(const GaussMat& l, const GaussMat& r) {
    GaussMat out;
    for (std::size_t k = 0; k < l.e.size(); ++k) out.e[k] = l.e[k] - r.e[k];
    return out;
  }
  friend GaussMat operator*(const GaussMat& l, const GaussMat& r) {
    GaussMat out;
    for (int i = 0; i < N; ++i)
      for (int k = 0; k < N; ++k)
        for (int j = 0; j < N; ++j) out(i, j) = out(i, j) + l(i, k) * r(k, j);
    return out;
  }
  friend GaussMat operator*(GaussInt s, const GaussMat& m) {
    GaussMat out;
    for (std::size_t k = 0; k < m.e.size(); ++k) out.e[k] = s * m.e[k];
    return out;
  }
  friend bool operator==(const GaussMat& l, const GaussMat& r) = default;

  bool is_zero() const {
    for (auto g : e)
      if (!(g == GaussInt{})) return false;
    return true;
  }
};

using GMat4 = GaussMat<4>;
using GMat3 = GaussMat<3>;

template <int N>
GaussMat<N> commutator(const GaussMat<N>& a, const GaussMat<N>& b) {
  return a * b - b * a;
}

// Complex 4x4 for conjugated generators (entries leave Z[i] once cosh/sinh appear).
struct CMat4 {
  std::array<std::complex<double>, 16> e{};

  std::complex<double>& operator()(int r, int c) { return e[4 * r + c]; }
  std::complex<double> operator()(int r, int c) const { return e[4 * r + c]; }
};

CMat4 operator*(const CMat4& l, const CMat4& r);
CMat4 operator-(const CMat4& l, const CMat4& r);
CMat4 operator+(const CMat4& l, const CMat4& r);
CMat4 to_cmat(const GMat4& m);
CMat4 to_cmat(const Mat4& m);
double sup_norm(const CMat4& m);

enum class Generator { J1, J2, J3, K1, K2, K3, N1, N2 };

inline constexpr std::array<Generator, 8> all_generators = {
    Generator::J1, Generator::J2, Generator::J3, Generator::K1,
    Generator::K2, Generator::K3, Generator::N1, Generator::N2};

const char* generator_name(Generator g);
std::optional<Generator> generator_from_name(std::string_view name);

// Exact matrix of the generator in the (x, y, z, t) basis.
const GMat4& generator(Generator g);

// Translation-like combinations of the massless little group.
GMat4 n1_from_parts();  // K1 - J2
GMat4 n2_from_parts();  // K2 + J1

// Generators of rigid motions of the (x, y) plane acting on (x, y, 1):
// L rotates, P1/P2 translate. Same structure constants as {J3, N1, N2}.
enum class PlaneMotion { L, P1, P2 };
const GMat3& plane_motion_generator(PlaneMotion g);

// Order of the similarity transform applied to G with B = boost_z(eta).
enum class ConjugationOrder {
  BInvGB,  // B^{-1} G B
  BGBInv,  // B G B^{-1}
};

// Boost conjugation of a generator; exact in cosh/sinh up to rounding.
CMat4 boost_conjugate(Generator g, Rapidity eta, ConjugationOrder order);

struct ContractionFit {
  double eta;
  double fitted_scale;   // least-squares coefficient of the target N against
                         // e^{-eta} times the conjugated generator
  double residual_norm;  // sup norm of the remainder
};

// Contraction study for j in {J1, J2}: target is N2 for J1 and N1 for J2.
ContractionFit contraction_fit(Generator j, Rapidity eta, ConjugationOrder order);

// exp(-i xi G) as a real Lorentz matrix, closed form per generator family.
Mat4 exp_generator(Generator g, double xi);

bool leaves_invariant(const Mat4& lambda, const FourVector& p, double tol);

// Residual of the gauge interpretation: for light-like p along z and a
// polarization-like eps, how far Lambda(eps) - eps is from a multiple of p.
// which must be N1 or N2; p must be (0, 0, w, w) with w > 0.
double gauge_shift_residual(const FourVector& eps, const FourVector& p, double xi,
                            Generator which);

}  // namespace wigner
