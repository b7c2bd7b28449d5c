#include "little_group.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace wigner {

CMat4 operator*(const CMat4& l, const CMat4& r) {
  CMat4 out;
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) {
      const std::complex<double> lik = l(i, k);
      if (lik == std::complex<double>{}) continue;
      for (int j = 0; j < 4; ++j) out(i, j) += lik * r(k, j);
    }
  return out;
}

CMat4 operator-(const CMat4& l, const CMat4& r) {
  CMat4 out;
  for (int k = 0; k < 16; ++k) out.e[k] = l.e[k] - r.e[k];
  return out;
}

CMat4 operator+(const CMat4& l, const CMat4& r) {
  CMat4 out;
  for (int k = 0; k < 16; ++k) out.e[k] = l.e[k] + r.e[k];
  return out;
}

CMat4 to_cmat(const GMat4& m) {
  CMat4 out;
  for (int k = 0; k < 16; ++k)
    out.e[k] = {static_cast<double>(m.e[k].re), static_cast<double>(m.e[k].im)};
  return out;
}

CMat4 to_cmat(const Mat4& m) {
  CMat4 out;
  for (int k = 0; k < 16; ++k) out.e[k] = m.a[k];
  return out;
}

double sup_norm(const CMat4& m) {
  double s = 0.0;
  for (auto z : m.e) s = std::max(s, std::abs(z));
  return s;
}

const char* generator_name(Generator g) {
  switch (g) {
    case Generator::J1: return "J1";
    case Generator::J2: return "J2";
    case Generator::J3: return "J3";
    case Generator::K1: return "K1";
    case Generator::K2: return "K2";
    case Generator::K3: return "K3";
    case Generator::N1: return "N1";
    case Generator::N2: return "N2";
  }
  return "?";
}

std::optional<Generator> generator_from_name(std::string_view name) {
  if (name.size() != 2) return std::nullopt;
  const char c0 = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
  const char c1 = name[1];
  if (c1 < '1' || c1 > '3') return std::nullopt;
  const int k = c1 - '1';
  switch (c0) {
    case 'J': return all_generators[k];
    case 'K': return all_generators[3 + k];
    case 'N': return k < 2 ? std::optional<Generator>(all_generators[6 + k]) : std::nullopt;
    default: return std::nullopt;
  }
}

namespace {

GMat4 make_generator(Generator g) {
  GMat4 m;
  const GaussInt i = g_i;
  const GaussInt mi{0, -1};
  switch (g) {
    case Generator::J1:
      m(1, 2) = mi;
      m(2, 1) = i;
      break;
    case Generator::J2:
      m(0, 2) = i;
      m(2, 0) = mi;
      break;
    case Generator::J3:
      m(0, 1) = mi;
      m(1, 0) = i;
      break;
    case Generator::K1:
      m(0, 3) = i;
      m(3, 0) = i;
      break;
    case Generator::K2:
      m(1, 3) = i;
      m(3, 1) = i;
      break;
    case Generator::K3:
      m(2, 3) = i;
      m(3, 2) = i;
      break;
    case Generator::N1:
      m = make_generator(Generator::K1) - make_generator(Generator::J2);
      break;
    case Generator::N2:
      m = make_generator(Generator::K2) + make_generator(Generator::J1);
      break;
  }
  return m;
}

}  // namespace

const GMat4& generator(Generator g) {
  static const std::array<GMat4, 8> table = [] {
    std::array<GMat4, 8> t;
    for (std::size_t k = 0; k < all_generators.size(); ++k)
      t[k] = make_generator(all_generators[k]);
    return t;
  }();
  return table[static_cast<std::size_t>(g)];
}

GMat4 n1_from_parts() {
  return generator(Generator::K1) - generator(Generator::J2);
}

GMat4 n2_from_parts() {
  return generator(Generator::K2) + generator(Generator::J1);
}

const GMat3& plane_motion_generator(PlaneMotion g) {
  static const std::array<GMat3, 3> table = [] {
    std::array<GMat3, 3> t;
    t[0](0, 1) = GaussInt{0, -1};  // L, rotation about the origin
    t[0](1, 0) = g_i;
    t[1](0, 2) = g_i;  // P1, translation along x
    t[2](1, 2) = g_i;  // P2, translation along y
    return t;
  }();
  return table[static_cast<std::size_t>(g)];
}

CMat4 boost_conjugate(Generator g, Rapidity eta, ConjugationOrder order) {
  // The inverse boost is the closed-form boost at -eta. Never invert
  // numerically: the condition number grows like e^{2 eta} and swamps the
  // e^{-2 eta} contraction residual long before eta = 10.
  const CMat4 b = to_cmat(boost_z(eta));
  const CMat4 binv = to_cmat(boost_z(Rapidity(-eta.value)));
  const CMat4 gm = to_cmat(generator(g));
  if (order == ConjugationOrder::BInvGB) return binv * gm * b;
  return b * gm * binv;
}

ContractionFit contraction_fit(Generator j, Rapidity eta, ConjugationOrder order) {
  if (j != Generator::J1 && j != Generator::J2)
    throw std::invalid_argument("contraction_fit expects J1 or J2");
  if (eta.value < 0.0) throw std::domain_error("contraction_fit expects eta >= 0");

  const Generator target = j == Generator::J2 ? Generator::N1 : Generator::N2;
  CMat4 m = boost_conjugate(j, eta, order);
  const double damp = std::exp(-eta.value);
  for (auto& z : m.e) z *= damp;

  const CMat4 n = to_cmat(generator(target));
  double num = 0.0;
  double den = 0.0;
  for (int k = 0; k < 16; ++k) {
    num += std::real(std::conj(n.e[k]) * m.e[k]);
    den += std::norm(n.e[k]);
  }
  const double c = num / den;

  CMat4 r = m;
  for (int k = 0; k < 16; ++k) r.e[k] -= c * n.e[k];
  return {eta.value, c, sup_norm(r)};
}

namespace {

Mat4 rotation_block(int r0, int r1, double angle, bool flip) {
  Mat4 m = Mat4::identity();
  const double c = std::cos(angle);
  const double s = flip ? -std::sin(angle) : std::sin(angle);
  m(r0, r0) = c;
  m(r0, r1) = -s;
  m(r1, r0) = s;
  m(r1, r1) = c;
  return m;
}

Mat4 boost_block(int r, double xi) {
  Mat4 m = Mat4::identity();
  m(r, r) = std::cosh(xi);
  m(r, 3) = std::sinh(xi);
  m(3, r) = std::sinh(xi);
  m(3, 3) = std::cosh(xi);
  return m;
}

Mat4 nilpotent_exp(const GMat4& gen, double xi) {
  // X = -iN is real with X^3 = 0, so the series terminates.
  double x[16];
  for (int k = 0; k < 16; ++k) x[k] = static_cast<double>(gen.e[k].im);
  Mat4 m = Mat4::identity();
  Mat4 x2;
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k)
      for (int j = 0; j < 4; ++j) x2(i, j) += x[4 * i + k] * x[4 * k + j];
  for (int k = 0; k < 16; ++k) m.a[k] += xi * x[k] + 0.5 * xi * xi * x2.a[k];
  return m;
}

}  // namespace

Mat4 exp_generator(Generator g, double xi) {
  switch (g) {
    case Generator::J1: return rotation_block(1, 2, xi, false);
    case Generator::J2: return rotation_block(0, 2, xi, true);
    case Generator::J3: return rotation_block(0, 1, xi, false);
    case Generator::K1: return boost_block(0, xi);
    case Generator::K2: return boost_block(1, xi);
    case Generator::K3: return boost_block(2, xi);
    case Generator::N1: return nilpotent_exp(generator(Generator::N1), xi);
    case Generator::N2: return nilpotent_exp(generator(Generator::N2), xi);
  }
  throw std::invalid_argument("unknown generator");
}

bool leaves_invariant(const Mat4& lambda, const FourVector& p, double tol) {
  const FourVector q = lambda * p;
  const double d = std::max({std::abs(q.x - p.x), std::abs(q.y - p.y),
                             std::abs(q.z - p.z), std::abs(q.t - p.t)});
  return d <= tol;
}

double gauge_shift_residual(const FourVector& eps, const FourVector& p, double xi,
                            Generator which) {
  if (which != Generator::N1 && which != Generator::N2)
    throw std::invalid_argument("gauge_shift_residual expects N1 or N2");
  const double scale = std::max(std::abs(p.z), std::abs(p.t));
  if (scale <= 0.0 || p.z <= 0.0 || std::abs(p.x) > 1e-12 * scale ||
      std::abs(p.y) > 1e-12 * scale || std::abs(p.t - p.z) > 1e-12 * scale)
    throw std::domain_error("gauge_shift_residual expects light-like p along +z");

  const FourVector d0 = exp_generator(which, xi) * eps;
  const FourVector d{d0.x - eps.x, d0.y - eps.y, d0.z - eps.z, d0.t - eps.t};
  // best multiple of p = (0,0,w,w) leaves max(|dx|, |dy|, |dz - dt|/2)
  return std::max({std::abs(d.x), std::abs(d.y), 0.5 * std::abs(d.z - d.t)});
}

}  // namespace wigner
