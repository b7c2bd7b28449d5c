#include "sampled_field.hpp"

#include "oscillator.hpp"
#include "spectral.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace wigner {

double GridAxis::at(int i) const {
  return min + (max - min) * (static_cast<double>(i) / (count - 1));
}

double GridAxis::step() const { return (max - min) / (count - 1); }

namespace {

void check_axis(const GridAxis& a) {
  if (a.count < 2) throw std::invalid_argument("grid axis needs count >= 2");
  if (!(a.min < a.max)) throw std::invalid_argument("grid axis needs min < max");
  if (!std::isfinite(a.min) || !std::isfinite(a.max))
    throw std::invalid_argument("grid axis bounds must be finite");
}

}  // namespace

double SampledField::value(int i, int j) const {
  return values[static_cast<std::size_t>(i) * axis1.count + j];
}

void SampledField::write_csv(std::ostream& os) const {
  os << (kind == Kind::SpaceTime ? "z,t,psi\n" : "qz,q0,phi\n");
  char buf[96];
  for (int i = 0; i < axis0.count; ++i) {
    const double a = axis0.at(i);
    for (int j = 0; j < axis1.count; ++j) {
      std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", a, axis1.at(j),
                    value(i, j));
      os << buf;
    }
  }
}

std::string SampledField::to_csv() const {
  std::ostringstream os;
  write_csv(os);
  return os.str();
}

SampledField sample_psi(int n, Rapidity eta, const GridAxis& z_axis,
                        const GridAxis& t_axis) {
  check_axis(z_axis);
  check_axis(t_axis);
  if (n < 0 || n > max_quadrature_n)
    throw envelope_error("sample_psi: n out of range");
  if (std::abs(eta.value) > max_quadrature_eta)
    throw envelope_error("sample_psi: |eta| out of range");

  const OscillatorState s(n, eta);
  SampledField field{SampledField::Kind::SpaceTime, z_axis, t_axis, {}};
  field.values.resize(static_cast<std::size_t>(z_axis.count) * t_axis.count);
  for (int i = 0; i < z_axis.count; ++i) {
    const double z = z_axis.at(i);
    for (int j = 0; j < t_axis.count; ++j)
      field.values[static_cast<std::size_t>(i) * t_axis.count + j] =
          psi(s, z, t_axis.at(j));
  }
  return field;
}

SampledField sample_phi(Rapidity eta, const GridAxis& qz_axis,
                        const GridAxis& q0_axis) {
  check_axis(qz_axis);
  check_axis(q0_axis);
  if (std::abs(eta.value) > max_quadrature_eta)
    throw envelope_error("sample_phi: |eta| out of range");

  SampledField field{SampledField::Kind::MomentumEnergy, qz_axis, q0_axis, {}};
  field.values.resize(static_cast<std::size_t>(qz_axis.count) * q0_axis.count);
  for (int i = 0; i < qz_axis.count; ++i) {
    const double qz = qz_axis.at(i);
    for (int j = 0; j < q0_axis.count; ++j)
      field.values[static_cast<std::size_t>(i) * q0_axis.count + j] =
          phi_ground(eta, {qz, q0_axis.at(j)});
  }
  return field;
}

double default_grid_range(Rapidity eta) {
  return 4.0 * std::max(std::exp(eta.value), std::exp(-eta.value));
}

}  // namespace wigner
