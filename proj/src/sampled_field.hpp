#pragma once

#include "minkowski.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace wigner {

struct GridAxis {
  double min;
  double max;
  int count;  // >= 2

  double at(int i) const;
  double step() const;
};

// A scalar field tabulated on a rectangular grid, row-major in the first
// axis. Kind fixes the CSV header: (z, t, psi) or (qz, q0, phi).
struct SampledField {
  enum class Kind { SpaceTime, MomentumEnergy };

  Kind kind;
  GridAxis axis0;
  GridAxis axis1;
  std::vector<double> values;

  double value(int i, int j) const;
  // 17 significant digits per cell, enough to round-trip doubles exactly
  void write_csv(std::ostream& os) const;
  std::string to_csv() const;
};

SampledField sample_psi(int n, Rapidity eta, const GridAxis& z_axis,
                        const GridAxis& t_axis);

// Ground-state momentum-energy amplitude on a grid (closed form).
SampledField sample_phi(Rapidity eta, const GridAxis& qz_axis,
                        const GridAxis& q0_axis);

// Half-range covering both squeezed axes to about eight sigma.
double default_grid_range(Rapidity eta);

}  // namespace wigner
