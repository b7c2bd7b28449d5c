#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "observables.hpp"
#include "oscillator.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

using namespace wigner;

TEST_CASE("rest-frame moments are isotropic") {
  const MomentReport r = second_moments(Rapidity(0.0));
  CHECK(r.var_z == 0.5);
  CHECK(r.var_t == 0.5);
  CHECK(r.var_u == 0.5);
  CHECK(r.var_v == 0.5);
  CHECK(r.var_qz == 0.5);
  CHECK(r.var_q0 == 0.5);
  CHECK(r.product_z_qz == 0.25);
  CHECK(r.product_u_qu == 0.25);
}

TEST_CASE("boosted moments follow the squeeze laws") {
  const MomentReport r = second_moments(Rapidity(1.0));
  const double ch2 = 3.7621956910836314;  // cosh(2)
  CHECK(r.eta == 1.0);
  CHECK(r.var_z == doctest::Approx(ch2 / 2).epsilon(1e-15));
  CHECK(r.var_t == doctest::Approx(ch2 / 2).epsilon(1e-15));
  CHECK(r.var_qz == doctest::Approx(ch2 / 2).epsilon(1e-15));
  CHECK(r.var_q0 == doctest::Approx(ch2 / 2).epsilon(1e-15));
  CHECK(r.var_u == doctest::Approx(3.694528049465325).epsilon(1e-15));
  CHECK(r.var_v == doctest::Approx(std::exp(-2.0) / 2).epsilon(1e-15));
  CHECK(r.var_qu == doctest::Approx(std::exp(-2.0) / 2).epsilon(1e-15));
  CHECK(r.var_qv == doctest::Approx(3.694528049465325).epsilon(1e-15));
  CHECK(r.product_z_qz ==
        doctest::Approx(3.538529104502061).epsilon(1e-15));
  CHECK(r.product_u_qu == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(r.product_v_qv == doctest::Approx(0.25).epsilon(1e-15));
}

TEST_CASE("quadrature moments agree with the closed forms") {
  const MomentReport a = second_moments(Rapidity(1.0));
  const MomentReport q = moments_quadrature(Rapidity(1.0));
  CHECK(q.var_z == doctest::Approx(a.var_z).epsilon(1e-9));
  CHECK(q.var_qv == doctest::Approx(a.var_qv).epsilon(1e-9));
  CHECK(q.product_z_qz == doctest::Approx(a.product_z_qz).epsilon(1e-9));
  CHECK(q.product_u_qu == doctest::Approx(0.25).epsilon(1e-9));
}

TEST_CASE("quadrature moments respect the rapidity envelope") {
  CHECK_THROWS_AS(moments_quadrature(Rapidity(4.5)), envelope_error);
  CHECK_THROWS_AS(moments_quadrature(Rapidity(1.0), 0.0),
                  std::invalid_argument);
}

TEST_CASE("widths grow monotonically with rapidity") {
  CHECK(second_moments(Rapidity(2.0)).var_z >
        second_moments(Rapidity(1.0)).var_z);
  CHECK(second_moments(Rapidity(2.0)).var_v <
        second_moments(Rapidity(1.0)).var_v);
}

TEST_CASE("interaction time ratio at the reference beam energy") {
  const Rapidity eta = rapidity_from_energy(0.938, 900.0);
  CHECK(interaction_time_ratio(eta) ==
        doctest::Approx(2.7155693760973723e-07).epsilon(1e-12));
  CHECK(interaction_time_ratio(Rapidity(0.0)) == 1.0);
  CHECK_THROWS_AS(interaction_time_ratio(Rapidity(-0.5)), std::domain_error);
}

TEST_CASE("time ratio multiplies under composed boosts") {
  const double lhs = interaction_time_ratio(Rapidity(1.5));
  const double rhs =
      interaction_time_ratio(Rapidity(1.0)) * interaction_time_ratio(Rapidity(0.5));
  CHECK(lhs == doctest::Approx(rhs).epsilon(1e-14));
}

TEST_CASE("longitudinal density values") {
  CHECK(longitudinal_density(Rapidity(0.0), DensityAxis::Z, 0.0) ==
        doctest::Approx(0.5641895835477563).epsilon(1e-15));
  CHECK(longitudinal_density(Rapidity(1.0), DensityAxis::Z, 0.0) ==
        doctest::Approx(0.290873644745573).epsilon(1e-13));
  CHECK(longitudinal_density(Rapidity(1.0), DensityAxis::Z, 1.5) ==
        doctest::Approx(0.15994563040263896).epsilon(1e-13));
}

TEST_CASE("space and momentum marginals share one profile") {
  for (double x : {0.0, 0.7, 2.0})
    CHECK(longitudinal_density(Rapidity(1.3), DensityAxis::Z, x) ==
          longitudinal_density(Rapidity(1.3), DensityAxis::Qz, x));
}
