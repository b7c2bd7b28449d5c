#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oscillator.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

using namespace wigner;

TEST_CASE("hermite polynomials match the textbook low orders") {
  CHECK(hermite(0, 0.3) == 1.0);
  CHECK(hermite(1, 0.5) == 1.0);
  CHECK(hermite(2, 1.0) == 2.0);
  CHECK(hermite(3, 0.5) == doctest::Approx(-5.0).epsilon(1e-15));
  CHECK_THROWS_AS(hermite(-1, 0.0), std::invalid_argument);
}

TEST_CASE("light-cone coordinates and back") {
  const LightConePoint lc = to_lightcone(1.0, 1.0);
  CHECK(lc.u == doctest::Approx(std::numbers::sqrt2).epsilon(1e-15));
  CHECK(lc.v == 0.0);
  const SpacetimePoint st = from_lightcone(lc);
  CHECK(st.z == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(st.t == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("boost dilates u and contracts v") {
  const LightConePoint p = boost_point({1.0, 1.0}, Rapidity(1.0));
  CHECK(p.u == doctest::Approx(std::exp(1.0)).epsilon(1e-15));
  CHECK(p.v == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
}

TEST_CASE("ground state peaks at 1/sqrt(pi)") {
  const OscillatorState s(0, Rapidity(0.0));
  CHECK(psi(s, 0.0, 0.0) ==
        doctest::Approx(0.5641895835477563).epsilon(1e-15));
}

TEST_CASE("first excited state at a reference point") {
  const OscillatorState s(1, Rapidity(0.0));
  CHECK(psi(s, 1.0, 0.0) ==
        doctest::Approx(0.48394144903828673).epsilon(1e-14));
}

TEST_CASE("state validates the excitation number") {
  CHECK_THROWS_AS(OscillatorState(-1, Rapidity(0.0)), std::invalid_argument);
  CHECK(OscillatorState(3, Rapidity(0.0)).lambda() == 4.0);
}

TEST_CASE("boosted ground state stretches along the u axis") {
  const OscillatorState s(0, Rapidity(1.0));
  CHECK(psi(s, 1.0, 1.0) > psi(s, 1.0, -1.0));
  CHECK(psi(s, 0.0, 0.0) ==
        doctest::Approx(0.5641895835477563).epsilon(1e-15));
}

TEST_CASE("parity of the mode index survives the boost") {
  const OscillatorState even(2, Rapidity(1.0));
  CHECK(psi(even, -0.7, -0.2) ==
        doctest::Approx(psi(even, 0.7, 0.2)).epsilon(1e-14));
  const OscillatorState odd(3, Rapidity(0.5));
  CHECK(psi(odd, -0.7, -0.2) ==
        doctest::Approx(-psi(odd, 0.7, 0.2)).epsilon(1e-14));
}

TEST_CASE("norm quadrature sees unit norm inside the envelope") {
  CHECK(norm_quadrature(OscillatorState(0, Rapidity(0.0))) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(norm_quadrature(OscillatorState(5, Rapidity(2.0))) ==
        doctest::Approx(1.0).epsilon(1e-9));
  CHECK(norm_quadrature(OscillatorState(12, Rapidity(1.0))) ==
        doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("distinct modes are orthogonal at fixed rapidity") {
  CHECK(std::abs(overlap_quadrature(0, 1, Rapidity(1.0))) < 1e-9);
  CHECK(std::abs(overlap_quadrature(2, 4, Rapidity(0.5))) < 1e-9);
  CHECK(overlap_quadrature(3, 3, Rapidity(1.5)) ==
        doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("quadrature envelope is enforced") {
  CHECK_THROWS_AS(norm_quadrature(OscillatorState(13, Rapidity(0.0))),
                  envelope_error);
  CHECK_THROWS_AS(norm_quadrature(OscillatorState(0, Rapidity(4.5))),
                  envelope_error);
  CHECK_THROWS_AS(overlap_quadrature(0, 13, Rapidity(0.0)), envelope_error);
}

TEST_CASE("difference operator residual shrinks quadratically") {
  const double coarse = fkr_residual(0, 0.02);
  const double fine = fkr_residual(0, 0.01);
  CHECK(fine < 1e-3);
  CHECK(coarse / fine == doctest::Approx(4.0).epsilon(0.2));
}

TEST_CASE("residual blows up away from the true eigenvalue") {
  const double right = fkr_residual(0, 0.01);
  const double wrong = fkr_residual_lambda(0, 0.01, 2.0);
  CHECK(wrong > 100.0 * right);
}

TEST_CASE("difference residual validates the step") {
  CHECK_THROWS_AS(fkr_residual(0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(fkr_residual(0, 0.6), std::invalid_argument);
}
