#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "minkowski.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

using namespace wigner;

TEST_CASE("interval classifies time-like, light-like, space-like") {
  CHECK(norm_squared({0, 0, 0, 1}) == 1.0);
  CHECK(norm_squared({1, 2, 3, 10}) == 86.0);
  CHECK(norm_squared({0, 0, 3, 3}) == 0.0);
  CHECK(norm_squared({2, 0, 0, 1}) == -3.0);
}

TEST_CASE("component access order is x y z t") {
  const FourVector p{1, 2, 3, 4};
  CHECK(p[0] == 1.0);
  CHECK(p[1] == 2.0);
  CHECK(p[2] == 3.0);
  CHECK(p[3] == 4.0);
}

TEST_CASE("rapidity rejects non-finite input") {
  CHECK_THROWS_AS(Rapidity(std::nan("")), std::invalid_argument);
  CHECK_THROWS_AS(Rapidity(std::numeric_limits<double>::infinity()),
                  std::invalid_argument);
  CHECK(Rapidity(-3.5).value == -3.5);
}

TEST_CASE("boost at zero rapidity is the identity") {
  CHECK(sup_norm(boost_z(Rapidity(0.0)) - Mat4::identity()) == 0.0);
}

TEST_CASE("boosts along z compose additively") {
  const Mat4 lhs = boost_z(Rapidity(0.3)) * boost_z(Rapidity(0.5));
  CHECK(sup_norm(lhs - boost_z(Rapidity(0.8))) < 1e-15);
}

TEST_CASE("light-like momentum scales by exp(eta) under a z boost") {
  const FourVector q = boost_z(Rapidity(1.0)) * FourVector{0, 0, 1, 1};
  CHECK(q.z == doctest::Approx(std::exp(1.0)).epsilon(1e-15));
  CHECK(q.t == doctest::Approx(std::exp(1.0)).epsilon(1e-15));
  CHECK(q.x == 0.0);
  CHECK(q.y == 0.0);
}

TEST_CASE("boost leaves transverse components alone") {
  const FourVector q = boost_z(Rapidity(2.0)) * FourVector{1.5, -2.5, 0.3, 1.0};
  CHECK(q.x == 1.5);
  CHECK(q.y == -2.5);
}

TEST_CASE("dispersion energy is the Pythagorean combination") {
  CHECK(dispersion_energy(3.0, 4.0) == doctest::Approx(5.0).epsilon(1e-15));
  CHECK(dispersion_energy(0.0, 2.5) == 2.5);
  CHECK(dispersion_energy(2.0, 0.0) == 2.0);
  CHECK_THROWS_AS(dispersion_energy(-1.0, 1.0), std::domain_error);
}

TEST_CASE("slow motion window: quadratic approximation error at p/m = 0.01") {
  const DispersionLimits d = dispersion_limits(1.0, 0.01);
  CHECK(d.exact == doctest::Approx(std::sqrt(1.0001)).epsilon(1e-15));
  CHECK(d.nonrelativistic == doctest::Approx(1.00005).epsilon(1e-15));
  CHECK(std::abs(d.exact - d.nonrelativistic) ==
        doctest::Approx(1.2499376033782796e-09).epsilon(1e-6));
}

TEST_CASE("massless limit: nonrelativistic branch diverges") {
  const DispersionLimits d = dispersion_limits(0.0, 5.0);
  CHECK(d.exact == 5.0);
  CHECK(d.ultrarelativistic == 5.0);
  CHECK(std::isinf(d.nonrelativistic));
}

TEST_CASE("rapidity from lab energy") {
  CHECK(rapidity_from_energy(0.938, 900.0).value ==
        doctest::Approx(7.559547002303268).epsilon(1e-14));
  CHECK(rapidity_from_energy(1.0, 1.0).value == 0.0);
  CHECK_THROWS_AS(rapidity_from_energy(1.0, 0.5), std::domain_error);
  CHECK_THROWS_AS(rapidity_from_energy(0.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(rapidity_from_energy(-1.0, 2.0), std::domain_error);
}

TEST_CASE("rapidity and boost are consistent") {
  const Rapidity eta = rapidity_from_energy(2.0, 7.0);
  const FourVector q = boost_z(eta) * FourVector{0, 0, 0, 2.0};
  CHECK(q.t == doctest::Approx(7.0).epsilon(1e-14));
  CHECK(norm_squared(q) == doctest::Approx(4.0).epsilon(1e-12));
}
