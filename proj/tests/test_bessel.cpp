#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "bnls/bessel.hpp"

using namespace bnls;

namespace {
const double kPi = 3.14159265358979323846;
}

TEST_CASE("half-integer closed form J_{1/2} on (0, 50]") {
  double worst = 0.0;
  for (int i = 1; i <= 5000; ++i) {
    const double t = 0.01 * i;
    const double want = std::sqrt(2.0 / (kPi * t)) * std::sin(t);
    worst = std::max(worst, std::abs(bessel_j(0.5, t) - want));
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("values at zero and domain checks") {
  CHECK(bessel_j(0.0, 0.0) == 1.0);
  CHECK(bessel_j(0.25, 0.0) == 0.0);
  CHECK(bessel_j(3.0, 0.0) == 0.0);
  CHECK_THROWS(bessel_j(-0.5, 1.0));
  CHECK_THROWS(bessel_j(0.5, -1.0));
}

TEST_CASE("agrees with the standard library across orders and arguments") {
  // std::cyl_bessel_j is an independent implementation; compare on a grid
  // spanning series, switchover and asymptotic zones.
  double worst = 0.0;
  for (double nu : {0.0, 0.5, 1.0, 1.5, 2.0, 3.0, 5.5, 8.0}) {
    for (double t = 0.05; t <= 1000.0; t *= 1.37) {
      const double mine = bessel_j(nu, t);
      const double ref = std::cyl_bessel_j(nu, t);
      worst = std::max(worst, std::abs(mine - ref));
    }
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("derivative identity against central differences") {
  // J'_nu(t) = -J_{nu+1}(t) + (nu/t) J_nu(t)
  double worst = 0.0;
  for (double nu : {0.0, 0.7, 1.0, 2.5}) {
    for (double t = 0.5; t <= 50.0; t += 0.25) {
      const double h = 1e-5;
      const double fd =
          (bessel_j(nu, t + h) - bessel_j(nu, t - h)) / (2.0 * h);
      worst = std::max(worst, std::abs(bessel_j_derivative(nu, t) - fd));
    }
  }
  CHECK(worst < 1e-6);
}

TEST_CASE("J_0 spot values") {
  CHECK(std::abs(bessel_j(0.0, 1.0) - 0.76519768655796655) < 1e-12);
  CHECK(std::abs(bessel_j(1.0, 1.0) - 0.44005058574493352) < 1e-12);
  CHECK(std::abs(bessel_j(0.0, 2.404825557695773) - 0.0) < 1e-12);  // zero
}
