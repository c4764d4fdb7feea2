#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>

#include "bingham/specfun.hpp"
#include "oracles.hpp"

using bingham::kummer_half_one;
using bingham::kummer_threehalves_two;

namespace {
double rel_err(double got, double want) {
  return std::abs(got - want) / std::abs(want);
}
} // namespace

TEST_CASE("kummer_half_one pinned values") {
  CHECK(kummer_half_one(0.0) == 1.0);
  // Frozen from the Bessel-identity oracle (e^(z/2) I0(z/2), raw series).
  CHECK(rel_err(kummer_half_one(-8.0), 0.2070019212239867) < 1e-13);
  CHECK(rel_err(kummer_half_one(-50.0), 0.0801967735474367) < 1e-13);
  CHECK(rel_err(oracle::f11_half_one_bessel(-8.0), 0.2070019212239867) < 1e-13);
  CHECK(rel_err(oracle::f11_half_one_bessel(-50.0), 0.0801967735474367) < 1e-13);
}

TEST_CASE("kummer_threehalves_two pinned values") {
  CHECK(kummer_threehalves_two(0.0) == 1.0);
  CHECK(rel_err(kummer_threehalves_two(-8.0), 0.0282510817215514) < 1e-13);
  CHECK(rel_err(oracle::f11_threehalves_two_bessel(-8.0), 0.0282510817215514) < 1e-13);
  // Two-term series: 1 + (3/4) z; the next term is ~3e-7 at z = -1e-3.
  CHECK(std::abs(kummer_threehalves_two(-0.001) - (1.0 - 0.00075)) < 5e-7);
}

TEST_CASE("matches Bessel-identity oracle over [-500, 0]") {
  for (int i = 0; i < 500; ++i) {
    const double z = -500.0 + i;
    CAPTURE(z);
    CHECK(rel_err(kummer_half_one(z), oracle::f11_half_one_bessel(z)) < 1e-12);
    // The raw-series oracle for 1F1(3/2,2,z) loses ~|z| eps to cancellation
    // (I0 - I1 at large argument), so the bound widens past z = -200.
    const double tol = z >= -200.0 ? 1e-12 : 1e-11;
    CHECK(rel_err(kummer_threehalves_two(z), oracle::f11_threehalves_two_bessel(z)) < tol);
  }
}

TEST_CASE("deep-tail anchors") {
  // Frozen from 30-digit evaluation of the defining series.
  const struct { double z, f_half, f_threehalves; } anchors[] = {
      {-100.0, 0.056561626647454193, 0.00056850275455879289},
      {-200.0, 0.039944379299096683, 0.00020022627396642997},
      {-350.0, 0.030178812267257216, 8.6349066971485164e-5},
      {-500.0, 0.025243969387054754, 5.0538629937448371e-5},
  };
  for (const auto& a : anchors) {
    CAPTURE(a.z);
    CHECK(rel_err(kummer_half_one(a.z), a.f_half) < 1e-13);
    CHECK(rel_err(kummer_threehalves_two(a.z), a.f_threehalves) < 1e-13);
  }
}

TEST_CASE("matches Kummer-transformed direct series over [-200, 0]") {
  for (int i = 0; i <= 400; ++i) {
    const double z = -200.0 + 0.5 * i;
    CAPTURE(z);
    CHECK(rel_err(kummer_half_one(z), oracle::f11_half_one_transform(z)) < 1e-10);
    CHECK(rel_err(kummer_threehalves_two(z), oracle::f11_threehalves_two_transform(z)) < 1e-10);
  }
}

TEST_CASE("derivative identity d/dz 1F1(1/2,1,z) = 1/2 1F1(3/2,2,z)") {
  const double h = 1e-5;
  for (double z : {-0.5, -1.0, -5.0, -20.0, -100.0}) {
    CAPTURE(z);
    const double fd = (kummer_half_one(z + h) - kummer_half_one(z - h)) / (2 * h);
    CHECK(rel_err(fd, 0.5 * kummer_threehalves_two(z)) < 1e-6);
  }
}

TEST_CASE("kummer_half_one strictly increasing on [-500, 0]") {
  double prev = kummer_half_one(-500.0);
  for (int i = 1; i <= 1000; ++i) {
    const double z = -500.0 + 0.5 * i;
    const double cur = kummer_half_one(z);
    CHECK(cur > prev);
    prev = cur;
  }
}

TEST_CASE("tail magnitude sanity") {
  const double v = kummer_half_one(-500.0);
  CHECK(v > 0.0);
  CHECK(v < 0.05);
}

TEST_CASE("positive arguments up to 1 are accepted") {
  CHECK(rel_err(kummer_half_one(1.0), oracle::f11_half_one_transform(1.0)) < 1e-12);
  CHECK(rel_err(kummer_threehalves_two(0.5), oracle::f11_threehalves_two_transform(0.5)) < 1e-12);
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(kummer_half_one(std::numeric_limits<double>::quiet_NaN()), std::domain_error);
  CHECK_THROWS_AS(kummer_half_one(std::numeric_limits<double>::infinity()), std::domain_error);
  CHECK_THROWS_AS(kummer_half_one(1.5), std::domain_error);
  CHECK_THROWS_AS(kummer_threehalves_two(-std::numeric_limits<double>::infinity()), std::domain_error);
  CHECK_THROWS_AS(kummer_threehalves_two(2.0), std::domain_error);
}
