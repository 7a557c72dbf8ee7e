#include "doctest.h"

#include <cmath>

#include "landau/errors.hpp"
#include "landau/units.hpp"

using namespace landau;

TEST_CASE("coupling from nuclear charge") {
  CHECK(nu_of_Z(40) == doctest::Approx(0.29189).epsilon(1e-5));
  CHECK(nu_of_Z(137) == doctest::Approx(0.99973).epsilon(1e-5));
  CHECK(nu_of_Z(137) < 1);
  CHECK_THROWS_AS(nu_of_Z(138), DomainError);
  CHECK_THROWS_AS(nu_of_Z(0), DomainError);
  CHECK(Z_of_nu(nu_of_Z(92)) == doctest::Approx(92).epsilon(1e-15));
}

TEST_CASE("Tesla conversions") {
  CHECK(tesla_of_B(1.0) == 4.4e9);
  CHECK(tesla_of_B(9.389) == doctest::Approx(4.13e10).epsilon(1e-3));
  CHECK(tesla_of_B(1.775) == doctest::Approx(7.81e9).epsilon(1e-3));
  for (double B : {1e-3, 0.7, 1.0, 123.4, 1e20}) {
    CHECK(B_of_tesla(tesla_of_B(B)) == doctest::Approx(B).epsilon(1e-15));
    CHECK(log_B_of_log10_tesla(log10_tesla_of_log_B(std::log(B))) == doctest::Approx(std::log(B)).epsilon(1e-14));
  }
  // Fields far beyond double range stay representable in log form.
  CHECK(log10_tesla_of_log_B(2000.0) == doctest::Approx(2000.0 / std::log(10.0) + std::log10(4.4e9)));
}

TEST_CASE("overridden constants") {
  PhysicalConstants c;
  c.alpha = 1 / 137.036;
  c.B_unit_tesla = 4.414e9;
  CHECK(c.nonrel_B_unit_tesla() == c.alpha * c.alpha * c.B_unit_tesla);
  CHECK(tesla_of_B(2.0, c) == 2 * 4.414e9);
  CHECK(nu_of_Z(40, c) == 40 / 137.036);
  c.alpha = -1;
  CHECK_THROWS_AS(c.validate(), InputError);
}
