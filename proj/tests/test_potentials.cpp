#include "doctest.h"

#include <cmath>
#include <random>

#include "landau/errors.hpp"
#include "landau/potentials.hpp"
#include "landau/verification/oracles.hpp"

using namespace landau;

namespace {
const double kPi = std::acos(-1.0);
}

TEST_CASE("a_0 at the origin and its scaling") {
  CHECK(landau_coulomb(0, 1.0, 0.0) == doctest::Approx(std::sqrt(kPi / 2)).epsilon(1e-14));
  CHECK(landau_coulomb(0, 4.0, 0.0) == doctest::Approx(2 * std::sqrt(kPi / 2)).epsilon(1e-14));
  const double far = landau_coulomb(0, 1.0, 100.0);
  CHECK(std::fabs(far / 0.01 - 1) < 2e-4);
  CHECK(scaling_check(1.0, 0.0) == 0.0);
  CHECK(scaling_check(17.3, 2.4) < 1e-10);
  CHECK(scaling_check(0.1, -50.0) < 1e-10);
}

TEST_CASE("a_l matches the moment-sum oracle") {
  for (int ell = 0; ell <= 5; ++ell) {
    for (double B : {0.5, 3.0}) {
      for (double z : {0.0, 0.05, 0.7, 4.0, 25.0, 90.0}) {
        const double ref = oracle::a_ell_moments(ell, B, z);
        CHECK(std::fabs(landau_coulomb(ell, B, z) / ref - 1) < 1e-10);
      }
    }
  }
}

TEST_CASE("a_0 matches the erfcx closed form across scales") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> logB(std::log(1e-3), std::log(1e4)), logz(std::log(1e-6), std::log(1e4));
  for (int i = 0; i < 200; ++i) {
    const double B = std::exp(logB(rng)), z = std::exp(logz(rng));
    CHECK(std::fabs(landau_coulomb(0, B, z) / oracle::a0_closed_form(B, z) - 1) < 1e-12);
  }
}

TEST_CASE("quadrature and series agree at the switch radius") {
  for (int ell = 0; ell <= 8; ++ell) {
    for (double B : {0.2, 1.0, 50.0}) {
      const double z = asymptotic_radius(ell) / std::sqrt(B);
      const double q = landau_coulomb_quadrature(ell, B, z);
      const double s = landau_coulomb_series(ell, B, z);
      CHECK(std::fabs(q / s - 1) < 1e-10);
    }
  }
}

TEST_CASE("potential properties: positive, even, maximal at 0, monotone in ell") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> zdist(-60.0, 60.0), Bdist(0.1, 30.0);
  for (int i = 0; i < 200; ++i) {
    const double z = zdist(rng), B = Bdist(rng);
    const int ell = i % 6;
    const double v = landau_coulomb(ell, B, z);
    CHECK(v > 0);
    CHECK(landau_coulomb(ell, B, -z) == v);
    CHECK(v <= landau_coulomb(ell, B, 0.0));
    CHECK(landau_coulomb(0, B, z) <= std::sqrt(kPi * B / 2) * (1 + 1e-15));
    if (ell > 0) CHECK(v <= landau_coulomb(ell - 1, B, z) + 1e-12);
  }
}

TEST_CASE("a_ell reports the regime") {
  const PotentialSpec spec{0.5, 1.0, 0};
  CHECK(a_ell(spec, 1.0).regime == Regime::quadrature);
  CHECK(a_ell(spec, 100.0).regime == Regime::asymptotic);
  CHECK(a_ell(spec, 100.0).value == landau_coulomb(0, 1.0, 100.0));
}

TEST_CASE("PotentialSpec validation") {
  CHECK_THROWS_AS(PotentialSpec({1.0, 1.0, 0}).validate(), InputError);
  CHECK_THROWS_AS(PotentialSpec({0.0, 1.0, 0}).validate(), InputError);
  CHECK_THROWS_AS(PotentialSpec({0.5, 0.0, 0}).validate(), InputError);
  CHECK_THROWS_AS(PotentialSpec({0.5, 1.0, -1}).validate(), InputError);
  CHECK_THROWS_AS(PotentialSpec({NAN, 1.0, 0}).validate(), InputError);
  CHECK_NOTHROW(PotentialSpec({0.999, 1e12, 7}).validate());
}

TEST_CASE("logarithmic variable map") {
  CHECK(y_of_z(0.0).y == 0.0);
  CHECK(z_of_y(y_of_z(3.7).y).z == doctest::Approx(3.7).epsilon(1e-12));

  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> zdist(-40.0, 40.0);
  for (int i = 0; i < 200; ++i) {
    const double z = zdist(rng);
    const VariableMap m = y_of_z(z);
    CHECK(y_of_z(-z).y == doctest::Approx(-m.y).epsilon(1e-14));
    CHECK(y_of_z(z + 1e-3).y > m.y);
    CHECK(std::fabs(m.mu_at_y * landau_coulomb(0, 1.0, z) - 1) < 1e-8);
    CHECK(std::fabs(z_of_y(m.y).z - z) < 1e-8 * std::max(1.0, std::fabs(z)));
  }

  const VariableMap far = z_of_y(200.0);
  CHECK(std::isfinite(far.log_mu));
  CHECK(std::fabs(far.log_mu - 200.0) < 2.0);
}

TEST_CASE("mu bound constant") {
  const double c = mu_bound_constant();
  CHECK(std::sqrt(2 / kPi) <= c * (1 + 1e-12));
  CHECK(c < 10);
  for (int k = 0; k < 1000; ++k) {
    const double y = -50.0 + 100.0 * k / 999.0;
    CHECK(std::exp(log_mu(y) - std::fabs(y)) <= c * (1 + 1e-12));
  }
}
