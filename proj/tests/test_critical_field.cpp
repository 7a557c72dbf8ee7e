#include "doctest.h"

#include <cmath>

#include "landau/critical_field.hpp"
#include "landau/errors.hpp"
#include "landau/verification/oracles.hpp"

using namespace landau;

namespace {
const double kPi = std::acos(-1.0);
}

TEST_CASE("m(delta)") {
  for (double delta : {0.2, 0.5, 0.8}) {
    const double m = m_delta(delta);
    CHECK(m < 0);
    CHECK(-delta * m > 0);
  }
  const double dense = oracle::dense_T(0.5, 1.0, 0, -1.0) - 1;
  CHECK(std::fabs(m_delta(0.5) - dense) < 1e-5);
}

TEST_CASE("direct and Schrodinger routes agree") {
  for (double delta : {0.3, 0.5, 0.7}) {
    const double a = critical_field_direct(delta).log_BL;
    const CriticalFieldResult b = critical_field_schrodinger(delta);
    CHECK(std::fabs(a - b.log_BL) / std::fabs(a) < 1e-3);
    REQUIRE(b.e1_bracket);
    CHECK(b.e1_bracket->lower <= *b.e1);
    CHECK(*b.e1 <= b.e1_bracket->upper);
  }
}

TEST_CASE("E_1 as a function of kappa") {
  const double e_small = E1_of_kappa(-4.0, 0.3).value;
  const double e_mid = E1_of_kappa(-2.0, 0.3).value;
  const double e_big = E1_of_kappa(0.0, 0.3).value;
  CHECK(0 < e_small);
  CHECK(e_small < e_mid);
  CHECK(e_mid < e_big);

  // As kappa -> 0 the well widens to |y| ~ -log kappa and E_1 approaches the
  // free level pi^2 / (4 sigma^2).
  const double e100 = E1_of_kappa(-100.0, 0.05).value;
  const double e300 = E1_of_kappa(-300.0, 0.02).value;
  CHECK(e300 < e100);
  CHECK(e300 == doctest::Approx(kPi * kPi / (4 * 300.0 * 300.0)).epsilon(0.1));
}

TEST_CASE("E_1 bracket at delta = 0.05") {
  const CriticalFieldResult r = critical_field_schrodinger(0.05);
  const E1Bracket b = bracket_E1(0.05, *r.log_kappa);
  CHECK(b.lower <= b.upper);
  CHECK(b.lower <= *r.e1);
  CHECK(*r.e1 <= b.upper);
  const double sigma = -*r.log_kappa;
  const double leading = kPi * kPi / (4 * sigma * sigma);
  CHECK(b.upper / leading == doctest::Approx(1.0).epsilon(0.5));
  CHECK(b.lower / leading == doctest::Approx(1.0).epsilon(0.5));
}

TEST_CASE("asymptotic regime") {
  const CriticalFieldResult r = critical_field_schrodinger(0.02);
  const double ratio = -2 * 0.02 / kPi * *r.log_kappa;
  CHECK(ratio >= 0.8);
  CHECK(ratio <= 1.2);

  double previous = INFINITY;
  for (double delta : {0.1, 0.05, 0.02}) {
    const double gap = std::fabs(delta * critical_field_schrodinger(delta).log_BL - kPi);
    CHECK(gap < previous);
    previous = gap;
  }
  CHECK(critical_field_asymptotic(0.1).log_BL == doctest::Approx(std::log(0.04) + 10 * kPi));
}

TEST_CASE("B_L strictly decreasing in delta") {
  double previous = INFINITY;
  for (double delta : {0.08, 0.15, 0.3, 0.45, 0.6}) {
    const double logB = critical_field_schrodinger(delta).log_BL;
    CHECK(std::isfinite(logB));
    CHECK(logB < previous);
    previous = logB;
  }
}

TEST_CASE("analytic bounds") {
  const HhhBounds z40 = hhh_bounds(40 / 137.037);
  CHECK(z40.lower == doctest::Approx(9.389).epsilon(1e-3));
  CHECK_FALSE(z40.upper_gaussian);
  CHECK(hhh_bounds(92 / 137.037).lower == doctest::Approx(1.775).epsilon(1e-3));
  const HhhBounds b = hhh_bounds(0.9);
  REQUIRE(b.upper_gaussian);
  CHECK(*b.upper_gaussian == doctest::Approx(oracle::gaussian_certificate_closed_form(0.9)).epsilon(1e-14));
  CHECK(*b.upper_gaussian == doctest::Approx(247.7).epsilon(1e-3));
}

TEST_CASE("gap constants") {
  const GapConstants g = gap_constants();
  CHECK(g.d(0.0) == std::sqrt(2.0));
  CHECK(std::fabs(g.d(1 - std::sqrt(2.0) / 2)) < 1e-15);
  CHECK(g.nu_bar > 0.05);
  CHECK(g.nu_bar < 0.06);
  CHECK(g.nu_bar == doctest::Approx(oracle::nu_bar_closed_form()).epsilon(1e-12));
}

TEST_CASE("sandwich") {
  const SandwichBracket s = sandwich(0.04);
  CHECK(s.lower_logB <= s.upper_logB);
  CHECK(std::log(s.analytic_lower) <= s.upper_logB);
  CHECK(s.lower_log10_tesla <= s.upper_log10_tesla);
  CHECK_THROWS_AS(sandwich(0.1), DomainError);
}

TEST_CASE("supported ranges") {
  CHECK_THROWS_AS(critical_field_direct(0.1), DomainError);
  CHECK_THROWS_AS(critical_field_schrodinger(0.005), DomainError);
  CHECK_THROWS_AS(critical_field_schrodinger(0.8), DomainError);
  CHECK_THROWS_AS(hhh_bounds(1.0), DomainError);
}
