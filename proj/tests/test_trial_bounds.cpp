#include "doctest.h"

#include <cmath>
#include <random>

#include "landau/errors.hpp"
#include "landau/trial_bounds.hpp"
#include "landau/verification/oracles.hpp"

using namespace landau;

TEST_CASE("Gaussian trial closed form") {
  for (auto [nu, B] : {std::pair{0.85, 10.0}, {0.9, 100.0}, {0.95, 3.0}, {0.3, 0.2}}) {
    const TrialEvaluation e = evaluate_GB(nu, B, TrialState{0, isotropic_gaussian(B)});
    CHECK(e.G_B == doctest::Approx(oracle::gaussian_G_closed_form(nu, B)).epsilon(1e-8));
    CHECK(e.norm_squared == doctest::Approx(1.0).epsilon(1e-12));
  }
  const double root = std::sqrt(2.0 / 3.0);
  CHECK(std::fabs(evaluate_GB(root, 1.0, TrialState{0, isotropic_gaussian(1.0)}).G_B) < 1e-8);
}

TEST_CASE("J at -1 and the certification flag") {
  const TrialEvaluation e = evaluate_GB(0.9, 400.0, TrialState{0, isotropic_gaussian(400.0)});
  CHECK(e.J_at_minus1 == e.G_B + 2 * e.norm_squared);
  CHECK(e.certified == (e.J_at_minus1 <= 0));
  CHECK(e.certified);
  CHECK_FALSE(evaluate_GB(0.9, 100.0, TrialState{0, isotropic_gaussian(100.0)}).certified);
}

TEST_CASE("rescaling gives sqrt(B) G_1") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 6; ++i) {
    const TrialState t = random_trial(rng);
    for (double B : {0.3, 7.0, 150.0}) {
      const double g1 = evaluate_GB(0.6, 1.0, t).G_B;
      const double gB = evaluate_GB(0.6, B, TrialState{t.ell, t.f.rescaled(B)}).G_B;
      CHECK(gB == doctest::Approx(std::sqrt(B) * g1).epsilon(1e-8));
    }
  }
  const Profile p = unit_plateau(2.0);
  const double g1 = evaluate_GB(0.4, 1.0, TrialState{1, p}).G_B;
  CHECK(evaluate_GB(0.4, 9.0, TrialState{1, p.rescaled(9.0)}).G_B == doctest::Approx(3 * g1).epsilon(1e-8));
}

TEST_CASE("tabulated profile reproduces a smooth profile") {
  std::vector<double> z, f;
  for (int i = -400; i <= 400; ++i) {
    z.push_back(i * 0.02);
    f.push_back(std::exp(-z.back() * z.back() / 4));
  }
  const Profile tab = Profile::tabulated(z, f);
  const Profile g = Profile::gaussian(1.0).scaled(std::pow(2 * std::acos(-1.0), 0.25));
  const double a = evaluate_GB(0.5, 1.0, TrialState{0, tab}).G_B;
  const double b = evaluate_GB(0.5, 1.0, TrialState{0, g}).G_B;
  CHECK(a == doctest::Approx(b).epsilon(1e-5));
  CHECK(tab.family() == ProfileFamily::tabulated);
}

TEST_CASE("certificates") {
  const Certificate g = certify_critical_upper_bound(0.9, ProfileFamily::gaussian);
  REQUIRE(g.log_B_cert);
  CHECK(std::exp(*g.log_B_cert) == doctest::Approx(oracle::gaussian_certificate_closed_form(0.9)).epsilon(1e-3));
  CHECK_FALSE(certify_critical_upper_bound(0.5, ProfileFamily::gaussian).log_B_cert);

  const Certificate p = certify_critical_upper_bound(0.5, ProfileFamily::plateau);
  REQUIRE(p.log_B_cert);
  CHECK(std::isfinite(*p.log_B_cert));
  CHECK(*p.log_B_cert >= std::log(4 / (5 * 0.25)));
  CHECK(*g.log_B_cert >= std::log(4 / (5 * 0.81)));
  CHECK_THROWS_AS(certify_critical_upper_bound(0.5, ProfileFamily::hermite), InputError);
}

TEST_CASE("plateau: G_B decays linearly in log B") {
  const Profile f = unit_plateau(0.1);
  std::vector<double> slopes;
  double previous = 0;
  for (int k = 0; k <= 4; ++k) {
    const double logB = 8.0 + 4.0 * k;
    const double B = std::exp(logB);
    const double G = evaluate_GB(0.5, B, TrialState{0, f}).G_B;
    if (k > 0) slopes.push_back((G - previous) / 4.0);
    previous = G;
  }
  for (double s : slopes) CHECK(s < 0);
  CHECK(std::fabs(slopes[3] - slopes[2]) < std::fabs(slopes[1] - slopes[0]) + 1e-12);
}

TEST_CASE("sqrt(5) inequality on random trials") {
  for (double nu : {0.3, 0.7}) {
    const Sqrt5Report r = check_sqrt5_inequality(nu, 15, 42);
    CHECK(r.samples == 15);
    CHECK(r.bound == doctest::Approx(-nu * std::sqrt(5.0)));
    CHECK(r.worst_ratio >= r.bound - 1e-8);
  }
  const Sqrt5Report a = check_sqrt5_inequality(0.5, 5, 3);
  const Sqrt5Report b = check_sqrt5_inequality(0.5, 5, 3);
  CHECK(a.worst_ratio == b.worst_ratio);
  CHECK(a.worst_ell == b.worst_ell);
}

TEST_CASE("weak coupling makes the ratio blow up like 1/nu") {
  std::mt19937_64 rng(1);
  const TrialState t = random_trial(rng);
  const double r1 = evaluate_GB(0.01, 1.0, t).G_B;
  const double r2 = evaluate_GB(0.001, 1.0, t).G_B;
  CHECK(r2 > 9 * r1);
  CHECK(r1 > 0);
}
