#include "doctest.h"

#include <cmath>

#include "landau/critical_field.hpp"
#include "landau/errors.hpp"
#include "landau/groundstate.hpp"
#include "landau/verification/oracles.hpp"

using namespace landau;

TEST_CASE("T(lambda) against the dense oracle") {
  const PotentialSpec spec{0.5, 1.0, 0};
  CHECK(std::fabs(T_of_lambda(spec, 0.0) - oracle::dense_T(0.5, 1.0, 0, 0.0)) < 1e-6);
  CHECK(T_of_lambda(spec, 0.5) <= T_of_lambda(spec, -0.5));
}

TEST_CASE("dense oracle: tridiagonal QL and full dense solve agree") {
  oracle::DenseOptions o;
  o.n = 201;
  const double ql = oracle::dense_T(0.5, 1.0, 0, 0.2, o);
  o.dense_compute = true;
  CHECK(oracle::dense_T(0.5, 1.0, 0, 0.2, o) == doctest::Approx(ql).epsilon(1e-10));
}

TEST_CASE("weak coupling drives T and lambda to 1") {
  for (double lambda : {-0.9, 0.0, 0.9}) {
    CHECK(T_of_lambda(PotentialSpec{1e-4, 1.0, 0}, lambda) > 0.999);
  }
  const FixedPointResult r = ground_state_lambda(PotentialSpec{0.05, 0.5, 0});
  CHECK(r.lambda > 0.9);
  CHECK(r.lambda < 1.0);
  for (const auto& x : ground_state_per_ell(1e-3, 1.0, {0, 1, 2})) CHECK(x.lambda > 0.999);
}

TEST_CASE("fixed point: residual, range, grid robustness") {
  const PotentialSpec spec{0.5, 1.0, 0};
  GroundStateOptions o;
  const FixedPointResult r = ground_state_lambda(spec, o);
  CHECK_FALSE(r.degenerate);
  CHECK(r.residual <= o.residual_tol);
  CHECK(r.lambda > -1);
  CHECK(r.lambda < 1);
  CHECK(std::fabs(T_of_lambda(spec, r.lambda) - r.lambda) < 1e-8);

  GroundStateOptions finer = o;
  finer.xi_step = o.xi_step / 2;
  finer.c1 *= 2;
  finer.c2 *= 2;
  finer.c3 *= 2;
  CHECK(std::fabs(ground_state_lambda(spec, finer).lambda - r.lambda) < 1e-6);
}

TEST_CASE("degenerate case") {
  const FixedPointResult r = ground_state_lambda(PotentialSpec{0.5, 1e9, 0});
  CHECK(r.degenerate);
  CHECK(r.lambda == -1.0);
}

TEST_CASE("self-consistency with the critical field") {
  const double logB = critical_field_direct(0.5).log_BL;
  CHECK(std::fabs(ground_state_lambda(PotentialSpec{0.5, std::exp(logB), 0}).lambda + 1) < 1e-3);
}

TEST_CASE("monotone in B and in nu") {
  double previous = 1.0;
  for (double B : {0.3, 1.0, 3.0, 10.0, 30.0}) {
    const double l = ground_state_lambda(PotentialSpec{0.5, B, 0}).lambda;
    CHECK(l <= previous);
    previous = l;
  }
  previous = 1.0;
  for (double nu : {0.05, 0.2, 0.35, 0.5, 0.65}) {
    const double l = ground_state_lambda(PotentialSpec{nu, 2.0, 0}).lambda;
    CHECK(l <= previous);
    previous = l;
  }
}

TEST_CASE("ordering in ell") {
  const auto r = ground_state_per_ell(0.5, 1.0, {0, 1, 2});
  REQUIRE(r.size() == 3);
  CHECK(r[0].lambda <= r[1].lambda);
  CHECK(r[1].lambda <= r[2].lambda);

  oracle::DenseOptions o;
  o.n = 401;
  const auto s = ground_state_per_ell(0.3, 5.0, {0, 1});
  const double d0 = oracle::dense_ground_state(0.3, 5.0, 0, o);
  const double d1 = oracle::dense_ground_state(0.3, 5.0, 1, o);
  CHECK(std::fabs(s[0].lambda - d0) < 1e-5);
  CHECK(std::fabs(s[1].lambda - d1) < 1e-5);
  CHECK(s[0].lambda <= s[1].lambda);
}

TEST_CASE("scaling law of the Landau functional") {
  const double m = landau_functional_minimum(0.5, 1.0).value - 1;
  for (double B : {4.0, 25.0}) {
    CHECK(std::fabs(landau_functional_minimum(0.5, B).value - 1 - std::sqrt(B) * m) < 1e-4);
  }
}

TEST_CASE("invalid input") {
  CHECK_THROWS_AS(ground_state_lambda(PotentialSpec{1.2, 1.0, 0}), InputError);
  CHECK_THROWS_AS(T_of_lambda(PotentialSpec{0.5, 1.0, 0}, -1.5), InputError);
}
