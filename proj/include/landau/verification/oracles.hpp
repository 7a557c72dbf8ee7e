#ifndef LANDAU_VERIFICATION_ORACLES_HPP
#define LANDAU_VERIFICATION_ORACLES_HPP

// Reference computations that share no code path with the solvers: closed
// forms, brute-force long-double integration, and dense eigensolves.

namespace landau::oracle {

/// exp(x^2) erfc(x) for x >= 0 in long double.
long double erfcx(long double x);

/// a_0^B(z) = sqrt(B) sqrt(pi/2) erfcx(sqrt(B) |z| / sqrt(2)).
double a0_closed_form(double B, double z);

/// a_l^B(z) through r = sqrt(s^2 + z^2) and the positive-term expansion
///   a_l^1(z) = 1/(2^l l!) sum_j C(l, j) (2|z|)^{l-j} M_{l+j}(|z|),
///   M_k(z) = int_0^inf x^k exp(-z x - x^2/2) dx,
/// with M_k by composite Simpson in long double.
double a_ell_moments(int ell, double B, double z);

/// Lowest root E of sqrt(E) sigma = arctan(sqrt((V0 - E) / E)), 0 < E < V0:
/// the ground state of the well 0 on (-sigma, sigma), V0 outside.
double step_well_ground_state(double sigma, double V0);

/// Root of 2 (nu + sqrt(nu)) = 2 - sqrt(2) from the quadratic in sqrt(nu).
double nu_bar_closed_form();

/// (2 pi)^{-3/2} sqrt(B) (8 pi / (3 nu) - 4 pi nu).
double gaussian_G_closed_form(double nu, double B);

/// 18 pi nu^2 / (3 nu^2 - 2)^2, rewritten as (3 sqrt(2 pi) nu / (3 nu^2 - 2))^2.
double gaussian_certificate_closed_form(double nu);

struct DenseOptions {
  int n{1001};          ///< interior nodes on the coarse grid (second grid: 2n+1)
  double L{0};          ///< 0 selects a generous default
  bool dense_compute{false};  ///< full dense solve instead of the tridiagonal QL
};

/// T(lambda) for ell = 0 from a finite-difference matrix on z = c sinh(xi)
/// with c = 2/sqrt(B), the closed-form potential, Eigen's symmetric QL solver
/// and one Richardson step. ell > 0 uses a_ell_moments.
double dense_T(double nu, double B, int ell, double lambda, const DenseOptions& options = {});

/// Fixed point of dense_T by the secant method (bisection safeguard), or -1
/// when dense_T(-1) <= -1.
double dense_ground_state(double nu, double B, int ell = 0, const DenseOptions& options = {});

}  // namespace landau::oracle

#endif  // LANDAU_VERIFICATION_ORACLES_HPP
