#ifndef LANDAU_CRITICAL_FIELD_HPP
#define LANDAU_CRITICAL_FIELD_HPP

// Critical field B_L(delta) at which the lowest Landau-level ground state
// reaches -1. Fields are carried as natural logs throughout.
//
// Two routes:
//  * direct: m(delta) = lambda_L(delta, 1) - 1 from the z-space problem and
//    the scaling lambda_L(delta, B) = 1 + sqrt(B) m(delta), so
//    sqrt(B_L) = 2 / |m(delta)|;
//  * Schrodinger form: with y = int_0^z a_0^1 and mu(y) = 1/a_0^1(z(y)), find
//    kappa such that the lowest eigenvalue E_1 of -g'' + kappa mu(y) g equals
//    delta^2; then sqrt(B_L) = 2 delta / kappa.

#include <optional>
#include <string>

#include "landau/groundstate.hpp"
#include "landau/sturm_liouville.hpp"
#include "landau/units.hpp"

namespace landau {

enum class CriticalMethod { direct_scaling, schrodinger_form, asymptotic };

std::string to_string(CriticalMethod method);

struct E1Bracket {
  double lower{0};
  double upper{0};
};

struct CriticalFieldResult {
  double delta{0};
  double log_BL{0};
  CriticalMethod method{CriticalMethod::asymptotic};
  std::optional<double> m_delta;    ///< direct method
  std::optional<double> log_kappa;  ///< Schrodinger form
  std::optional<double> e1;         ///< Schrodinger form, E_1 at the solution
  std::optional<E1Bracket> e1_bracket;
  int iterations{0};
  double L{0};  ///< half-width of the final domain (z for direct, y for Schrodinger)
  int n{0};
};

struct CriticalFieldOptions {
  double y_step{0.05};              ///< coarse step in y
  double y_margin{30.0};            ///< Y = |log kappa| + y_margin
  double e1_rel_tol{1e-12};         ///< |E_1 - delta^2| <= e1_rel_tol * delta^2
  double extrapolation_rel_tol{1e-10};
  double domain_rel_tol{1e-10};
  int min_levels{3};
  int max_levels{8};
  int max_iterations{200};
  GroundStateOptions direct{};  ///< z-space solver settings for m(delta)
};

inline constexpr double kMinDelta = 0.01;
inline constexpr double kMinDirectDelta = 0.15;
inline constexpr double kMaxSchrodingerDelta = 0.7;

/// lambda_L(delta, 1) - 1 (< 0) from the z-space problem.
double m_delta(double delta, const CriticalFieldOptions& options = {});

/// log B_L = 2 (log 2 - log|m(delta)|); DomainError unless 0.15 <= delta < 1.
CriticalFieldResult critical_field_direct(double delta, const CriticalFieldOptions& options = {});

/// Lowest eigenvalue of -g'' + exp(log_kappa + log mu(y)) g on (-Y, Y),
/// Y >= |log_kappa| + y_margin, stabilised by doubling Y.
EigenResult E1_of_kappa(double log_kappa, double delta_hint, const CriticalFieldOptions& options = {});

/// Step-potential lower bound and cosine-trial upper bound for E_1 at
/// sigma_delta = -log kappa. Requires log_kappa < 0.
E1Bracket bracket_E1(double delta, double log_kappa);

/// Solves E_1(kappa) = delta^2 for 0.01 <= delta <= 0.7.
CriticalFieldResult critical_field_schrodinger(double delta, const CriticalFieldOptions& options = {});

/// log B_L ~ log(4 delta^2) + pi / delta.
CriticalFieldResult critical_field_asymptotic(double delta);

struct HhhBounds {
  double lower{0};                      ///< 4 / (5 nu^2)
  std::optional<double> upper_gaussian; ///< 18 pi nu^2 / (3 nu^2 - 2)^2 when nu^2 > 2/3
};

HhhBounds hhh_bounds(double nu);

struct GapConstants {
  double nu_bar{0};  ///< root of 2 (nu + sqrt(nu)) = 2 - sqrt(2)
  double d(double delta) const;  ///< (1 - 2 delta) sqrt(2) - 2 delta
};

GapConstants gap_constants();

struct SandwichBracket {
  double nu{0};
  double delta_minus{0};  ///< nu - nu^{3/2}
  double delta_plus{0};   ///< nu + nu^{3/2}
  double lower_logB{0};   ///< log B_L(delta_plus)
  double upper_logB{0};   ///< log B_L(delta_minus)
  double analytic_lower{0};
  std::optional<double> analytic_upper_gaussian;
  double lower_log10_tesla{0};
  double upper_log10_tesla{0};
  double analytic_lower_tesla{0};
  std::optional<double> analytic_upper_gaussian_tesla;
  CriticalFieldResult lower_solve, upper_solve;
};

/// DomainError unless 0 < nu < nu_bar.
SandwichBracket sandwich(double nu, const PhysicalConstants& constants = {},
                         const CriticalFieldOptions& options = {});

}  // namespace landau

#endif  // LANDAU_CRITICAL_FIELD_HPP
