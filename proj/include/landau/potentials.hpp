#ifndef LANDAU_POTENTIALS_HPP
#define LANDAU_POTENTIALS_HPP

// Coulomb potential averaged over a transverse Landau zero mode,
//
//   a_l^B(z) = B^{l+1} / (2^l l!) * int_0^inf s^{2l+1} exp(-B s^2/2) / sqrt(s^2 + z^2) ds,
//
// and the logarithmic coordinate y(z) = int_0^z a_0^1(t) dt with weight
// mu(y) = 1 / a_0^1(z(y)).

namespace landau {

/// Coupling nu = Z alpha, dimensionless field B and Landau index ell.
struct PotentialSpec {
  double nu{0.5};
  double B{1.0};
  int ell{0};

  /// Throws InputError unless 0 < nu < 1, B > 0 (finite) and ell >= 0.
  void validate() const;
};

enum class Regime { quadrature, asymptotic };

struct PotentialEvaluation {
  double z{0};
  double value{0};
  Regime regime{Regime::quadrature};
};

/// Scaled radius sqrt(B)|z| beyond which the large-|z| series replaces
/// quadrature (for ell <= 5; grows slowly with ell above that).
inline constexpr double kAsymptoticRadius = 30.0;

double asymptotic_radius(int ell);

/// a_l^B(z) with relative error below 1e-10.
PotentialEvaluation a_ell(const PotentialSpec& spec, double z);

/// Value-only form of a_ell; no spec validation beyond finiteness.
double landau_coulomb(int ell, double B, double z);

/// Mean radius sqrt(s^2 + z^2) under the same transverse density,
///   b_l^B(z) = B^{l+1} / (2^l l!) * int_0^inf s^{2l+1} exp(-B s^2/2) sqrt(s^2 + z^2) ds.
double landau_radius(int ell, double B, double z);

/// Large-|z| series alone (any |z| > 0); exposed for regime-agreement checks.
double landau_coulomb_series(int ell, double B, double z);

/// Quadrature alone (any finite z); exposed for regime-agreement checks.
double landau_coulomb_quadrature(int ell, double B, double z);

/// |a_0^B(z) - sqrt(B) a_0^1(sqrt(B) z)| / a_0^B(z), both sides evaluated
/// independently.
double scaling_check(double B, double z);

struct VariableMap {
  double z{0};
  double y{0};
  double mu_at_y{0};  ///< 1 / a_0^1(z); +inf if it overflows
  double log_z{0};    ///< log|z|, finite even where z itself would overflow
  double log_mu{0};
};

/// y(z) = int_0^z a_0^1(t) dt (odd, increasing).
VariableMap y_of_z(double z);

/// Inverse of y_of_z. Supports |y| well beyond 400: in the far field z is
/// carried through its logarithm.
VariableMap z_of_y(double y);

/// log mu(y); cheaper than z_of_y when only the weight is needed.
double log_mu(double y);

/// y(z) - log z as z -> inf.
double far_field_offset();

/// c = sup_y mu(y) exp(-|y|), so that mu(y) <= c exp(|y|). Computed once.
double mu_bound_constant();

}  // namespace landau

#endif  // LANDAU_POTENTIALS_HPP
