#ifndef LANDAU_TRIAL_BOUNDS_HPP
#define LANDAU_TRIAL_BOUNDS_HPP

// The functional G_B on transverse zero modes phi = phi_l(x1, x2) (f(z), 0):
//
//   G_B[phi] = int ( r/nu |P_B phi|^2 - nu/r |phi|^2 ) d^3x
//            = int ( |f'(z)|^2 b_l^B(z) / nu - nu |f(z)|^2 a_l^B(z) ) dz,
//
// with a_l^B the averaged Coulomb potential and b_l^B the averaged radius.
// G_B[phi] + 2 |phi|^2 <= 0 certifies that the field B is supercritical.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

namespace landau {

enum class ProfileFamily { gaussian, plateau, hermite, tabulated };

std::string to_string(ProfileFamily family);

/// Longitudinal profile f. All families are closed under the zero-mode
/// rescaling f -> B^{1/4} f(sqrt(B) z).
class Profile {
 public:
  /// (2 pi w^2)^{-1/4} exp(-z^2 / (4 w^2)), unit norm.
  static Profile gaussian(double width);
  /// 1 on |z| <= D, C^2 quintic ramp to 0 over D < |z| < D + w.
  static Profile plateau(double half_width, double ramp);
  /// sum_j c_j psi_j(z / s) with Hermite functions psi_j.
  static Profile hermite(std::vector<double> coefficients, double scale);
  /// Cubic Hermite interpolation with Catmull-Rom slopes, zero outside.
  static Profile tabulated(std::vector<double> z, std::vector<double> f);

  double value(double z) const;
  double derivative(double z) const;
  /// Breakpoints covering the support; f is negligible outside.
  std::vector<double> knots() const;
  Profile rescaled(double B) const;
  Profile scaled(double factor) const;  ///< factor * f
  ProfileFamily family() const;

 private:
  struct Gaussian {
    double width;
  };
  struct Plateau {
    double half_width, ramp;
  };
  struct Hermite {
    std::vector<double> c;
    double scale;
  };
  struct Tabulated {
    std::vector<double> z, f, slope;
  };

  // f(z) = amplitude * shape(z / stretch)
  std::variant<Gaussian, Plateau, Hermite, Tabulated> shape_{Gaussian{1.0}};
  double amplitude_{1.0};
  double stretch_{1.0};

  double shape_value(double x) const;
  double shape_derivative(double x) const;
};

struct TrialState {
  int ell{0};
  Profile f;
};

struct TrialEvaluation {
  double G_B{0};
  double kinetic{0};    ///< int |f'|^2 b_l^B
  double potential{0};  ///< int |f|^2 a_l^B
  double norm_squared{0};
  double J_at_minus1{0};  ///< G_B + 2 norm_squared
  bool certified{false};  ///< J_at_minus1 <= 0
};

/// The field in units where the full state has norm^2 = int |f|^2. Relative
/// accuracy 1e-9 on each of the two parts.
TrialEvaluation evaluate_GB(double nu, double B, const TrialState& trial);

/// The isotropic Gaussian zero mode, f = (B / 2 pi)^{1/4} exp(-B z^2 / 4).
Profile isotropic_gaussian(double B);

/// Plateau of half-width D with the default ramp 0.5 D, normalised.
Profile unit_plateau(double half_width);

struct Certificate {
  ProfileFamily family{ProfileFamily::gaussian};
  double m_star{0};  ///< min G_1 / |phi|^2 over the family
  std::optional<double> parameter;  ///< plateau half-width at the minimum
  std::optional<double> log_B_cert; ///< 2 log(2 / |m_star|) when m_star < 0
};

/// Minimises G_1 / |phi|^2 over the family; since G_B = sqrt(B) G_1 for the
/// rescaled state, any m_star < 0 gives B(nu) <= 4 / m_star^2.
Certificate certify_critical_upper_bound(double nu, ProfileFamily family);

struct Sqrt5Report {
  double worst_ratio{0};
  double bound{0};  ///< -nu sqrt(5)
  int worst_ell{0};
  int samples{0};
};

/// Random zero-mode trials (ell in {0..3}, 8 Hermite functions with
/// standard-normal coefficients, log-uniform scale in [0.3, 3]) and the
/// smallest G_1 / |phi|^2 among them.
Sqrt5Report check_sqrt5_inequality(double nu, int samples, std::uint64_t seed);

/// Draws one random profile as check_sqrt5_inequality does.
TrialState random_trial(std::mt19937_64& rng);

}  // namespace landau

#endif  // LANDAU_TRIAL_BOUNDS_HPP
