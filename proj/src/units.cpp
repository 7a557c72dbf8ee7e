#include "landau/units.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "landau/errors.hpp"

namespace landau {

void PhysicalConstants::validate() const {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw InputError("alpha must be positive and finite");
  if (!(B_unit_tesla > 0.0) || !std::isfinite(B_unit_tesla)) {
    throw InputError("Tesla unit must be positive and finite");
  }
}

double nu_of_Z(int Z, const PhysicalConstants& c) {
  c.validate();
  if (Z < 1) throw DomainError("Z must be a positive integer, got " + std::to_string(Z));
  const double nu = Z * c.alpha;
  if (nu >= 1.0) {
    throw DomainError("Z alpha = " + std::to_string(nu) +
                      " >= 1: the Coulomb-Dirac operator is not self-adjoint there");
  }
  return nu;
}

double Z_of_nu(double nu, const PhysicalConstants& c) {
  c.validate();
  if (!(nu > 0.0 && nu < 1.0)) throw DomainError("nu must lie in (0, 1)");
  return nu / c.alpha;
}

double tesla_of_B(double B, const PhysicalConstants& c) {
  c.validate();
  if (!(B > 0.0)) throw InputError("field must be positive");
  return B * c.B_unit_tesla;
}

double B_of_tesla(double tesla, const PhysicalConstants& c) {
  c.validate();
  if (!(tesla > 0.0)) throw InputError("field must be positive");
  return tesla / c.B_unit_tesla;
}

double log10_tesla_of_log_B(double log_B, const PhysicalConstants& c) {
  c.validate();
  if (!std::isfinite(log_B)) throw InputError("log B must be finite");
  return log_B / std::numbers::ln10 + std::log10(c.B_unit_tesla);
}

double log_B_of_log10_tesla(double log10_tesla, const PhysicalConstants& c) {
  c.validate();
  if (!std::isfinite(log10_tesla)) throw InputError("log10 Tesla must be finite");
  return (log10_tesla - std::log10(c.B_unit_tesla)) * std::numbers::ln10;
}

}  // namespace landau
