#ifndef LANDAU_UNITS_HPP
#define LANDAU_UNITS_HPP

// Nuclear charge, coupling and field conversions. Fields are dimensionless in
// units of m^2 c^2 / (|q| hbar).

namespace landau {

struct PhysicalConstants {
  double alpha{1.0 / 137.037};
  double B_unit_tesla{4.4e9};

  /// alpha^2 * B_unit_tesla, the atomic (non-relativistic) field unit.
  double nonrel_B_unit_tesla() const { return alpha * alpha * B_unit_tesla; }

  /// Throws InputError unless both constants are positive and finite.
  void validate() const;
};

/// nu = Z alpha; DomainError if Z < 1 or Z alpha >= 1.
double nu_of_Z(int Z, const PhysicalConstants& c = {});
double Z_of_nu(double nu, const PhysicalConstants& c = {});

double tesla_of_B(double B, const PhysicalConstants& c = {});
double B_of_tesla(double tesla, const PhysicalConstants& c = {});

/// log10 of the field in Tesla from the natural log of the dimensionless field.
double log10_tesla_of_log_B(double log_B, const PhysicalConstants& c = {});
double log_B_of_log10_tesla(double log10_tesla, const PhysicalConstants& c = {});

}  // namespace landau

#endif  // LANDAU_UNITS_HPP
