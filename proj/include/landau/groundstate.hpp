#ifndef LANDAU_GROUNDSTATE_HPP
#define LANDAU_GROUNDSTATE_HPP

// Lowest Landau-level ground state lambda_1^L(nu, B): the fixed point
// lambda = T(lambda), where T(lambda) is the lowest eigenvalue of
//
//   -( f' / (1 + lambda + nu a_l^B) )' + (1 - nu a_l^B) f = T f.

#include <vector>

#include "landau/potentials.hpp"
#include "landau/sturm_liouville.hpp"

namespace landau {

struct GroundStateOptions {
  double residual_tol{1e-10};
  double degenerate_tol{1e-9};
  double eigen_abs_tol{1e-13};
  double extrapolation_tol{1e-9};
  double domain_tol{1e-9};
  double L0{0};  ///< initial half-width; 0 selects max(c1/sqrt(B), c2/nu, c3/(1-lambda_est))
  double c1{20}, c2{30}, c3{10};
  double xi_step{0.04};  ///< coarse step in the sinh coordinate
  int min_coarse_n{0};   ///< lower limit on interior nodes of the coarsest grid
  int min_levels{3};
  int max_levels{9};
  int max_domain_steps{40};
  int max_iterations{200};
};

struct FixedPointResult {
  double lambda{0};
  int iterations{0};
  double residual{0};
  bool degenerate{false};
  double L{0};
  int n{0};
};

/// T(lambda) with diagnostics; lambda >= -1.
EigenResult T_eigen(const PotentialSpec& spec, double lambda, const GroundStateOptions& options = {});

double T_of_lambda(const PotentialSpec& spec, double lambda, const GroundStateOptions& options = {});

/// Root of T(lambda) - lambda on (-1, 1], or the degenerate result lambda = -1
/// when T(-1) + 1 <= degenerate_tol.
FixedPointResult ground_state_lambda(const PotentialSpec& spec,
                                     const GroundStateOptions& options = {});

/// One solve per ell in `ells` at the same nu and B.
std::vector<FixedPointResult> ground_state_per_ell(double nu, double B, const std::vector<int>& ells,
                                                   const GroundStateOptions& options = {});

/// lambda_L(delta, B) = 1 + inf (|f'|^2/(delta a_0^B) - delta a_0^B |f|^2) / |f|^2,
/// which equals T(-1) at nu = delta.
EigenResult landau_functional_minimum(double delta, double B, const GroundStateOptions& options = {});

}  // namespace landau

#endif  // LANDAU_GROUNDSTATE_HPP
