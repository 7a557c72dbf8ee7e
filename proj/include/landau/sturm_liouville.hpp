#ifndef LANDAU_STURM_LIOUVILLE_HPP
#define LANDAU_STURM_LIOUVILLE_HPP

// Lowest Dirichlet eigenvalue of -(p f')' + q f = E f on (-L, L).
//
// Discretised with second-order central differences on a grid that is
// uniform in a stretched coordinate xi: either z = xi, or z = c sinh(xi)
// for problems with a narrow core and a long tail. In xi the problem reads
// -(P f_xi)_xi + Q f = E W f with P = p/J, Q = q J, W = J, J = dz/dxi.

#include <Eigen/Core>

#include <functional>
#include <vector>

#include "landau/tridiagonal.hpp"

namespace landau {

enum class GridMap { uniform, sinh };

struct SturmLiouvilleProblem {
  std::function<double(double)> p;
  std::function<double(double)> q;
  double L{1.0};
  int n{63};  ///< interior nodes on the coarsest grid; odd keeps z = 0 a node
  GridMap map{GridMap::uniform};
  double map_scale{1.0};  ///< c in z = c sinh(xi)

  /// Throws InputError unless n >= 16, L > 0 and both coefficients are set.
  void validate() const;
};

struct SolverOptions {
  bool extrapolate{true};
  bool grow_domain{false};
  double eigen_abs_tol{1e-10};
  double eigen_rel_tol{0.0};
  double extrapolation_tol{1e-8};
  double domain_tol{1e-9};
  double domain_growth{2.0};  ///< factor applied to L per growth step
  int max_levels{10};
  int min_levels{3};
  int max_domain_steps{16};
};

struct EigenResult {
  double value{0};
  double L{0};
  int n{0};  ///< interior nodes of the finest grid used
  bool extrapolated{false};
  double error_estimate{0};
  double raw_value{0};  ///< unextrapolated eigenvalue on the finest grid
  int levels{1};
};

/// Nodes and Jacobians of a discretisation of (-L, L). Node j (1..n) sits at
/// xi = (2j - n - 1) h/2, so grids with steps h and h/2 share nodes exactly.
struct Grid {
  double xi_max{0};
  double h{0};
  int n{0};
  Eigen::VectorXd xi, z, jac;              ///< at nodes 1..n
  Eigen::VectorXd xi_mid, z_mid, jac_mid;  ///< at the n+1 cell midpoints

  static Grid make(GridMap map, double scale, double h, int n);
};

/// Half-width in xi for a requested z half-width.
double xi_of_L(GridMap map, double scale, double L);
double L_of_xi(GridMap map, double scale, double xi);

/// Pencil A - E W from p at midpoints and q at nodes: couplings P/h^2 with
/// P = p/J, slacks q J (plus P/h^2 at the two ends), weights J.
/// Throws CoefficientError if some p_mid <= 0.
TridiagonalPencil<double> assemble(const Grid& grid, const Eigen::VectorXd& p_mid,
                                   const Eigen::VectorXd& q_node);

/// Pencil of the problem on a given grid.
TridiagonalPencil<double> assemble(const SturmLiouvilleProblem& problem, const Grid& grid);

/// Lowest eigenvalue with Richardson extrapolation over nested grids
/// (n -> 2n+1) and optional domain growth. Growth keeps the coarse step in xi
/// fixed so every grid is nested in the next, which makes the raw values
/// monotone in L. Throws NonConvergenceError (carrying the last two values)
/// when extrapolation or growth does not settle.
EigenResult lowest_eigenvalue(const SturmLiouvilleProblem& problem,
                              const SolverOptions& options = {});

/// Raw eigenvalues at n, 2n+1, 4n+3, ... on the fixed domain.
std::vector<EigenResult> convergence_study(const SturmLiouvilleProblem& problem, int refinements,
                                           const SolverOptions& options = {});

/// log2 of the ratio of the last two successive differences.
double observed_order(const std::vector<EigenResult>& study);

}  // namespace landau

#endif  // LANDAU_STURM_LIOUVILLE_HPP
