#include "landau/sturm_liouville.hpp"

#include <cmath>
#include <string>

#include "landau/errors.hpp"

namespace landau {

void SturmLiouvilleProblem::validate() const {
  if (!p || !q) throw InputError("Sturm-Liouville problem: p and q must be set");
  if (!(L > 0.0) || !std::isfinite(L)) throw InputError("Sturm-Liouville problem: L must be positive");
  if (n < 16) throw InputError("Sturm-Liouville problem: n must be at least 16");
  if (map == GridMap::sinh && !(map_scale > 0.0)) {
    throw InputError("Sturm-Liouville problem: map scale must be positive");
  }
}

double xi_of_L(GridMap map, double scale, double L) {
  return map == GridMap::uniform ? L : std::asinh(L / scale);
}

double L_of_xi(GridMap map, double scale, double xi) {
  return map == GridMap::uniform ? xi : scale * std::sinh(xi);
}

Grid Grid::make(GridMap map, double scale, double h, int n) {
  Grid g;
  g.h = h;
  g.n = n;
  g.xi_max = 0.5 * h * (n + 1);
  g.xi.resize(n);
  g.z.resize(n);
  g.jac.resize(n);
  g.xi_mid.resize(n + 1);
  g.z_mid.resize(n + 1);
  g.jac_mid.resize(n + 1);
  const double half = 0.5 * h;
  auto fill = [&](double xi, double& z, double& j) {
    if (map == GridMap::uniform) {
      z = xi;
      j = 1.0;
    } else {
      z = scale * std::sinh(xi);
      j = scale * std::cosh(xi);
    }
  };
  for (int i = 0; i < n; ++i) {
    g.xi(i) = (2 * i + 1 - n) * half;
    fill(g.xi(i), g.z(i), g.jac(i));
  }
  for (int i = 0; i <= n; ++i) {
    g.xi_mid(i) = (2 * i - n) * half;
    fill(g.xi_mid(i), g.z_mid(i), g.jac_mid(i));
  }
  return g;
}

TridiagonalPencil<double> assemble(const Grid& grid, const Eigen::VectorXd& p_mid,
                                   const Eigen::VectorXd& q_node) {
  const int n = grid.n;
  for (int i = 0; i <= n; ++i) {
    if (!(p_mid(i) > 0.0) || !std::isfinite(p_mid(i))) {
      throw CoefficientError("Sturm-Liouville: p is not positive at z = " +
                             std::to_string(grid.z_mid(i)));
    }
  }
  const double inv_h2 = 1.0 / (grid.h * grid.h);
  TridiagonalPencil<double> t;
  t.coupling = p_mid.segment(1, n - 1).cwiseQuotient(grid.jac_mid.segment(1, n - 1)) * inv_h2;
  t.slack = q_node.cwiseProduct(grid.jac);
  t.slack(0) += p_mid(0) / grid.jac_mid(0) * inv_h2;
  t.slack(n - 1) += p_mid(n) / grid.jac_mid(n) * inv_h2;
  t.weight = grid.jac;
  return t;
}

TridiagonalPencil<double> assemble(const SturmLiouvilleProblem& problem, const Grid& grid) {
  Eigen::VectorXd p_mid(grid.n + 1), q_node(grid.n);
  for (int i = 0; i <= grid.n; ++i) p_mid(i) = problem.p(grid.z_mid(i));
  for (int i = 0; i < grid.n; ++i) q_node(i) = problem.q(grid.z(i));
  return assemble(grid, p_mid, q_node);
}

namespace {

double raw_eigenvalue(const SturmLiouvilleProblem& problem, double h, int n,
                      const SolverOptions& options) {
  const Grid grid = Grid::make(problem.map, problem.map_scale, h, n);
  return lowest_eigenvalue(assemble(problem, grid), options.eigen_abs_tol, options.eigen_rel_tol);
}

EigenResult solve_fixed_domain(const SturmLiouvilleProblem& problem, double h0, int n0,
                               const SolverOptions& options) {
  EigenResult r;
  r.L = L_of_xi(problem.map, problem.map_scale, 0.5 * h0 * (n0 + 1));
  int n = n0;
  double h = h0;
  double e_prev = raw_eigenvalue(problem, h, n, options);
  r.value = r.raw_value = e_prev;
  r.n = n;
  if (!options.extrapolate) return r;

  double r_prev = std::nan("");
  for (int level = 2; level <= options.max_levels; ++level) {
    n = 2 * n + 1;
    h *= 0.5;
    const double e = raw_eigenvalue(problem, h, n, options);
    const double rich = (4.0 * e - e_prev) / 3.0;
    r.value = rich;
    r.raw_value = e;
    r.n = n;
    r.levels = level;
    r.extrapolated = true;
    if (!std::isnan(r_prev)) {
      r.error_estimate = std::abs(rich - r_prev);
      if (level >= options.min_levels && r.error_estimate < options.extrapolation_tol) return r;
    } else {
      r.error_estimate = std::abs(e - e_prev);
    }
    e_prev = e;
    r_prev = rich;
  }
  throw NonConvergenceError("Sturm-Liouville: Richardson extrapolation did not settle after " +
                                std::to_string(options.max_levels) + " levels",
                            r_prev, r.value);
}

}  // namespace

EigenResult lowest_eigenvalue(const SturmLiouvilleProblem& problem, const SolverOptions& options) {
  problem.validate();
  double xi = xi_of_L(problem.map, problem.map_scale, problem.L);
  int n = problem.n;
  const double h0 = 2.0 * xi / (n + 1);
  EigenResult current = solve_fixed_domain(problem, h0, n, options);
  if (!options.grow_domain) return current;

  for (int step = 0; step < options.max_domain_steps; ++step) {
    const double L_next = options.domain_growth * L_of_xi(problem.map, problem.map_scale, xi);
    const double xi_target = xi_of_L(problem.map, problem.map_scale, L_next);
    const int m = std::max(1, static_cast<int>(std::ceil((xi_target - xi) / h0 - 1e-9)));
    xi += m * h0;
    n += 2 * m;
    EigenResult next = solve_fixed_domain(problem, h0, n, options);
    const double shift = std::abs(next.value - current.value);
    next.error_estimate = std::max(next.error_estimate, shift);
    if (shift < options.domain_tol) return next;
    current = next;
  }
  throw NonConvergenceError("Sturm-Liouville: domain growth did not settle within " +
                                std::to_string(options.max_domain_steps) + " steps",
                            current.value, current.value);
}

std::vector<EigenResult> convergence_study(const SturmLiouvilleProblem& problem, int refinements,
                                           const SolverOptions& options) {
  problem.validate();
  if (refinements < 2) throw InputError("convergence_study: refinements must be at least 2");
  double h = 2.0 * xi_of_L(problem.map, problem.map_scale, problem.L) / (problem.n + 1);
  std::vector<EigenResult> out;
  int n = problem.n;
  for (int k = 0; k < refinements; ++k) {
    EigenResult r;
    r.value = r.raw_value = raw_eigenvalue(problem, h, n, options);
    r.L = problem.L;
    r.n = n;
    if (!out.empty()) r.error_estimate = std::abs(r.value - out.back().value);
    out.push_back(r);
    n = 2 * n + 1;
    h *= 0.5;
  }
  return out;
}

double observed_order(const std::vector<EigenResult>& study) {
  if (study.size() < 3) throw InputError("observed_order: need at least three refinements");
  const std::size_t k = study.size();
  const double d1 = study[k - 2].value - study[k - 3].value;
  const double d2 = study[k - 1].value - study[k - 2].value;
  return std::log2(std::abs(d1 / d2));
}

}  // namespace landau
