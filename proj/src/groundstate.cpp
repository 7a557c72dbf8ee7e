#include "landau/groundstate.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_map>

#include "landau/errors.hpp"
#include "landau/roots.hpp"

namespace landau {

namespace {

constexpr double kNearEdge = 1e-3;
constexpr double kEigenRelTol = 1e-15;

// The operator for fixed (spec, grid): a_l^B is sampled once per node and
// kept across lambda evaluations, level refinements and domain growth
// (grids are nested, so most samples are reused).
class Discretization {
 public:
  Discretization(const PotentialSpec& spec, const GroundStateOptions& options, double L)
      : spec_(spec), options_(options), scale_(1.0 / std::sqrt(spec.B)) {
    const double xi = xi_of_L(GridMap::sinh, scale_, L);
    const int half = std::max({8, static_cast<int>(std::ceil(xi / options.xi_step)), (options.min_coarse_n + 1) / 2});
    h0_ = xi / half;
    n0_ = 2 * half - 1;
    levels_ = options.min_levels;
    build();
  }

  double L() const { return L_of_xi(GridMap::sinh, scale_, 0.5 * h0_ * (n0_ + 1)); }
  int finest_n() const { return grids_.back().n; }

  EigenResult evaluate(double lambda) const {
    const double nu = spec_.nu;
    std::vector<double> raw(levels_);
    for (int k = 0; k < levels_; ++k) {
      const Grid& g = grids_[k];
      Eigen::VectorXd p_mid = (1.0 + lambda + nu * a_mid_[k].array()).inverse().matrix();
      Eigen::VectorXd q = (1.0 - nu * a_node_[k].array()).matrix();
      raw[k] = lowest_eigenvalue(assemble(g, p_mid, q), options_.eigen_abs_tol, kEigenRelTol);
    }
    EigenResult r;
    r.L = L();
    r.n = finest_n();
    r.levels = levels_;
    r.raw_value = raw.back();
    r.extrapolated = levels_ >= 2;
    if (levels_ == 1) {
      r.value = raw[0];
      return r;
    }
    auto rich = [&](int k) { return (4.0 * raw[k] - raw[k - 1]) / 3.0; };
    r.value = rich(levels_ - 1);
    r.error_estimate = levels_ >= 3 ? std::abs(r.value - rich(levels_ - 2))
                                    : std::abs(raw[1] - raw[0]);
    return r;
  }

  // Adds levels until the extrapolation settles, then grows the domain until
  // doubling L moves the value by less than domain_tol. The discretisation is
  // left at the smaller of the last two domains.
  EigenResult adapt(double lambda) {
    EigenResult current = refine(lambda);
    for (int step = 0; step < options_.max_domain_steps; ++step) {
      const int n0 = n0_;
      const int levels = levels_;
      grow();
      EigenResult next = refine(lambda);
      const double shift = std::abs(next.value - current.value);
      if (shift < options_.domain_tol) {
        n0_ = n0;
        build();
        if (levels_ != levels) current = evaluate(lambda);
        current.error_estimate = std::max(current.error_estimate, shift);
        return current;
      }
      current = next;
    }
    throw NonConvergenceError("groundstate: domain growth did not settle (L = " +
                                  std::to_string(L()) + ")",
                              current.value, current.value);
  }

  // Extends the domain to at least L, keeping the coarse step.
  void extend_to(double L) {
    const double xi_target = xi_of_L(GridMap::sinh, scale_, L);
    const double xi = 0.5 * h0_ * (n0_ + 1);
    if (xi_target <= xi) return;
    const int m = static_cast<int>(std::ceil((xi_target - xi) / h0_ - 1e-9));
    n0_ += 2 * m;
    build();
  }

 private:
  EigenResult refine(double lambda) {
    double previous = std::nan("");
    for (;;) {
      EigenResult r = evaluate(lambda);
      if (r.error_estimate < options_.extrapolation_tol * std::max(1.0, std::abs(r.value))) return r;
      if (levels_ >= options_.max_levels) {
        throw NonConvergenceError("groundstate: grid refinement did not settle", previous, r.value);
      }
      previous = r.value;
      ++levels_;
      build();
    }
  }

  void grow() {
    // Doubling L adds about log 2 in the sinh coordinate once L >> scale.
    extend_to(2.0 * L());
  }

  double a_at(double xi) {
    auto it = cache_.find(xi);
    if (it != cache_.end()) return it->second;
    const double a = landau_coulomb(spec_.ell, spec_.B, scale_ * std::sinh(xi));
    cache_.emplace(xi, a);
    return a;
  }

  void build() {
    grids_.clear();
    a_node_.clear();
    a_mid_.clear();
    int n = n0_;
    double h = h0_;
    for (int k = 0; k < levels_; ++k) {
      Grid g = Grid::make(GridMap::sinh, scale_, h, n);
      Eigen::VectorXd an(n), am(n + 1);
      for (int i = 0; i < n; ++i) an(i) = a_at(g.xi(i));
      for (int i = 0; i <= n; ++i) am(i) = a_at(g.xi_mid(i));
      grids_.push_back(std::move(g));
      a_node_.push_back(std::move(an));
      a_mid_.push_back(std::move(am));
      n = 2 * n + 1;
      h *= 0.5;
    }
  }

  PotentialSpec spec_;
  GroundStateOptions options_;
  double scale_;
  double h0_{0};
  int n0_{0};
  int levels_{3};
  std::vector<Grid> grids_;
  std::vector<Eigen::VectorXd> a_node_, a_mid_;
  std::unordered_map<double, double> cache_;
};


double initial_L(const PotentialSpec& spec, const GroundStateOptions& o, double lambda_est) {
  if (o.L0 > 0.0) return o.L0;
  double L = std::max(o.c1 / std::sqrt(spec.B), o.c2 / spec.nu);
  if (lambda_est < 1.0) L = std::max(L, o.c3 / (1.0 - lambda_est));
  return L;
}

}  // namespace

EigenResult T_eigen(const PotentialSpec& spec, double lambda, const GroundStateOptions& options) {
  spec.validate();
  if (!(lambda >= -1.0) || !std::isfinite(lambda)) throw InputError("T(lambda): lambda must be >= -1");
  Discretization d(spec, options, initial_L(spec, options, 0.0));
  const EigenResult coarse = d.evaluate(lambda);
  if (options.L0 <= 0.0) d.extend_to(initial_L(spec, options, coarse.value));
  return d.adapt(lambda);
}

double T_of_lambda(const PotentialSpec& spec, double lambda, const GroundStateOptions& options) {
  return T_eigen(spec, lambda, options).value;
}

FixedPointResult ground_state_lambda(const PotentialSpec& spec, const GroundStateOptions& options) {
  spec.validate();
  Discretization d(spec, options, initial_L(spec, options, -1.0));
  FixedPointResult out;
  // Growing the domain only lowers T(-1); it needs to be converged only when
  // the level is close to the edge.
  EigenResult at_minus_one = d.evaluate(-1.0);
  if (std::abs(at_minus_one.value + 1.0) < kNearEdge) at_minus_one = d.adapt(-1.0);
  out.L = d.L();
  out.n = d.finest_n();
  if (at_minus_one.value + 1.0 <= options.degenerate_tol) {
    out.lambda = -1.0;
    out.degenerate = true;
    out.residual = std::abs(at_minus_one.value + 1.0);
    return out;
  }

  int total_iterations = 0;
  double lambda = 0.0;
  for (int round = 0; round < 8; ++round) {
    auto phi = [&](double x) { return d.evaluate(x).value - x; };
    const double phi_lo = phi(-1.0);
    const double phi_hi = phi(1.0);
    if (phi_lo <= 0.0) {
      // The finer grid moved T(-1) below -1: the level has reached the edge.
      out.lambda = -1.0;
      out.degenerate = true;
      out.residual = std::abs(phi_lo);
      out.L = d.L();
      out.n = d.finest_n();
      out.iterations = total_iterations;
      return out;
    }
    if (phi_hi >= 0.0) {
      throw NumericError("groundstate: T(lambda) - lambda does not change sign on [-1, 1] (T(1) - 1 = " +
                         std::to_string(phi_hi) + ")");
    }
    const roots::Root root =
        roots::illinois(phi, -1.0, 1.0, phi_lo, phi_hi, 1e-15, options.residual_tol, options.max_iterations);
    total_iterations += root.iterations;
    lambda = root.x;
    out.residual = std::abs(root.fx);

    // Confirm the discretisation at the root; re-solve if it had to change.
    const double L_before = d.L();
    const int n_before = d.finest_n();
    d.extend_to(initial_L(spec, options, lambda));
    const EigenResult check = d.adapt(lambda);
    if (d.L() == L_before && d.finest_n() == n_before) {
      out.lambda = lambda;
      out.L = d.L();
      out.n = d.finest_n();
      out.iterations = total_iterations;
      if (out.residual > options.residual_tol) {
        throw NonConvergenceError("groundstate: fixed-point residual " + std::to_string(out.residual) +
                                      " above tolerance",
                                  lambda, check.value);
      }
      return out;
    }
  }
  throw NonConvergenceError("groundstate: discretisation kept changing at the fixed point", lambda,
                            lambda);
}

std::vector<FixedPointResult> ground_state_per_ell(double nu, double B, const std::vector<int>& ells,
                                                   const GroundStateOptions& options) {
  std::vector<FixedPointResult> out;
  out.reserve(ells.size());
  for (int ell : ells) out.push_back(ground_state_lambda(PotentialSpec{nu, B, ell}, options));
  return out;
}

EigenResult landau_functional_minimum(double delta, double B, const GroundStateOptions& options) {
  return T_eigen(PotentialSpec{delta, B, 0}, -1.0, options);
}

}  // namespace landau
