#include "landau/critical_field.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <unordered_map>
#include <vector>

#include "landau/errors.hpp"
#include "landau/potentials.hpp"
#include "landau/roots.hpp"

namespace landau {

std::string to_string(CriticalMethod method) {
  switch (method) {
    case CriticalMethod::direct_scaling: return "direct_scaling";
    case CriticalMethod::schrodinger_form: return "schrodinger_form";
    case CriticalMethod::asymptotic: return "asymptotic";
  }
  return "unknown";
}

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEigenAbsTol = 1e-22;
constexpr double kEigenRelTol = 1e-14;

void check_delta(double delta, double lo, double hi, const char* what) {
  if (!std::isfinite(delta) || delta < lo || delta > hi) {
    throw DomainError(std::string(what) + ": delta = " + std::to_string(delta) + " outside [" +
                      std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
}

// -g'' + kappa mu(y) g on a uniform y-grid. log mu is sampled once per node
// and reused for every kappa.
class SchrodingerForm {
 public:
  SchrodingerForm(double Y, const CriticalFieldOptions& options) : options_(options) {
    const int half = std::max(8, static_cast<int>(std::ceil(Y / options.y_step)));
    h0_ = options.y_step;
    n0_ = 2 * half - 1;
    levels_ = options.min_levels;
    build();
  }

  double Y() const { return 0.5 * h0_ * (n0_ + 1); }
  int finest_n() const { return grids_.back().n; }
  int levels() const { return levels_; }

  EigenResult evaluate(double log_kappa) const {
    std::vector<double> raw(levels_);
    for (int k = 0; k < levels_; ++k) {
      const Grid& g = grids_[k];
      Eigen::VectorXd p = Eigen::VectorXd::Ones(g.n + 1);
      Eigen::VectorXd q = (log_kappa + log_mu_[k].array()).min(700.0).exp().matrix();
      raw[k] = lowest_eigenvalue(assemble(g, p, q), kEigenAbsTol, kEigenRelTol);
    }
    EigenResult r;
    r.L = Y();
    r.n = finest_n();
    r.levels = levels_;
    r.raw_value = raw.back();
    r.extrapolated = true;
    auto rich = [&](int k) { return (4.0 * raw[k] - raw[k - 1]) / 3.0; };
    r.value = rich(levels_ - 1);
    r.error_estimate = std::abs(r.value - rich(levels_ - 2));
    return r;
  }

  EigenResult refine(double log_kappa) {
    double previous = std::nan("");
    for (;;) {
      EigenResult r = evaluate(log_kappa);
      if (r.error_estimate <= options_.extrapolation_rel_tol * std::abs(r.value)) return r;
      if (levels_ >= options_.max_levels) {
        throw NonConvergenceError("E1: grid refinement did not settle", previous, r.value);
      }
      previous = r.value;
      ++levels_;
      build();
    }
  }

  void set_levels(int levels) {
    if (levels == levels_) return;
    levels_ = levels;
    build();
  }

  void extend_to(double Y) {
    if (Y <= this->Y()) return;
    n0_ += 2 * static_cast<int>(std::ceil((Y - this->Y()) / h0_ - 1e-9));
    build();
  }

 private:
  double log_mu_at(double y) {
    auto it = cache_.find(y);
    if (it != cache_.end()) return it->second;
    const double v = log_mu(y);
    cache_.emplace(y, v);
    return v;
  }

  void build() {
    grids_.clear();
    log_mu_.clear();
    int n = n0_;
    double h = h0_;
    for (int k = 0; k < levels_; ++k) {
      Grid g = Grid::make(GridMap::uniform, 1.0, h, n);
      Eigen::VectorXd lm(n);
      for (int i = 0; i < n; ++i) lm(i) = log_mu_at(g.xi(i));
      grids_.push_back(std::move(g));
      log_mu_.push_back(std::move(lm));
      n = 2 * n + 1;
      h *= 0.5;
    }
  }

  CriticalFieldOptions options_;
  double h0_{0.05};
  int n0_{0};
  int levels_{3};
  std::vector<Grid> grids_;
  std::vector<Eigen::VectorXd> log_mu_;
  std::unordered_map<double, double> cache_;
};

// Settles levels and the half-width at log_kappa: adds levels until the
// extrapolation settles, doubles Y until E_1 moves by less than
// domain_rel_tol (relative), and keeps the smaller domain.
EigenResult settle(SchrodingerForm& form, double log_kappa, const CriticalFieldOptions& options) {
  EigenResult current = form.refine(log_kappa);
  for (int step = 0; step < 6; ++step) {
    SchrodingerForm wider(2.0 * form.Y(), options);
    wider.set_levels(form.levels());
    const EigenResult next = wider.refine(log_kappa);
    const double shift = std::abs(next.value - current.value);
    if (shift <= options.domain_rel_tol * std::abs(current.value)) {
      current.error_estimate = std::max(current.error_estimate, shift);
      if (wider.levels() != form.levels()) {
        form.set_levels(wider.levels());
        current = form.evaluate(log_kappa);
      }
      return current;
    }
    form.extend_to(2.0 * form.Y());
    form.set_levels(wider.levels());
    current = form.evaluate(log_kappa);
  }
  throw NonConvergenceError("E1: doubling Y did not settle", current.value, current.value);
}

}  // namespace

double m_delta(double delta, const CriticalFieldOptions& options) {
  if (!(delta > 0.0 && delta < 1.0)) throw DomainError("m(delta): delta must lie in (0, 1)");
  GroundStateOptions o = options.direct;
  if (o.L0 <= 0.0) o.L0 = 400.0 * std::exp(kPi / (2.0 * delta));
  const double m = landau_functional_minimum(delta, 1.0, o).value - 1.0;
  if (!(m < 0.0)) throw NumericError("m(delta) is not negative: " + std::to_string(m));
  return m;
}

CriticalFieldResult critical_field_direct(double delta, const CriticalFieldOptions& options) {
  if (!std::isfinite(delta) || delta < kMinDirectDelta || delta >= 1.0) {
    throw DomainError("direct method needs 0.15 <= delta < 1 (got " + std::to_string(delta) +
                      "); the z-space eigenfunction spreads over exp(pi/(2 delta)), use the "
                      "Schrodinger form below that");
  }
  GroundStateOptions o = options.direct;
  if (o.L0 <= 0.0) o.L0 = 400.0 * std::exp(kPi / (2.0 * delta));
  const EigenResult e = landau_functional_minimum(delta, 1.0, o);
  const double m = e.value - 1.0;
  if (!(m < 0.0)) throw NumericError("m(delta) is not negative: " + std::to_string(m));
  CriticalFieldResult r;
  r.delta = delta;
  r.method = CriticalMethod::direct_scaling;
  r.m_delta = m;
  r.log_BL = 2.0 * (std::log(2.0) - std::log(-m));
  r.L = e.L;
  r.n = e.n;
  return r;
}

EigenResult E1_of_kappa(double log_kappa, double delta_hint, const CriticalFieldOptions& options) {
  if (!std::isfinite(log_kappa)) throw InputError("E1: log kappa must be finite");
  double Y = std::abs(log_kappa) + options.y_margin;
  if (delta_hint > 0.0) Y = std::max(Y, kPi / (2.0 * delta_hint) + options.y_margin);
  SchrodingerForm form(Y, options);
  return settle(form, log_kappa, options);
}

E1Bracket bracket_E1(double delta, double log_kappa) {
  if (!(delta > 0.0)) throw InputError("bracket_E1: delta must be positive");
  if (!(log_kappa < 0.0) || !std::isfinite(log_kappa)) {
    throw InputError("bracket_E1: needs 0 < kappa < 1");
  }
  const double sigma_d = -log_kappa;

  // Step potential: 0 on (-sigma, sigma), V0 = kappa mu(sigma) outside.
  const double V0 = std::exp(log_kappa + log_mu(sigma_d));
  auto g = [&](double E) { return std::sqrt(E) * sigma_d - std::atan(std::sqrt((V0 - E) / E)); };
  double lo = 0.0, hi = V0;
  for (int it = 0; it < 200 && hi - lo > 1e-17 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (g(mid) > 0.0 ? hi : lo) = mid;
  }
  if (!(hi > 0.0) || !(g(hi) >= 0.0)) throw NumericError("bracket_E1: step-potential root not bracketed");
  E1Bracket b;
  b.lower = lo;

  // Cosine trial on (-sigma, sigma); the bound form needs sigma >= 1.
  const double c = mu_bound_constant();
  const double from = std::max(1.0, sigma_d - 3.0 * std::log(sigma_d) - 5.0);
  const double to = std::max(from, sigma_d + 5.0);
  b.upper = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 200; ++i) {
    const double sigma = from + (to - from) * i / 199.0;
    const double tail = 2.0 * c * (std::exp(log_kappa + sigma) - std::exp(log_kappa));
    b.upper = std::min(b.upper, kPi * kPi / (4.0 * sigma * sigma) + tail);
  }
  return b;
}

CriticalFieldResult critical_field_schrodinger(double delta, const CriticalFieldOptions& options) {
  check_delta(delta, kMinDelta, kMaxSchrodingerDelta, "Schrodinger form");
  const double target = delta * delta;
  const double lo = -1.5 * kPi / delta - 20.0;
  const double hi = 0.0;

  // Coarse solve on a domain wide enough for the whole bracket.
  SchrodingerForm coarse(std::abs(lo) + options.y_margin, options);
  auto f_coarse = [&](double lk) { return coarse.evaluate(lk).value - target; };
  const double f_lo = f_coarse(lo);
  const double f_hi = f_coarse(hi);
  if (!(f_lo < 0.0 && f_hi > 0.0)) {
    throw NumericError("Schrodinger form: E1 - delta^2 does not change sign on log kappa in [" +
                       std::to_string(lo) + ", 0] (E1 = " + std::to_string(f_lo + target) + ", " +
                       std::to_string(f_hi + target) + ")");
  }
  const roots::Root r0 = roots::illinois(f_coarse, lo, hi, f_lo, f_hi, 1e-12, 1e-6 * target,
                                         options.max_iterations);

  // Final solve on Y = |log kappa| + margin with settled levels and width.
  SchrodingerForm form(std::abs(r0.x) + options.y_margin, options);
  settle(form, r0.x, options);
  auto f = [&](double lk) { return form.evaluate(lk).value - target; };
  double a = r0.x - 0.5, b = std::min(0.0, r0.x + 0.5);
  double fa = f(a), fb = f(b);
  if (!(fa < 0.0 && fb > 0.0)) {
    a = lo;
    b = hi;
    fa = f(a);
    fb = f(b);
  }
  const roots::Root root =
      roots::illinois(f, a, b, fa, fb, 0.0, options.e1_rel_tol * target, options.max_iterations);
  if (std::abs(root.fx) > options.e1_rel_tol * target) {
    throw NonConvergenceError("Schrodinger form: |E1 - delta^2| = " + std::to_string(std::abs(root.fx)) +
                                  " above tolerance",
                              r0.x, root.x);
  }

  CriticalFieldResult r;
  r.delta = delta;
  r.method = CriticalMethod::schrodinger_form;
  r.log_kappa = root.x;
  r.e1 = root.fx + target;
  r.e1_bracket = bracket_E1(delta, root.x);
  r.log_BL = 2.0 * (std::log(2.0 * delta) - root.x);
  r.iterations = r0.iterations + root.iterations;
  r.L = form.Y();
  r.n = form.finest_n();
  return r;
}

CriticalFieldResult critical_field_asymptotic(double delta) {
  if (!(delta > 0.0) || !std::isfinite(delta)) throw DomainError("asymptotic form: delta must be positive");
  CriticalFieldResult r;
  r.delta = delta;
  r.method = CriticalMethod::asymptotic;
  r.log_BL = std::log(4.0 * delta * delta) + kPi / delta;
  return r;
}

HhhBounds hhh_bounds(double nu) {
  if (!(nu > 0.0 && nu < 1.0)) throw DomainError("nu must lie in (0, 1)");
  HhhBounds b;
  b.lower = 4.0 / (5.0 * nu * nu);
  const double gap = 3.0 * nu * nu - 2.0;
  if (gap > 0.0) b.upper_gaussian = 18.0 * kPi * nu * nu / (gap * gap);
  return b;
}

double GapConstants::d(double delta) const {
  return (1.0 - 2.0 * delta) * std::numbers::sqrt2 - 2.0 * delta;
}

GapConstants gap_constants() {
  static const double nu_bar = [] {
    auto f = [](double nu) { return 2.0 * (nu + std::sqrt(nu)) - (2.0 - std::numbers::sqrt2); };
    return roots::bisect(f, 0.0, 1.0, f(0.0), 1e-13).x;
  }();
  return GapConstants{nu_bar};
}

SandwichBracket sandwich(double nu, const PhysicalConstants& constants,
                         const CriticalFieldOptions& options) {
  const double nu_bar = gap_constants().nu_bar;
  if (!(nu > 0.0 && nu < nu_bar)) {
    throw DomainError("sandwich requires 0 < nu < nu_bar = " + std::to_string(nu_bar) + " (got " +
                      std::to_string(nu) + ")");
  }
  SandwichBracket s;
  s.nu = nu;
  s.delta_minus = nu - std::pow(nu, 1.5);
  s.delta_plus = nu + std::pow(nu, 1.5);
  s.lower_solve = critical_field_schrodinger(s.delta_plus, options);
  s.upper_solve = critical_field_schrodinger(s.delta_minus, options);
  s.lower_logB = s.lower_solve.log_BL;
  s.upper_logB = s.upper_solve.log_BL;
  const HhhBounds hhh = hhh_bounds(nu);
  s.analytic_lower = hhh.lower;
  s.analytic_upper_gaussian = hhh.upper_gaussian;
  s.lower_log10_tesla = log10_tesla_of_log_B(s.lower_logB, constants);
  s.upper_log10_tesla = log10_tesla_of_log_B(s.upper_logB, constants);
  s.analytic_lower_tesla = tesla_of_B(s.analytic_lower, constants);
  if (hhh.upper_gaussian) s.analytic_upper_gaussian_tesla = tesla_of_B(*hhh.upper_gaussian, constants);
  return s;
}

}  // namespace landau
