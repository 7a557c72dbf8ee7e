#include "landau/trial_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "landau/errors.hpp"
#include "landau/potentials.hpp"
#include "landau/quadrature.hpp"
#include "landau/roots.hpp"

namespace landau {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kHermiteTerms = 8;
constexpr double kHermiteCutoff = 12.0;  // psi_j(x) < 1e-25 beyond |x| = 12 for j < 8
constexpr double kGaussianCutoff = 10.0;  // in widths; exp(-25)^2 relative weight
constexpr double kRelTol = 1e-11;
constexpr double kPlateauRampIntegral = 181.0 / 462.0;  // int_0^1 S(t)^2 dt

// Quintic smoothstep from 1 down to 0 on t in [0, 1] and its derivative.
double ramp(double t) { return 1.0 - t * t * t * (10.0 - 15.0 * t + 6.0 * t * t); }
double ramp_slope(double t) { return -30.0 * t * t * (1.0 - t) * (1.0 - t); }

// psi_0..psi_{m} at x.
std::vector<double> hermite_functions(double x, int m) {
  std::vector<double> psi(m + 1);
  psi[0] = std::pow(kPi, -0.25) * std::exp(-0.5 * x * x);
  if (m >= 1) psi[1] = std::numbers::sqrt2 * x * psi[0];
  for (int j = 1; j < m; ++j) {
    psi[j + 1] = std::sqrt(2.0 / (j + 1)) * x * psi[j] - std::sqrt(double(j) / (j + 1)) * psi[j - 1];
  }
  return psi;
}

}  // namespace

std::string to_string(ProfileFamily family) {
  switch (family) {
    case ProfileFamily::gaussian: return "gaussian";
    case ProfileFamily::plateau: return "plateau";
    case ProfileFamily::hermite: return "hermite";
    case ProfileFamily::tabulated: return "tabulated";
  }
  return "unknown";
}

Profile Profile::gaussian(double width) {
  if (!(width > 0.0)) throw InputError("gaussian profile: width must be positive");
  Profile p;
  p.shape_ = Gaussian{width};
  return p;
}

Profile Profile::plateau(double half_width, double ramp_width) {
  if (!(half_width >= 0.0) || !(ramp_width > 0.0)) {
    throw InputError("plateau profile: half-width must be >= 0 and ramp > 0");
  }
  Profile p;
  p.shape_ = Plateau{half_width, ramp_width};
  return p;
}

Profile Profile::hermite(std::vector<double> coefficients, double scale) {
  if (coefficients.empty()) throw InputError("hermite profile: no coefficients");
  if (!(scale > 0.0)) throw InputError("hermite profile: scale must be positive");
  Profile p;
  p.shape_ = Hermite{std::move(coefficients), scale};
  return p;
}

Profile Profile::tabulated(std::vector<double> z, std::vector<double> f) {
  if (z.size() < 2 || z.size() != f.size()) throw InputError("tabulated profile: need matching z, f");
  for (std::size_t i = 1; i < z.size(); ++i) {
    if (!(z[i] > z[i - 1])) throw InputError("tabulated profile: z must increase");
  }
  const std::size_t n = z.size();
  std::vector<double> slope(n);
  slope[0] = (f[1] - f[0]) / (z[1] - z[0]);
  slope[n - 1] = (f[n - 1] - f[n - 2]) / (z[n - 1] - z[n - 2]);
  for (std::size_t i = 1; i + 1 < n; ++i) slope[i] = (f[i + 1] - f[i - 1]) / (z[i + 1] - z[i - 1]);
  Profile p;
  p.shape_ = Tabulated{std::move(z), std::move(f), std::move(slope)};
  return p;
}

ProfileFamily Profile::family() const {
  return static_cast<ProfileFamily>(shape_.index());
}

double Profile::shape_value(double x) const {
  if (auto* g = std::get_if<Gaussian>(&shape_)) {
    const double w = g->width;
    return std::pow(2.0 * kPi * w * w, -0.25) * std::exp(-x * x / (4.0 * w * w));
  }
  if (auto* p = std::get_if<Plateau>(&shape_)) {
    const double ax = std::abs(x);
    if (ax <= p->half_width) return 1.0;
    const double t = (ax - p->half_width) / p->ramp;
    return t >= 1.0 ? 0.0 : ramp(t);
  }
  if (auto* h = std::get_if<Hermite>(&shape_)) {
    const double u = x / h->scale;
    const auto psi = hermite_functions(u, static_cast<int>(h->c.size()) - 1);
    double s = 0.0;
    for (std::size_t j = 0; j < h->c.size(); ++j) s += h->c[j] * psi[j];
    return s;
  }
  const auto& t = std::get<Tabulated>(shape_);
  if (x <= t.z.front() || x >= t.z.back()) return 0.0;
  const std::size_t k = std::upper_bound(t.z.begin(), t.z.end(), x) - t.z.begin() - 1;
  const double dz = t.z[k + 1] - t.z[k];
  const double s = (x - t.z[k]) / dz;
  const double s2 = s * s, s3 = s2 * s;
  return (2 * s3 - 3 * s2 + 1) * t.f[k] + (s3 - 2 * s2 + s) * dz * t.slope[k] +
         (-2 * s3 + 3 * s2) * t.f[k + 1] + (s3 - s2) * dz * t.slope[k + 1];
}

double Profile::shape_derivative(double x) const {
  if (auto* g = std::get_if<Gaussian>(&shape_)) {
    const double w = g->width;
    return -x / (2.0 * w * w) * shape_value(x);
  }
  if (auto* p = std::get_if<Plateau>(&shape_)) {
    const double ax = std::abs(x);
    if (ax <= p->half_width) return 0.0;
    const double t = (ax - p->half_width) / p->ramp;
    if (t >= 1.0) return 0.0;
    return (x < 0 ? -1.0 : 1.0) * ramp_slope(t) / p->ramp;
  }
  if (auto* h = std::get_if<Hermite>(&shape_)) {
    const double u = x / h->scale;
    const int m = static_cast<int>(h->c.size());
    const auto psi = hermite_functions(u, m);
    double s = 0.0;
    for (int j = 0; j < m; ++j) {
      const double lower = j > 0 ? std::sqrt(j / 2.0) * psi[j - 1] : 0.0;
      s += h->c[j] * (lower - std::sqrt((j + 1) / 2.0) * psi[j + 1]);
    }
    return s / h->scale;
  }
  const auto& t = std::get<Tabulated>(shape_);
  if (x <= t.z.front() || x >= t.z.back()) return 0.0;
  const std::size_t k = std::upper_bound(t.z.begin(), t.z.end(), x) - t.z.begin() - 1;
  const double dz = t.z[k + 1] - t.z[k];
  const double s = (x - t.z[k]) / dz;
  const double s2 = s * s;
  return ((6 * s2 - 6 * s) * t.f[k] + (-6 * s2 + 6 * s) * t.f[k + 1]) / dz +
         (3 * s2 - 4 * s + 1) * t.slope[k] + (3 * s2 - 2 * s) * t.slope[k + 1];
}

double Profile::value(double z) const { return amplitude_ * shape_value(z / stretch_); }

double Profile::derivative(double z) const {
  return amplitude_ / stretch_ * shape_derivative(z / stretch_);
}

std::vector<double> Profile::knots() const {
  std::vector<double> k;
  if (auto* g = std::get_if<Gaussian>(&shape_)) {
    const double r = kGaussianCutoff * g->width;
    k = {-r, -2 * g->width, 0.0, 2 * g->width, r};
  } else if (auto* p = std::get_if<Plateau>(&shape_)) {
    const double D = p->half_width, e = D + p->ramp;
    // Geometric knots across the plateau follow the 1/|z| decay of a_l.
    std::vector<double> pos{0.0};
    for (double x = 0.5; x < D; x *= 2.0) pos.push_back(x);
    if (D > 0.0) pos.push_back(D);
    pos.push_back(D + 0.5 * p->ramp);
    pos.push_back(e);
    for (auto it = pos.rbegin(); it != pos.rend(); ++it) {
      if (*it > 0.0) k.push_back(-*it);
    }
    k.insert(k.end(), pos.begin(), pos.end());
  } else if (auto* h = std::get_if<Hermite>(&shape_)) {
    const double r = kHermiteCutoff * h->scale;
    for (int i = -6; i <= 6; ++i) k.push_back(r * i / 6.0);
  } else {
    const auto& t = std::get<Tabulated>(shape_);
    k = t.z;
    if (t.z.front() < 0.0 && t.z.back() > 0.0 &&
        !std::binary_search(t.z.begin(), t.z.end(), 0.0)) {
      k.insert(std::upper_bound(k.begin(), k.end(), 0.0), 0.0);
    }
  }
  for (double& x : k) x *= stretch_;
  return k;
}

Profile Profile::rescaled(double B) const {
  if (!(B > 0.0)) throw InputError("rescale: B must be positive");
  Profile p = *this;
  p.amplitude_ *= std::pow(B, 0.25);
  p.stretch_ /= std::sqrt(B);
  return p;
}

Profile Profile::scaled(double factor) const {
  Profile p = *this;
  p.amplitude_ *= factor;
  return p;
}

Profile isotropic_gaussian(double B) {
  if (!(B > 0.0)) throw InputError("isotropic gaussian: B must be positive");
  return Profile::gaussian(1.0 / std::sqrt(B));
}

Profile unit_plateau(double half_width) {
  const double w = 0.5 * half_width;
  const double norm2 = 2.0 * half_width + 2.0 * w * kPlateauRampIntegral;
  return Profile::plateau(half_width, w).scaled(1.0 / std::sqrt(norm2));
}

TrialEvaluation evaluate_GB(double nu, double B, const TrialState& trial) {
  PotentialSpec{nu, B, trial.ell}.validate();
  const Profile& f = trial.f;
  const int ell = trial.ell;
  const std::vector<double> knots = f.knots();

  auto kinetic_density = [&](double z) {
    const double d = f.derivative(z);
    return d == 0.0 ? 0.0 : d * d * landau_radius(ell, B, z);
  };
  auto potential_density = [&](double z) {
    const double v = f.value(z);
    return v == 0.0 ? 0.0 : v * v * landau_coulomb(ell, B, z);
  };
  auto norm_density = [&](double z) {
    const double v = f.value(z);
    return v * v;
  };

  auto run = [&](auto&& g, const char* what) {
    auto r = quadrature::integrate_piecewise<double>(g, knots, kRelTol, 0.0, 2000);
    if (!r.converged) {
      throw NumericError(std::string("evaluate_GB: ") + what + " integral reached only " +
                         std::to_string(r.error / std::max(std::abs(r.value), 1e-300)) +
                         " relative accuracy");
    }
    return r.value;
  };

  TrialEvaluation e;
  e.kinetic = run(kinetic_density, "kinetic");
  e.potential = run(potential_density, "potential");
  e.norm_squared = run(norm_density, "norm");
  e.G_B = e.kinetic / nu - nu * e.potential;
  e.J_at_minus1 = e.G_B + 2.0 * e.norm_squared;
  e.certified = e.J_at_minus1 <= 0.0;
  return e;
}

Certificate certify_critical_upper_bound(double nu, ProfileFamily family) {
  PotentialSpec{nu, 1.0, 0}.validate();
  Certificate c;
  c.family = family;
  if (family == ProfileFamily::gaussian) {
    const TrialEvaluation e = evaluate_GB(nu, 1.0, TrialState{0, isotropic_gaussian(1.0)});
    c.m_star = e.G_B / e.norm_squared;
  } else if (family == ProfileFamily::plateau) {
    auto ratio = [&](double log_D) {
      const TrialEvaluation e = evaluate_GB(nu, 1.0, TrialState{0, unit_plateau(std::exp(log_D))});
      return e.G_B / e.norm_squared;
    };
    // The minimum moves out like exp(C / nu^2); scan coarsely, then refine.
    const double lo = -3.0;
    const double hi = std::max(20.0, 8.0 / (nu * nu));
    const int points = 48;
    double best_x = lo, best = std::numeric_limits<double>::infinity();
    int best_i = 0;
    for (int i = 0; i <= points; ++i) {
      const double x = lo + (hi - lo) * i / points;
      const double r = ratio(x);
      if (r < best) {
        best = r;
        best_x = x;
        best_i = i;
      }
    }
    const double step = (hi - lo) / points;
    const double a = best_i == 0 ? lo : best_x - step;
    const double b = best_i == points ? hi : best_x + step;
    const auto [x, fx] = roots::golden_section_min(ratio, a, b, 1e-4);
    if (fx < best) {
      best = fx;
      best_x = x;
    }
    c.m_star = best;
    c.parameter = std::exp(best_x);
  } else {
    throw InputError("certificate: family must be gaussian or plateau");
  }
  if (c.m_star < 0.0) c.log_B_cert = 2.0 * std::log(2.0 / std::abs(c.m_star));
  return c;
}

TrialState random_trial(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> ell_dist(0, 3);
  std::normal_distribution<double> coef(0.0, 1.0);
  std::uniform_real_distribution<double> log_scale(std::log(0.3), std::log(3.0));
  TrialState t;
  t.ell = ell_dist(rng);
  std::vector<double> c(kHermiteTerms);
  for (double& x : c) x = coef(rng);
  t.f = Profile::hermite(std::move(c), std::exp(log_scale(rng)));
  return t;
}

Sqrt5Report check_sqrt5_inequality(double nu, int samples, std::uint64_t seed) {
  if (samples < 1) throw InputError("sqrt5 check: samples must be at least 1");
  PotentialSpec{nu, 1.0, 0}.validate();
  std::mt19937_64 rng(seed);
  Sqrt5Report r;
  r.bound = -nu * std::sqrt(5.0);
  r.worst_ratio = std::numeric_limits<double>::infinity();
  r.samples = samples;
  for (int i = 0; i < samples; ++i) {
    const TrialState t = random_trial(rng);
    const TrialEvaluation e = evaluate_GB(nu, 1.0, t);
    const double ratio = e.G_B / e.norm_squared;
    if (ratio < r.worst_ratio) {
      r.worst_ratio = ratio;
      r.worst_ell = t.ell;
    }
  }
  return r;
}

}  // namespace landau
