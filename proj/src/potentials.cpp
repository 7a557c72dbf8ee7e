#include "landau/potentials.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "landau/errors.hpp"
#include "landau/quadrature.hpp"

namespace landau {

namespace {

constexpr double kQuadratureRelTol = 1e-13;

// Exponent of (s^2 + z^2) in the radial average: -1/2 for the Coulomb
// average, +1/2 for the mean radius.
enum class Moment { inverse_radius, radius };

double log_prefactor(int ell, double B) {
  return (ell + 1) * std::log(B) - ell * std::log(2.0) - std::lgamma(ell + 1.0);
}

// Upper cut-off in s: the Gaussian weight s^{2l+1} exp(-B s^2/2) is below
// 1e-28 of its peak there.
double s_cutoff(int ell, double B) {
  const double t = std::sqrt(ell + 0.5) + 8.0;
  return t * std::sqrt(2.0 / B);
}

double average_by_quadrature(int ell, double B, double z, Moment m) {
  const double lp = log_prefactor(ell, B);
  const double s_max = s_cutoff(ell, B);
  const double az = std::abs(z);
  const double s_peak = std::sqrt((2.0 * ell + 1.0) / B);

  if (az == 0.0) {
    // Integrand reduces to s^{2l} (or s^{2l+2}) times the Gaussian.
    const int power = m == Moment::inverse_radius ? 2 * ell : 2 * ell + 2;
    auto f = [&](double s) {
      if (s <= 0.0) return power == 0 ? std::exp(lp) : 0.0;
      return std::exp(lp + power * std::log(s) - 0.5 * B * s * s);
    };
    std::vector<double> knots{0.0, std::min(s_peak, s_max), s_max};
    auto r = quadrature::integrate_piecewise<double>(f, knots, kQuadratureRelTol);
    if (!r.converged) throw NumericError("landau_coulomb: quadrature did not converge at z = 0");
    return r.value;
  }

  // s = |z| sinh(v) absorbs the near-singularity of 1/sqrt(s^2 + z^2) at
  // small |z|: ds / sqrt(s^2 + z^2) = dv.
  auto f = [&](double v) {
    const double s = az * std::sinh(v);
    if (s <= 0.0) return 0.0;
    double log_val = lp + (2 * ell + 1) * std::log(s) - 0.5 * B * s * s;
    if (m == Moment::radius) log_val += std::log(s * s + az * az);
    return std::exp(log_val);
  };
  const double v_max = std::asinh(s_max / az);
  const double v_peak = std::asinh(s_peak / az);
  std::vector<double> knots{0.0};
  if (v_peak > 0.0 && v_peak < v_max) knots.push_back(v_peak);
  knots.push_back(v_max);
  auto r = quadrature::integrate_piecewise<double>(f, knots, kQuadratureRelTol);
  if (!r.converged) {
    throw NumericError("landau_coulomb: quadrature did not converge at z = " + std::to_string(z));
  }
  return r.value;
}

// (s^2 + z^2)^p expanded in s^2/z^2 and integrated termwise against the
// normalised transverse density: moments <(B s^2/2)^k> = (l+k)!/l!.
double average_by_series(int ell, double B, double z, Moment m) {
  const double az = std::abs(z);
  const double p = m == Moment::inverse_radius ? -0.5 : 0.5;
  const double inv_w2 = 1.0 / (B * az * az);
  double term = 1.0;
  double sum = 1.0;
  double previous = std::numeric_limits<double>::infinity();
  for (int k = 1; k < 200; ++k) {
    term *= 2.0 * (p - k + 1.0) * (ell + k) / k * inv_w2;
    if (std::abs(term) >= previous) break;  // asymptotic series starts to diverge
    sum += term;
    previous = std::abs(term);
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return std::pow(az, 2.0 * p) * sum;
}

double average(int ell, double B, double z, Moment m) {
  if (!std::isfinite(z)) throw InputError("potential: z must be finite");
  if (!(B > 0.0) || !std::isfinite(B)) throw InputError("potential: B must be positive and finite");
  if (ell < 0) throw InputError("potential: ell must be non-negative");
  if (std::sqrt(B) * std::abs(z) > asymptotic_radius(ell)) return average_by_series(ell, B, z, m);
  return average_by_quadrature(ell, B, z, m);
}

// ---------------------------------------------------------------------------
// y(z) table. Knots at spacing 1/128 on [0, Z0]; y by 5-point Gauss-Legendre
// per panel, cubic Hermite interpolation in between (error ~1e-11).

constexpr double kTableStep = 1.0 / 128.0;

struct VariableTable {
  std::vector<double> z;
  std::vector<double> y;
  std::vector<double> a;
  double offset{0};  // lim y(z) - log z

  static const VariableTable& instance() {
    static const VariableTable table = build();
    return table;
  }

  double z_max() const { return z.back(); }
  double y_max() const { return y.back(); }

  static VariableTable build() {
    VariableTable t;
    const int panels = static_cast<int>(std::lround(kAsymptoticRadius / kTableStep));
    t.z.resize(panels + 1);
    t.y.resize(panels + 1);
    t.a.resize(panels + 1);
    static constexpr std::array<double, 5> nodes = {-0.9061798459386640, -0.5384693101056831, 0.0,
                                                    0.5384693101056831, 0.9061798459386640};
    static constexpr std::array<double, 5> weights = {0.2369268850561891, 0.4786286704993665,
                                                      0.5688888888888889, 0.4786286704993665,
                                                      0.2369268850561891};
    t.z[0] = 0.0;
    t.y[0] = 0.0;
    t.a[0] = landau_coulomb(0, 1.0, 0.0);
    for (int k = 0; k < panels; ++k) {
      const double z0 = k * kTableStep;
      const double z1 = (k + 1) * kTableStep;
      const double mid = 0.5 * (z0 + z1);
      const double half = 0.5 * kTableStep;
      double sum = 0.0;
      for (int j = 0; j < 5; ++j) sum += weights[j] * landau_coulomb(0, 1.0, mid + half * nodes[j]);
      t.z[k + 1] = z1;
      t.y[k + 1] = t.y[k] + half * sum;
      t.a[k + 1] = landau_coulomb(0, 1.0, z1);
    }
    const double z0 = t.z_max();
    t.offset = t.y_max() - std::log(z0) + series_integral(z0);
    return t;
  }

  // S(z) = sum_{k>=1} c_k z^{-2k} / (2k) with a_0^1(z) = (1/z) sum_k c_k z^{-2k},
  // so that y(z) = offset + log z - S(z) for z >= Z0.
  static double series_integral(double z) { return series_integral_x(1.0 / (z * z)); }

  static double series_integral_x(double x) {
    double c = 1.0;
    double xk = 1.0;
    double sum = 0.0;
    double previous = std::numeric_limits<double>::infinity();
    for (int k = 1; k < 200; ++k) {
      c *= -(2.0 * k - 1.0);
      xk *= x;
      const double term = c * xk / (2.0 * k);
      if (std::abs(term) >= previous || term == 0.0) break;
      sum += term;
      previous = std::abs(term);
      if (std::abs(term) < 1e-18) break;
    }
    return sum;
  }

  // log of sum_k c_k x^k, i.e. log(z a_0^1(z)).
  static double log_series(double x) {
    double c = 1.0;
    double xk = 1.0;
    double sum = 1.0;
    double previous = std::numeric_limits<double>::infinity();
    for (int k = 1; k < 200; ++k) {
      c *= -(2.0 * k - 1.0);
      xk *= x;
      const double term = c * xk;
      if (std::abs(term) >= previous || term == 0.0) break;
      sum += term;
      previous = std::abs(term);
      if (std::abs(term) < 1e-18) break;
    }
    return std::log(sum);
  }

  std::size_t panel_of_z(double az) const {
    const auto k = static_cast<std::size_t>(az / kTableStep);
    return std::min(k, z.size() - 2);
  }

  double hermite(std::size_t k, double s) const {
    const double s2 = s * s;
    const double s3 = s2 * s;
    const double h00 = 2 * s3 - 3 * s2 + 1;
    const double h10 = s3 - 2 * s2 + s;
    const double h01 = -2 * s3 + 3 * s2;
    const double h11 = s3 - s2;
    return h00 * y[k] + h10 * kTableStep * a[k] + h01 * y[k + 1] + h11 * kTableStep * a[k + 1];
  }

  double hermite_slope(std::size_t k, double s) const {
    const double s2 = s * s;
    const double d00 = 6 * s2 - 6 * s;
    const double d10 = 3 * s2 - 4 * s + 1;
    const double d01 = -6 * s2 + 6 * s;
    const double d11 = 3 * s2 - 2 * s;
    return (d00 * y[k] + d01 * y[k + 1]) / kTableStep + d10 * a[k] + d11 * a[k + 1];
  }

  double near_y(double az) const {
    const std::size_t k = panel_of_z(az);
    return hermite(k, (az - z[k]) / kTableStep);
  }

  double near_z(double ay) const {
    const auto it = std::upper_bound(y.begin(), y.end(), ay);
    std::size_t k = it == y.begin() ? 0 : static_cast<std::size_t>(it - y.begin()) - 1;
    k = std::min(k, y.size() - 2);
    double lo = 0.0, hi = 1.0;
    double s = (ay - y[k]) / (y[k + 1] - y[k]);
    for (int it2 = 0; it2 < 60; ++it2) {
      const double r = hermite(k, s) - ay;
      if (r == 0.0) break;
      if (r > 0) hi = s; else lo = s;
      double next = s - r / (hermite_slope(k, s) * kTableStep);
      if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
      if (std::abs(next - s) < 1e-16) {
        s = next;
        break;
      }
      s = next;
    }
    return z[k] + s * kTableStep;
  }

  // Far field: returns log z for y >= y_max.
  double far_log_z(double ay) const {
    double lz = ay - offset;
    for (int it = 0; it < 8; ++it) {
      const double next = ay - offset + series_integral_x(std::exp(-2.0 * lz));
      if (next == lz) break;
      lz = next;
    }
    return lz;
  }
};

}  // namespace

void PotentialSpec::validate() const {
  if (!(nu > 0.0 && nu < 1.0)) throw InputError("nu must lie in (0, 1), got " + std::to_string(nu));
  if (!(B > 0.0) || !std::isfinite(B)) throw InputError("B must be positive and finite");
  if (ell < 0) throw InputError("ell must be non-negative");
}

double asymptotic_radius(int ell) {
  return kAsymptoticRadius * std::max(1.0, std::sqrt((ell + 1.0) / 6.0));
}

PotentialEvaluation a_ell(const PotentialSpec& spec, double z) {
  spec.validate();
  if (!std::isfinite(z)) throw InputError("a_ell: z must be finite");
  const bool far = std::sqrt(spec.B) * std::abs(z) > asymptotic_radius(spec.ell);
  return {z, average(spec.ell, spec.B, z, Moment::inverse_radius),
          far ? Regime::asymptotic : Regime::quadrature};
}

double landau_coulomb(int ell, double B, double z) {
  return average(ell, B, z, Moment::inverse_radius);
}

double landau_radius(int ell, double B, double z) { return average(ell, B, z, Moment::radius); }

double landau_coulomb_series(int ell, double B, double z) {
  if (z == 0.0) throw InputError("landau_coulomb_series: z must be non-zero");
  return average_by_series(ell, B, z, Moment::inverse_radius);
}

double landau_coulomb_quadrature(int ell, double B, double z) {
  return average_by_quadrature(ell, B, z, Moment::inverse_radius);
}

double scaling_check(double B, double z) {
  if (!(B > 0.0)) throw InputError("scaling_check: B must be positive");
  const double lhs = landau_coulomb(0, B, z);
  const double rhs = std::sqrt(B) * landau_coulomb(0, 1.0, std::sqrt(B) * z);
  return std::abs(lhs - rhs) / lhs;
}

VariableMap y_of_z(double z) {
  if (!std::isfinite(z)) throw InputError("y_of_z: z must be finite");
  const auto& t = VariableTable::instance();
  const double az = std::abs(z);
  const double sign = z < 0 ? -1.0 : 1.0;
  VariableMap m;
  m.z = z;
  m.log_z = std::log(az);
  if (az <= t.z_max()) {
    m.y = sign * t.near_y(az);
    const double a = landau_coulomb(0, 1.0, az);
    m.mu_at_y = 1.0 / a;
    m.log_mu = -std::log(a);
  } else {
    const double x = 1.0 / (az * az);
    m.y = sign * (t.offset + m.log_z - VariableTable::series_integral_x(x));
    m.log_mu = m.log_z - VariableTable::log_series(x);
    m.mu_at_y = std::exp(m.log_mu);
  }
  return m;
}

VariableMap z_of_y(double y) {
  if (!std::isfinite(y)) throw InputError("z_of_y: y must be finite");
  const auto& t = VariableTable::instance();
  const double ay = std::abs(y);
  const double sign = y < 0 ? -1.0 : 1.0;
  VariableMap m;
  m.y = y;
  if (ay <= t.y_max()) {
    const double az = t.near_z(ay);
    m.z = sign * az;
    m.log_z = std::log(az);
    const double a = landau_coulomb(0, 1.0, az);
    m.mu_at_y = 1.0 / a;
    m.log_mu = -std::log(a);
  } else {
    m.log_z = t.far_log_z(ay);
    m.z = sign * std::exp(m.log_z);
    m.log_mu = m.log_z - VariableTable::log_series(std::exp(-2.0 * m.log_z));
    m.mu_at_y = std::exp(m.log_mu);
  }
  return m;
}

double log_mu(double y) { return z_of_y(y).log_mu; }

double far_field_offset() { return VariableTable::instance().offset; }

double mu_bound_constant() {
  static const double c = [] {
    // mu is even; scan y >= 0 and include the y -> inf limit exp(-offset).
    double sup = std::exp(-far_field_offset());
    for (int i = 0; i <= 60 * 64; ++i) {
      const double y = i / 64.0;
      sup = std::max(sup, std::exp(log_mu(y) - y));
    }
    return sup;
  }();
  return c;
}

}  // namespace landau
