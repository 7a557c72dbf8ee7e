#include "landau/verification/oracles.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

namespace landau::oracle {

namespace {

constexpr long double kPi = 3.141592653589793238462643383279502884L;

// Modified Lentz evaluation of
//   erfcx(x) = (1/sqrt(pi)) / (x + (1/2) / (x + 1 / (x + (3/2) / (x + ...)))).
long double erfcx_continued_fraction(long double x) {
  const long double tiny = 1e-300L;
  long double f = x, C = x, D = 0;
  for (int k = 1; k < 500; ++k) {
    const long double a = 0.5L * k;
    D = x + a * D;
    C = x + a / C;
    if (std::fabs(D) < tiny) D = tiny;
    if (std::fabs(C) < tiny) C = tiny;
    D = 1 / D;
    const long double delta = C * D;
    f *= delta;
    if (std::fabs(delta - 1) < 1e-19L) break;
  }
  return 1 / (std::sqrt(kPi) * f);
}

// M_k(z) for k = 0..kmax in one Simpson pass. The integrand is negligible
// once z x + x^2/2 exceeds ~90 plus the polynomial growth.
std::vector<long double> moments(int kmax, long double z) {
  const long double X = -z + std::sqrt(z * z + 2 * (90 + 4 * kmax));
  const int N = 40000;
  const long double h = X / N;
  std::vector<long double> m(kmax + 1, 0.0L);
  for (int i = 0; i <= N; ++i) {
    const long double x = i * h;
    const long double w = (i == 0 || i == N) ? 1 : (i % 2 ? 4 : 2);
    long double term = w * std::exp(-z * x - 0.5L * x * x);
    for (int k = 0; k <= kmax; ++k) {
      m[k] += term;
      term *= x;
    }
  }
  for (auto& v : m) v *= h / 3;
  return m;
}

double a_ell_unit(int ell, long double z) {
  z = std::fabs(z);
  const auto m = moments(2 * ell, z);
  long double sum = 0, binom = 1;
  for (int j = 0; j <= ell; ++j) {
    sum += binom * std::pow(2 * z, static_cast<long double>(ell - j)) * m[ell + j];
    binom = binom * (ell - j) / (j + 1);
  }
  long double norm = 1;
  for (int k = 1; k <= ell; ++k) norm *= 2.0L * k;
  return static_cast<double>(sum / norm);
}

double potential(int ell, double B, double z) {
  return ell == 0 ? a0_closed_form(B, z) : a_ell_moments(ell, B, z);
}

// Nodes and midpoints of z = c sinh(xi) on (-xi_max, xi_max) with n interior nodes.
struct DenseGrid {
  double h{0};
  std::vector<double> jac, jac_mid, a, a_mid;

  DenseGrid(double B, int ell, double L, int n) {
    const double c = 2.0 / std::sqrt(B);
    const double xi_max = std::asinh(L / c);
    h = 2 * xi_max / (n + 1);
    for (int i = 0; i < n; ++i) {
      const double xi = -xi_max + (i + 1) * h;
      jac.push_back(c * std::cosh(xi));
      a.push_back(potential(ell, B, c * std::sinh(xi)));
    }
    for (int i = 0; i <= n; ++i) {
      const double xi = -xi_max + (i + 0.5) * h;
      jac_mid.push_back(c * std::cosh(xi));
      a_mid.push_back(potential(ell, B, c * std::sinh(xi)));
    }
  }

  double lowest(double nu, double lambda, bool dense) const {
    const int n = static_cast<int>(jac.size());
    auto stiffness = [&](int m) { return 1.0 / ((1.0 + lambda + nu * a_mid[m]) * jac_mid[m] * h * h); };
    Eigen::VectorXd diag(n), sub(std::max(n - 1, 0));
    for (int i = 0; i < n; ++i) {
      diag(i) = (stiffness(i) + stiffness(i + 1)) / jac[i] + (1.0 - nu * a[i]);
      if (i + 1 < n) sub(i) = -stiffness(i + 1) / std::sqrt(jac[i] * jac[i + 1]);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    if (dense) {
      Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
      m.diagonal() = diag;
      m.diagonal(1) = sub;
      m.diagonal(-1) = sub;
      solver.compute(m, Eigen::EigenvaluesOnly);
    } else {
      solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
    }
    if (solver.info() != Eigen::Success) throw std::runtime_error("dense oracle: eigensolver failed");
    return solver.eigenvalues()(0);
  }
};

struct DenseProblem {
  double nu;
  DenseGrid coarse, fine;
  bool dense;

  DenseProblem(double nu_, double B, int ell, const DenseOptions& o)
      : nu(nu_),
        coarse(B, ell, o.L > 0 ? o.L : 400.0, o.n),
        fine(B, ell, o.L > 0 ? o.L : 400.0, 2 * o.n + 1),
        dense(o.dense_compute) {}

  double T(double lambda) const {
    const double e1 = coarse.lowest(nu, lambda, dense);
    const double e2 = fine.lowest(nu, lambda, dense);
    return (4 * e2 - e1) / 3;
  }
};

}  // namespace

long double erfcx(long double x) {
  if (x < 0) throw std::domain_error("erfcx oracle: x must be >= 0");
  if (x <= 20) return std::exp(x * x) * std::erfc(x);
  return erfcx_continued_fraction(x);
}

double a0_closed_form(double B, double z) {
  const long double sB = std::sqrt(static_cast<long double>(B));
  return static_cast<double>(sB * std::sqrt(kPi / 2) * erfcx(sB * std::fabs(z) / std::sqrt(2.0L)));
}

double a_ell_moments(int ell, double B, double z) {
  if (ell < 0) throw std::domain_error("moment oracle: ell must be >= 0");
  return std::sqrt(B) * a_ell_unit(ell, std::sqrt(static_cast<long double>(B)) * z);
}

double step_well_ground_state(double sigma, double V0) {
  auto g = [&](long double E) { return std::sqrt(E) * sigma - std::atan(std::sqrt((V0 - E) / E)); };
  long double lo = 0, hi = std::min<long double>(V0, std::pow(kPi / (2 * sigma), 2));
  for (int i = 0; i < 200 && hi - lo > 0; ++i) {
    const long double mid = 0.5L * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (g(mid) < 0 ? lo : hi) = mid;
  }
  return static_cast<double>(0.5L * (lo + hi));
}

double nu_bar_closed_form() {
  const long double c = 1 - std::sqrt(2.0L) / 2;
  const long double u = (-1 + std::sqrt(1 + 4 * c)) / 2;
  return static_cast<double>(u * u);
}

double gaussian_G_closed_form(double nu, double B) {
  const long double pi = kPi;
  return static_cast<double>(std::pow(2 * pi, -1.5L) * std::sqrt(static_cast<long double>(B)) *
                             (8 * pi / (3 * nu) - 4 * pi * nu));
}

double gaussian_certificate_closed_form(double nu) {
  const long double r = 3 * std::sqrt(2 * kPi) * nu / (3.0L * nu * nu - 2);
  return static_cast<double>(r * r);
}

double dense_T(double nu, double B, int ell, double lambda, const DenseOptions& options) {
  return DenseProblem(nu, B, ell, options).T(lambda);
}

double dense_ground_state(double nu, double B, int ell, const DenseOptions& options) {
  const DenseProblem problem(nu, B, ell, options);
  auto phi = [&](double x) { return problem.T(x) - x; };

  double lo = -1, hi = 1;
  if (phi(lo) <= 0) return -1;

  double x0 = 0, f0 = phi(x0);
  double x1 = 0.5, f1 = phi(x1);
  for (int it = 0; it < 100; ++it) {
    for (auto [x, f] : {std::pair{x0, f0}, std::pair{x1, f1}}) {
      if (f > 0 && x > lo) lo = x;
      if (f < 0 && x < hi) hi = x;
    }
    if (std::fabs(f1) < 1e-13 || hi - lo < 1e-13) break;
    double x2 = f1 != f0 ? x1 - f1 * (x1 - x0) / (f1 - f0) : 0.5 * (lo + hi);
    if (!(x2 > lo && x2 < hi)) x2 = 0.5 * (lo + hi);
    x0 = x1, f0 = f1;
    x1 = x2, f1 = phi(x2);
  }
  return x1;
}

}  // namespace landau::oracle
