#ifndef LANDAU_ROOTS_HPP
#define LANDAU_ROOTS_HPP

// Bracketing scalar solvers used by the fixed-point and critical-field code.

#include <cmath>
#include <utility>

#include "landau/errors.hpp"

namespace landau::roots {

struct Root {
  double x{0};
  double fx{0};
  int iterations{0};
};

/// Root of a monotone function on [lo, hi] by Illinois-modified regula falsi
/// with a bisection fallback. Requires f(lo) and f(hi) of opposite sign
/// (supplied by the caller so they are not re-evaluated).
template <typename F>
Root illinois(F&& f, double lo, double hi, double f_lo, double f_hi, double x_tol,
              double f_tol, int max_iter = 200) {
  if (f_lo == 0) return {lo, 0, 0};
  if (f_hi == 0) return {hi, 0, 0};
  if ((f_lo > 0) == (f_hi > 0)) throw NumericError("illinois: root not bracketed");

  Root best{lo, f_lo, 0};
  if (std::abs(f_hi) < std::abs(f_lo)) best = {hi, f_hi, 0};
  int side = 0;
  for (int it = 1; it <= max_iter; ++it) {
    double x = lo - f_lo * (hi - lo) / (f_hi - f_lo);
    // Fall back to bisection when the secant step degenerates.
    if (!(x > lo && x < hi)) x = 0.5 * (lo + hi);
    const double fx = f(x);
    if (std::abs(fx) < std::abs(best.fx)) best = {x, fx, it};
    best.iterations = it;
    if (std::abs(fx) <= f_tol || fx == 0) return {x, fx, it};
    if ((fx > 0) == (f_hi > 0)) {
      hi = x;
      f_hi = fx;
      if (side == -1) f_lo *= 0.5;
      side = -1;
    } else {
      lo = x;
      f_lo = fx;
      if (side == 1) f_hi *= 0.5;
      side = 1;
    }
    if (hi - lo <= x_tol) return best;
  }
  return best;
}

/// Plain bisection; f(lo) and f(hi) must have opposite signs.
template <typename F>
Root bisect(F&& f, double lo, double hi, double f_lo, double x_tol, int max_iter = 400) {
  Root r{0.5 * (lo + hi), 0, 0};
  for (int it = 1; it <= max_iter; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = f(mid);
    r = {mid, fm, it};
    if (fm == 0) return r;
    if ((fm > 0) == (f_lo > 0)) {
      lo = mid;
      f_lo = fm;
    } else {
      hi = mid;
    }
    if (hi - lo <= x_tol) break;
  }
  return r;
}

/// Golden-section minimisation of a unimodal f on [lo, hi].
template <typename F>
std::pair<double, double> golden_section_min(F&& f, double lo, double hi, double x_tol,
                                             int max_iter = 200) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double fc = f(c);
  double fd = f(d);
  for (int it = 0; it < max_iter && (hi - lo) > x_tol; ++it) {
    if (fc < fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = f(d);
    }
  }
  return fc < fd ? std::pair{c, fc} : std::pair{d, fd};
}

}  // namespace landau::roots

#endif  // LANDAU_ROOTS_HPP
