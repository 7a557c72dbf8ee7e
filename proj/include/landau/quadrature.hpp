#ifndef LANDAU_QUADRATURE_HPP
#define LANDAU_QUADRATURE_HPP

// Globally adaptive Gauss-Kronrod (G7/K15) integration on finite intervals.

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace landau::quadrature {

template <typename Scalar>
struct Result {
  Scalar value{0};
  Scalar error{0};
  int evaluations{0};
  bool converged{true};
};

namespace detail {

// Non-negative Kronrod abscissae on [-1, 1]; odd indices are Gauss points.
inline constexpr std::array<long double, 8> kXk = {
    0.991455371120812639206854697526329L, 0.949107912342758524526189684047851L,
    0.864864423359769072789712788640926L, 0.741531185599394439863864773280788L,
    0.586087235467691130294144845693013L, 0.405845151377397166906606412076961L,
    0.207784955007898467600689403773245L, 0.000000000000000000000000000000000L};

inline constexpr std::array<long double, 8> kWk = {
    0.022935322010529224963732008058970L, 0.063092092629978553290700663189204L,
    0.104790010322250183839876322541518L, 0.140653259715525918745189590510238L,
    0.169004726639267902826583426598550L, 0.190350578064785409913256402421014L,
    0.204432940075298892414161999234649L, 0.209482141084727828012999174891714L};

inline constexpr std::array<long double, 4> kWg = {
    0.129484966168869693270611432679082L, 0.279705391489276667901467771423780L,
    0.381830050505118944950369775488975L, 0.417959183673469387755102040816327L};

}  // namespace detail

/// One 15-point Kronrod panel on [a, b] with the embedded 7-point Gauss
/// difference as error estimate.
template <typename Scalar, typename F>
Result<Scalar> gauss_kronrod_panel(F&& f, Scalar a, Scalar b) {
  const Scalar centre = Scalar(0.5) * (a + b);
  const Scalar half = Scalar(0.5) * (b - a);
  const Scalar fc = f(centre);
  Scalar kronrod = fc * Scalar(detail::kWk[7]);
  Scalar gauss = fc * Scalar(detail::kWg[3]);
  for (int j = 0; j < 7; ++j) {
    const Scalar dx = half * Scalar(detail::kXk[j]);
    const Scalar f1 = f(centre - dx);
    const Scalar f2 = f(centre + dx);
    kronrod += Scalar(detail::kWk[j]) * (f1 + f2);
    if (j % 2 == 1) gauss += Scalar(detail::kWg[j / 2]) * (f1 + f2);
  }
  Result<Scalar> r;
  r.value = kronrod * half;
  r.error = std::abs((kronrod - gauss) * half);
  r.evaluations = 15;
  return r;
}

/// Adaptive integral of f over [a, b]. Subdivides the panel with the largest
/// error estimate until error <= max(abs_tol, rel_tol * |value|).
template <typename Scalar, typename F>
Result<Scalar> integrate(F&& f, Scalar a, Scalar b, Scalar rel_tol,
                         Scalar abs_tol = Scalar(0), int max_panels = 4000) {
  struct Panel {
    Scalar a, b, value, error;
    bool operator<(const Panel& o) const { return error < o.error; }
  };
  Result<Scalar> total;
  if (a == b) return total;

  std::priority_queue<Panel> panels;
  auto first = gauss_kronrod_panel<Scalar>(f, a, b);
  panels.push({a, b, first.value, first.error});
  total.value = first.value;
  total.error = first.error;
  total.evaluations = first.evaluations;

  const Scalar eps = std::numeric_limits<Scalar>::epsilon();
  while (total.error > std::max(abs_tol, rel_tol * std::abs(total.value))) {
    if (static_cast<int>(panels.size()) >= max_panels) {
      total.converged = false;
      break;
    }
    Panel worst = panels.top();
    const Scalar mid = Scalar(0.5) * (worst.a + worst.b);
    if (std::abs(worst.b - worst.a) <= 64 * eps * std::max(std::abs(worst.a), std::abs(worst.b))) {
      // Cannot split further; accept the remaining error.
      total.converged = worst.error <= 64 * eps * std::abs(total.value);
      break;
    }
    panels.pop();
    auto left = gauss_kronrod_panel<Scalar>(f, worst.a, mid);
    auto right = gauss_kronrod_panel<Scalar>(f, mid, worst.b);
    total.value += left.value + right.value - worst.value;
    total.error += left.error + right.error - worst.error;
    total.evaluations += left.evaluations + right.evaluations;
    panels.push({worst.a, mid, left.value, left.error});
    panels.push({mid, worst.b, right.value, right.error});
  }

  // Re-sum to remove drift from the incremental updates.
  Scalar value = 0, error = 0;
  while (!panels.empty()) {
    value += panels.top().value;
    error += panels.top().error;
    panels.pop();
  }
  total.value = value;
  total.error = error;
  return total;
}

/// Adaptive integral over consecutive intervals [knots[i], knots[i+1]].
/// Each piece receives the same relative tolerance.
template <typename Scalar, typename F>
Result<Scalar> integrate_piecewise(F&& f, const std::vector<Scalar>& knots, Scalar rel_tol,
                                   Scalar abs_tol = Scalar(0), int max_panels = 4000) {
  Result<Scalar> total;
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    auto piece = integrate<Scalar>(f, knots[i], knots[i + 1], rel_tol, abs_tol, max_panels);
    total.value += piece.value;
    total.error += piece.error;
    total.evaluations += piece.evaluations;
    total.converged = total.converged && piece.converged;
  }
  return total;
}

}  // namespace landau::quadrature

#endif  // LANDAU_QUADRATURE_HPP
