#ifndef LANDAU_TRIDIAGONAL_HPP
#define LANDAU_TRIDIAGONAL_HPP

// Symmetric tridiagonal pencils A - x W and the Sturm-sequence eigenvalue
// count.
//
// A is stored through its couplings c_i = -A(i, i+1) >= 0 and row slacks
// s_i = A(i,i) - c_{i-1} - c_i, W is a positive diagonal. For
// finite-difference operators the slack is the potential term, so the
// pivot recurrence below never subtracts the large 1/h^2 parts and small
// eigenvalues keep their relative accuracy.

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <limits>

namespace landau {

template <typename Scalar>
struct TridiagonalPencil {
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  Vector coupling;  ///< size n-1, c_i >= 0 couples rows i and i+1
  Vector slack;     ///< size n
  Vector weight;    ///< size n, > 0

  Eigen::Index size() const { return slack.size(); }

  Scalar diagonal(Eigen::Index i) const {
    Scalar d = slack(i);
    if (i > 0) d += coupling(i - 1);
    if (i + 1 < size()) d += coupling(i);
    return d;
  }
};

/// Number of generalised eigenvalues A v = E W v strictly below x.
///
/// With pivots d_i = c_i + t_i the LDL^T recurrence becomes
///   t_i = (s_i - x w_i) + c_{i-1} t_{i-1} / (c_{i-1} + t_{i-1}).
template <typename Scalar>
Eigen::Index sturm_count(const TridiagonalPencil<Scalar>& t, Scalar x) {
  const Eigen::Index n = t.size();
  const Scalar tiny = std::numeric_limits<Scalar>::min() / std::numeric_limits<Scalar>::epsilon();
  Eigen::Index count = 0;
  Scalar excess = t.slack(0) - x * t.weight(0);
  for (Eigen::Index i = 0;; ++i) {
    const Scalar c = i + 1 < n ? t.coupling(i) : Scalar(0);
    Scalar pivot = c + excess;
    if (pivot == Scalar(0)) {
      pivot = -tiny;
      excess = pivot - c;
    }
    if (pivot < 0) ++count;
    if (i + 1 == n) break;
    excess = (t.slack(i + 1) - x * t.weight(i + 1)) + c * (excess / pivot);
  }
  return count;
}

/// min_i s_i / w_i: at that shift A - x W is weakly diagonally dominant with
/// a non-negative diagonal, hence positive semidefinite.
template <typename Scalar>
Scalar slack_lower_bound(const TridiagonalPencil<Scalar>& t) {
  return t.slack.cwiseQuotient(t.weight).minCoeff();
}

/// v^T A v / v^T W v, with v^T A v = sum s_i v_i^2 + sum c_i (v_i - v_{i+1})^2.
template <typename Scalar, typename Derived>
Scalar rayleigh_quotient(const TridiagonalPencil<Scalar>& t, const Eigen::MatrixBase<Derived>& v) {
  const Eigen::Index n = t.size();
  Scalar num = t.slack.dot(v.cwiseAbs2());
  if (n > 1) num += t.coupling.dot((v.head(n - 1) - v.tail(n - 1)).cwiseAbs2());
  return num / t.weight.dot(v.cwiseAbs2());
}

/// Smallest Rayleigh quotient over half-sine trial vectors supported on
/// windows of width n, n/2, n/4, ... centred on the smallest slack ratio.
/// An upper bound for the lowest eigenvalue that stays close to it when the
/// potential has steep walls.
template <typename Scalar>
Scalar sine_trial_upper_bound(const TridiagonalPencil<Scalar>& t) {
  using Vector = typename TridiagonalPencil<Scalar>::Vector;
  const Eigen::Index n = t.size();
  const Scalar pi = Scalar(3.141592653589793238462643383279502884L);
  Eigen::Index centre = 0;
  t.slack.cwiseQuotient(t.weight).minCoeff(&centre);
  Scalar best = std::numeric_limits<Scalar>::infinity();
  Vector trial(n);
  for (Eigen::Index width = n; width >= 3; width /= 2) {
    const Eigen::Index first = std::clamp<Eigen::Index>(centre - width / 2, 0, n - width);
    trial.setZero();
    for (Eigen::Index i = 0; i < width; ++i) {
      trial(first + i) = std::sin(pi * Scalar(i + 1) / Scalar(width + 1));
    }
    best = std::min(best, rayleigh_quotient(t, trial));
  }
  return best;
}

/// Smallest eigenvalue by bisection on the Sturm count, bracketed by
/// slack_lower_bound and sine_trial_upper_bound; stops once the bracket is
/// narrower than abs_tol + rel_tol * |eigenvalue|.
template <typename Scalar>
Scalar lowest_eigenvalue(const TridiagonalPencil<Scalar>& t, Scalar abs_tol,
                         Scalar rel_tol = Scalar(0)) {
  if (t.size() == 1) return t.slack(0) / t.weight(0);

  Scalar hi = sine_trial_upper_bound(t);
  Scalar lo = slack_lower_bound(t);
  // Make sure the upper end really lies above the eigenvalue.
  hi += 4 * std::numeric_limits<Scalar>::epsilon() * (std::abs(hi) + std::abs(lo));
  while (sturm_count(t, hi) == 0) hi += (hi - lo) + std::numeric_limits<Scalar>::min();

  for (int it = 0; it < 4096; ++it) {
    const Scalar mid = lo + Scalar(0.5) * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    if (hi - lo <= abs_tol + rel_tol * std::max(std::abs(lo), std::abs(hi))) break;
    if (sturm_count(t, mid) >= 1) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return lo + Scalar(0.5) * (hi - lo);
}

/// Dense symmetric matrix W^{-1/2} A W^{-1/2}.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> to_dense(const TridiagonalPencil<Scalar>& t) {
  const Eigen::Index n = t.size();
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> m =
      Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = t.diagonal(i) / t.weight(i);
  for (Eigen::Index i = 0; i + 1 < n; ++i) {
    m(i, i + 1) = m(i + 1, i) = -t.coupling(i) / std::sqrt(t.weight(i) * t.weight(i + 1));
  }
  return m;
}

}  // namespace landau

#endif  // LANDAU_TRIDIAGONAL_HPP
