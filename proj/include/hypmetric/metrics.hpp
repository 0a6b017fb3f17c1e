#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <cmath>

#include "hypmetric/errors.hpp"
#include "hypmetric/special_functions.hpp"
#include "hypmetric/types.hpp"

namespace hypmetric {

/// Unchecked metric kernels on coordinate vectors.
///
/// Callers guarantee that both points are finite and inside the domain; the
/// sampling code evaluates millions of distances from one validated center.
namespace kernel {

template <typename Scalar, typename DA, typename DB>
Scalar j(const Domain<Scalar>& domain, const Eigen::MatrixBase<DA>& x,
         const Eigen::MatrixBase<DB>& y) {
  using std::log1p;
  using std::min;
  const Scalar d = min(domain.boundary_distance(x), domain.boundary_distance(y));
  return log1p((x - y).norm() / d);
}

/// k on R^n \ {0}: the space is isometric to R x S^{n-1} through
/// x -> (log|x|, x/|x|), so k = sqrt(angle^2 + log^2(|y|/|x|)).
template <typename DA, typename DB>
typename DA::Scalar k_punctured(const Eigen::MatrixBase<DA>& x, const Eigen::MatrixBase<DB>& y) {
  using std::hypot;
  using std::log;
  const auto theta = angle_between(x, y);
  const auto radial = log(y.norm() / x.norm());
  return hypot(theta, radial);
}

/// k on {x_n > 0}: cosh k = 1 + |x - y|^2 / (2 x_n y_n).
template <typename DA, typename DB>
typename DA::Scalar k_halfspace(const Eigen::MatrixBase<DA>& x, const Eigen::MatrixBase<DB>& y) {
  using Scalar = typename DA::Scalar;
  const Index n = x.size();
  return arcosh1p((x - y).squaredNorm() / (Scalar(2) * x(n - 1) * y(n - 1)));
}

template <typename DA, typename DB>
typename DA::Scalar q(const Eigen::MatrixBase<DA>& x, const Eigen::MatrixBase<DB>& y) {
  using Scalar = typename DA::Scalar;
  using std::sqrt;
  return (x - y).norm() / (sqrt(Scalar(1) + x.squaredNorm()) * sqrt(Scalar(1) + y.squaredNorm()));
}

template <typename Scalar, typename DA, typename DB>
Scalar k(const Domain<Scalar>& domain, const Eigen::MatrixBase<DA>& x,
         const Eigen::MatrixBase<DB>& y) {
  switch (domain.kind()) {
    case DomainKind::PuncturedSpace: return k_punctured(x, y);
    case DomainKind::HalfSpace: return k_halfspace(x, y);
    case DomainKind::General: break;
  }
  throw UnsupportedClosedForm(
      "no closed form for the quasihyperbolic metric in a general domain; use the grid oracle");
}

template <typename Scalar, typename DA, typename DB>
Scalar distance(MetricKind metric, const Domain<Scalar>& domain, const Eigen::MatrixBase<DA>& x,
                const Eigen::MatrixBase<DB>& y) {
  switch (metric) {
    case MetricKind::J: return j(domain, x, y);
    case MetricKind::K: return k(domain, x, y);
    case MetricKind::Q: return q(x, y);
  }
  return Scalar(0);
}

}  // namespace kernel

namespace detail {

template <typename Scalar>
void require_same_dim(const Point<Scalar>& x, const Point<Scalar>& y) {
  if (x.dim() != y.dim()) throw InvalidArgument("points have different dimensions");
}

}  // namespace detail

/// Distance ratio metric j_G(x, y) = log(1 + |x - y| / min{d(x), d(y)}).
template <typename Scalar>
Scalar dist_j(const Domain<Scalar>& domain, const Point<Scalar>& x, const Point<Scalar>& y) {
  domain.require(x, "x");
  domain.require(y, "y");
  detail::require_same_dim(x, y);
  return kernel::j(domain, x.coords(), y.coords());
}

/// Quasihyperbolic metric in closed form. Only the punctured space and the
/// half-space have one; general domains throw UnsupportedClosedForm.
template <typename Scalar>
Scalar dist_k(const Domain<Scalar>& domain, const Point<Scalar>& x, const Point<Scalar>& y) {
  if (domain.kind() == DomainKind::General) {
    throw UnsupportedClosedForm(
        "no closed form for the quasihyperbolic metric in a general domain; use the grid oracle");
  }
  domain.require(x, "x");
  domain.require(y, "y");
  detail::require_same_dim(x, y);
  if (x == y) return Scalar(0);
  return kernel::k(domain, x.coords(), y.coords());
}

/// Chordal metric on R^n ∪ {∞}.
template <typename Scalar>
Scalar dist_q(const Point<Scalar>& x, const Point<Scalar>& y) {
  using std::sqrt;
  if (x.is_infinity() && y.is_infinity()) return Scalar(0);
  if (x.is_infinity()) return Scalar(1) / sqrt(Scalar(1) + y.coords().squaredNorm());
  if (y.is_infinity()) return Scalar(1) / sqrt(Scalar(1) + x.coords().squaredNorm());
  detail::require_same_dim(x, y);
  return kernel::q(x.coords(), y.coords());
}

template <typename Scalar>
Scalar distance(MetricKind metric, const Domain<Scalar>& domain, const Point<Scalar>& x,
                const Point<Scalar>& y) {
  switch (metric) {
    case MetricKind::J: return dist_j(domain, x, y);
    case MetricKind::K: return dist_k(domain, x, y);
    case MetricKind::Q: return dist_q(x, y);
  }
  return Scalar(0);
}

/// r_q for a center at Euclidean norm `abs_x`: the largest chordal radius for
/// which B_q(x, r) is a Euclidean ball that misses the origin.
template <typename Scalar>
Scalar r_q(Scalar abs_x) {
  using std::min;
  using std::sqrt;
  if (!(abs_x > Scalar(0)) || !std::isfinite(static_cast<double>(abs_x))) {
    throw InvalidArgument("r_q needs a finite nonzero |x|");
  }
  const Scalar s = sqrt(Scalar(1) + abs_x * abs_x);
  return min(Scalar(1) / s, abs_x / s);
}

template <typename Scalar>
Scalar r_q(const Point<Scalar>& x) {
  if (x.is_infinity()) throw InvalidArgument("r_q is undefined at infinity");
  return r_q(x.norm());
}

/// Membership in the open metric ball.
///
/// For chordal balls the point at infinity is admissible and tested against
/// q(x, ∞); every finite point must also lie in the ball's domain.
template <typename Scalar>
bool ball_contains(const BallSpec<Scalar>& ball, const Point<Scalar>& y) {
  ball.validate();
  if (y.is_infinity()) {
    if (ball.metric != MetricKind::Q) throw InvalidArgument("only chordal balls can contain infinity");
    return dist_q(ball.center, y) < ball.radius;
  }
  if (ball.metric == MetricKind::K && ball.domain.kind() == DomainKind::General) {
    throw UnsupportedClosedForm("k-ball membership in a general domain needs the grid oracle");
  }
  if (!ball.domain.contains(y)) return false;
  return distance(ball.metric, ball.domain, ball.center, y) < ball.radius;
}

/// Upper end of the radius range where B_q(x, r) is a bounded Euclidean ball.
template <typename Scalar>
Scalar chordal_ball_bound(Scalar abs_x) {
  using std::sqrt;
  return Scalar(1) / sqrt(Scalar(1) + abs_x * abs_x);
}

/// B_q(x, r) = B^n(y, s) with y = x / (1 - r^2(1+|x|^2)) and
/// s = r (1+|x|^2) sqrt(1-r^2) / (1 - r^2(1+|x|^2)), for 0 < r < 1/sqrt(1+|x|^2).
template <typename Scalar, typename Derived>
EuclideanBall<Scalar> chordal_ball_as_euclidean(const Eigen::MatrixBase<Derived>& x, Scalar r) {
  using std::sqrt;
  const Scalar s2 = Scalar(1) + x.squaredNorm();
  if (!(r > Scalar(0)) || !(r * r * s2 < Scalar(1))) {
    throw OutOfValidity("chordal ball as Euclidean ball", 0.0,
                        static_cast<double>(chordal_ball_bound(sqrt(x.squaredNorm()))));
  }
  const Scalar denom = Scalar(1) - r * r * s2;
  return {Vector<Scalar>(x / denom), r * s2 * sqrt(Scalar(1) - r * r) / denom};
}

template <typename Scalar>
EuclideanBall<Scalar> chordal_ball_as_euclidean(const Point<Scalar>& x, Scalar r) {
  if (x.is_infinity()) throw InvalidArgument("chordal ball center must be finite");
  return chordal_ball_as_euclidean(x.coords(), r);
}

/// B_k(x, r) in the half-space is the Euclidean ball with center
/// x + x_n (cosh r - 1) e_n and radius x_n sinh r.
template <typename Scalar, typename Derived>
EuclideanBall<Scalar> qh_ball_as_euclidean_halfspace(const Eigen::MatrixBase<Derived>& x, Scalar r) {
  using std::sinh;
  const Index n = x.size();
  const Scalar xn = x(n - 1);
  if (!(xn > Scalar(0))) throw DomainViolation("center lies outside the half-space");
  if (!(r > Scalar(0))) throw InvalidArgument("ball radius must be positive");
  Vector<Scalar> center = x;
  center(n - 1) += xn * coshm1(r);
  return {std::move(center), xn * sinh(r)};
}

template <typename Scalar>
EuclideanBall<Scalar> qh_ball_as_euclidean_halfspace(const Point<Scalar>& x, Scalar r) {
  Domain<Scalar>::half_space().require(x, "ball center");
  return qh_ball_as_euclidean_halfspace(x.coords(), r);
}

/// Inversion in the unit sphere, x -> x / |x|^2.
template <typename Scalar>
Point<Scalar> invert(const Point<Scalar>& x) {
  if (x.is_infinity()) throw InvalidArgument("cannot invert infinity");
  const Scalar n2 = x.coords().squaredNorm();
  if (!(n2 > Scalar(0))) throw InvalidArgument("cannot invert the origin");
  return Point<Scalar>(Vector<Scalar>(x.coords() / n2));
}

}  // namespace hypmetric
