#pragma once

#include <Eigen/Core>

#include <cmath>
#include <numbers>

namespace hypmetric {

template <typename Scalar>
inline constexpr Scalar kPi = std::numbers::pi_v<Scalar>;

/// arcosh(1 + delta) for delta >= 0, accurate when delta is tiny.
///
/// Same expression as log(t + sqrt(t^2 - 1)) with t = 1 + delta, rearranged so
/// that t^2 - 1 = delta (2 + delta) is never formed by cancellation.
template <typename Scalar>
Scalar arcosh1p(Scalar delta) {
  using std::log1p;
  using std::sqrt;
  if (delta <= Scalar(0)) return Scalar(0);
  return log1p(delta + sqrt(delta * (Scalar(2) + delta)));
}

/// arcosh(t), t >= 1. Arguments within rounding of 1 map to 0.
template <typename Scalar>
Scalar arcosh(Scalar t) {
  return arcosh1p(t - Scalar(1));
}

/// cosh(r) - 1 without cancellation.
template <typename Scalar>
Scalar coshm1(Scalar r) {
  using std::sinh;
  const Scalar s = sinh(r / Scalar(2));
  return Scalar(2) * s * s;
}

/// Angle in [0, pi] between two nonzero vectors.
///
/// Uses 2 atan2(|a' - b'|, |a' + b'|) on the normalized vectors, which stays
/// accurate near 0 and pi where arccos of the cosine loses half the digits.
template <typename DerivedA, typename DerivedB>
typename DerivedA::Scalar angle_between(const Eigen::MatrixBase<DerivedA>& a,
                                        const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  using std::atan2;
  const auto ua = (a / a.norm()).eval();
  const auto ub = (b / b.norm()).eval();
  return Scalar(2) * atan2((ua - ub).norm(), (ua + ub).norm());
}

}  // namespace hypmetric
