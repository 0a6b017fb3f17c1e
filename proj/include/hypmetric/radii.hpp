#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hypmetric/errors.hpp"
#include "hypmetric/special_functions.hpp"
#include "hypmetric/types.hpp"

namespace hypmetric {

/// One inclusion-radius formula.
///
/// Paired ids (P_J_IN_Q / P_Q_IN_J and friends) come from a single statement
/// with both radii; each id carries only its own inclusion claim.
enum class RelationId {
  GEN_JK,
  P_J_IN_K,
  P_K_IN_J,
  P_J_IN_Q,
  P_Q_IN_J,
  P_Q_IN_J_FROM_JR,
  P_K_IN_Q,
  P_Q_IN_K,
  P_Q_IN_K_FROM_KR,
  P_UNIFORM_IN_Q,
  P_UNIFORM_Q_OUT,
  H_J_IN_K,
  H_K_IN_J,
  H_J_IN_Q,
  H_Q_IN_J,
  H_Q_IN_J_FROM_JR,
  H_K_IN_Q,
  H_Q_IN_K,
  H_Q_IN_K_FROM_KR,
  H_UNIFORM_IN_Q,
  H_UNIFORM_Q_OUT,
};

inline constexpr std::array<RelationId, 21> kAllRelations = {
    RelationId::GEN_JK,           RelationId::P_J_IN_K,         RelationId::P_K_IN_J,
    RelationId::P_J_IN_Q,         RelationId::P_Q_IN_J,         RelationId::P_Q_IN_J_FROM_JR,
    RelationId::P_K_IN_Q,         RelationId::P_Q_IN_K,         RelationId::P_Q_IN_K_FROM_KR,
    RelationId::P_UNIFORM_IN_Q,   RelationId::P_UNIFORM_Q_OUT,  RelationId::H_J_IN_K,
    RelationId::H_K_IN_J,         RelationId::H_J_IN_Q,         RelationId::H_Q_IN_J,
    RelationId::H_Q_IN_J_FROM_JR, RelationId::H_K_IN_Q,         RelationId::H_Q_IN_K,
    RelationId::H_Q_IN_K_FROM_KR, RelationId::H_UNIFORM_IN_Q,   RelationId::H_UNIFORM_Q_OUT,
};

inline std::string_view to_string(RelationId id) {
  switch (id) {
    case RelationId::GEN_JK: return "GEN_JK";
    case RelationId::P_J_IN_K: return "P_J_IN_K";
    case RelationId::P_K_IN_J: return "P_K_IN_J";
    case RelationId::P_J_IN_Q: return "P_J_IN_Q";
    case RelationId::P_Q_IN_J: return "P_Q_IN_J";
    case RelationId::P_Q_IN_J_FROM_JR: return "P_Q_IN_J_FROM_JR";
    case RelationId::P_K_IN_Q: return "P_K_IN_Q";
    case RelationId::P_Q_IN_K: return "P_Q_IN_K";
    case RelationId::P_Q_IN_K_FROM_KR: return "P_Q_IN_K_FROM_KR";
    case RelationId::P_UNIFORM_IN_Q: return "P_UNIFORM_IN_Q";
    case RelationId::P_UNIFORM_Q_OUT: return "P_UNIFORM_Q_OUT";
    case RelationId::H_J_IN_K: return "H_J_IN_K";
    case RelationId::H_K_IN_J: return "H_K_IN_J";
    case RelationId::H_J_IN_Q: return "H_J_IN_Q";
    case RelationId::H_Q_IN_J: return "H_Q_IN_J";
    case RelationId::H_Q_IN_J_FROM_JR: return "H_Q_IN_J_FROM_JR";
    case RelationId::H_K_IN_Q: return "H_K_IN_Q";
    case RelationId::H_Q_IN_K: return "H_Q_IN_K";
    case RelationId::H_Q_IN_K_FROM_KR: return "H_Q_IN_K_FROM_KR";
    case RelationId::H_UNIFORM_IN_Q: return "H_UNIFORM_IN_Q";
    case RelationId::H_UNIFORM_Q_OUT: return "H_UNIFORM_Q_OUT";
  }
  return "?";
}

inline RelationId relation_from_string(std::string_view name) {
  for (RelationId id : kAllRelations) {
    if (to_string(id) == name) return id;
  }
  throw InvalidArgument("unknown relation id '" + std::string(name) + "'");
}

/// Domain the formula is stated for. GEN_JK holds in every proper subdomain.
inline DomainKind relation_domain(RelationId id) {
  if (id == RelationId::GEN_JK) return DomainKind::General;
  return to_string(id)[0] == 'P' ? DomainKind::PuncturedSpace : DomainKind::HalfSpace;
}

enum class AbsXUse { None, Required, Optional };

inline AbsXUse abs_x_use(RelationId id) {
  switch (id) {
    case RelationId::GEN_JK:
    case RelationId::P_J_IN_K:
    case RelationId::P_K_IN_J:
    case RelationId::P_UNIFORM_Q_OUT:
    case RelationId::H_J_IN_K:
    case RelationId::H_K_IN_J:
    case RelationId::H_UNIFORM_Q_OUT: return AbsXUse::None;
    case RelationId::P_UNIFORM_IN_Q:
    case RelationId::H_UNIFORM_IN_Q: return AbsXUse::Optional;
    default: return AbsXUse::Required;
  }
}

/// Half-space formulas involving q are stated for centers on the e_n axis
/// only; the chordal metric is not translation invariant.
inline bool axis_centered(RelationId id) {
  return relation_domain(id) == DomainKind::HalfSpace && id != RelationId::H_J_IN_K &&
         id != RelationId::H_K_IN_J;
}

/// Open interval (lo, hi); hi may be +infinity.
template <typename Scalar>
struct Interval {
  Scalar lo;
  Scalar hi;

  bool contains(Scalar r) const { return r > lo && r < hi; }
};

template <typename Scalar>
struct RadiusParams {
  Scalar r;
  std::optional<Scalar> abs_x;
};

/// Radii produced by one formula.
///
/// `m_k` / `M_k` hold the k-ball radius where a row gives separate radii for
/// j and k (the half-space |x|-free rows); everywhere else they are empty.
template <typename Scalar>
struct RadiusResult {
  RelationId id;
  std::optional<Scalar> m;
  std::optional<Scalar> M;
  std::optional<Scalar> m_k;
  std::optional<Scalar> M_k;
  Interval<Scalar> validity;
  bool sharp_m = false;
  bool sharp_M = false;
  std::string source;
};

enum class RadiusRole { Given, Inner, Outer, InnerK, OuterK };

/// B_{inner}(x, inner radius) ⊂ B_{outer}(x, outer radius).
struct InclusionClaim {
  MetricKind inner;
  RadiusRole inner_radius;
  MetricKind outer;
  RadiusRole outer_radius;
  bool sharp;
};

inline std::vector<InclusionClaim> inclusion_claims(RelationId id) {
  using M = MetricKind;
  using R = RadiusRole;
  switch (id) {
    case RelationId::GEN_JK:
      return {{M::J, R::Inner, M::K, R::Given, false},
              {M::K, R::Given, M::J, R::Given, true},
              {M::J, R::Given, M::K, R::Outer, false}};
    case RelationId::P_J_IN_K:
    case RelationId::H_J_IN_K: return {{M::J, R::Inner, M::K, R::Given, true}};
    case RelationId::P_K_IN_J:
    case RelationId::H_K_IN_J: return {{M::J, R::Given, M::K, R::Outer, true}};
    case RelationId::P_J_IN_Q:
    case RelationId::H_J_IN_Q: return {{M::J, R::Inner, M::Q, R::Given, true}};
    case RelationId::P_Q_IN_J:
    case RelationId::H_Q_IN_J: return {{M::Q, R::Given, M::J, R::Outer, true}};
    case RelationId::P_Q_IN_J_FROM_JR:
    case RelationId::H_Q_IN_J_FROM_JR:
      return {{M::Q, R::Inner, M::J, R::Given, true}, {M::J, R::Given, M::Q, R::Outer, true}};
    case RelationId::P_K_IN_Q: return {{M::K, R::Inner, M::Q, R::Given, false}};
    case RelationId::P_Q_IN_K: return {{M::Q, R::Given, M::K, R::Outer, false}};
    case RelationId::H_K_IN_Q: return {{M::K, R::Inner, M::Q, R::Given, true}};
    case RelationId::H_Q_IN_K: return {{M::Q, R::Given, M::K, R::Outer, true}};
    case RelationId::P_Q_IN_K_FROM_KR:
      return {{M::Q, R::Inner, M::K, R::Given, false}, {M::K, R::Given, M::Q, R::Outer, false}};
    case RelationId::H_Q_IN_K_FROM_KR:
      return {{M::Q, R::Inner, M::K, R::Given, true}, {M::K, R::Given, M::Q, R::Outer, true}};
    case RelationId::P_UNIFORM_IN_Q:
      return {{M::J, R::Inner, M::Q, R::Given, false}, {M::K, R::Inner, M::Q, R::Given, false}};
    case RelationId::H_UNIFORM_IN_Q:
      return {{M::J, R::Inner, M::Q, R::Given, false}, {M::K, R::InnerK, M::Q, R::Given, false}};
    case RelationId::P_UNIFORM_Q_OUT:
      return {{M::J, R::Given, M::Q, R::Outer, false}, {M::K, R::Given, M::Q, R::Outer, false}};
    case RelationId::H_UNIFORM_Q_OUT:
      return {{M::J, R::Given, M::Q, R::Outer, false}, {M::K, R::Given, M::Q, R::OuterK, false}};
  }
  return {};
}

/// The radius a claim refers to, or empty when the row does not provide it
/// at this r (H_UNIFORM_Q_OUT's k radius stops at log(1 + sqrt 2)).
template <typename Scalar>
std::optional<Scalar> claim_radius(const RadiusResult<Scalar>& res, RadiusRole role, Scalar r) {
  switch (role) {
    case RadiusRole::Given: return r;
    case RadiusRole::Inner: return res.m;
    case RadiusRole::Outer: return res.M;
    case RadiusRole::InnerK: return res.m_k;
    case RadiusRole::OuterK: return res.M_k;
  }
  return std::nullopt;
}

/// Which ratio a row claims tends to 1 as r -> 0.
enum class LimitKind { MOverM, ROverM, MOverR };

inline std::string_view to_string(LimitKind kind) {
  switch (kind) {
    case LimitKind::MOverM: return "M/m";
    case LimitKind::ROverM: return "r/m";
    case LimitKind::MOverR: return "M/r";
  }
  return "?";
}

inline std::optional<LimitKind> limit_claim(RelationId id) {
  switch (id) {
    case RelationId::P_J_IN_K:
    case RelationId::H_J_IN_K: return LimitKind::ROverM;
    case RelationId::P_K_IN_J:
    case RelationId::H_K_IN_J:
    case RelationId::P_Q_IN_K_FROM_KR: return LimitKind::MOverR;
    case RelationId::P_UNIFORM_IN_Q:
    case RelationId::P_UNIFORM_Q_OUT:
    case RelationId::H_UNIFORM_IN_Q:
    case RelationId::H_UNIFORM_Q_OUT: return std::nullopt;
    default: return LimitKind::MOverM;
  }
}

namespace detail {

template <typename Scalar>
[[noreturn]] void out_of_validity(RelationId id, const Interval<Scalar>& iv) {
  throw OutOfValidity(std::string(to_string(id)), static_cast<double>(iv.lo),
                      static_cast<double>(iv.hi));
}

template <typename Scalar>
Scalar inf() {
  return std::numeric_limits<Scalar>::infinity();
}

/// Upper radius for P_K_IN_Q and P_Q_IN_K. The printed bound
/// 2|x| / (sqrt(1+|x|^2) sqrt(1+9|x|^2)) is only right for |x| >= 1; below
/// that it exceeds r_q(x). The formula is symmetric under |x| -> 1/|x|, so
/// the bound is evaluated at max(|x|, 1/|x|).
template <typename Scalar>
Scalar punctured_kq_bound(Scalar a) {
  using std::max;
  using std::sqrt;
  const Scalar t = max(a, Scalar(1) / a);
  return Scalar(2) * t / (sqrt(Scalar(1) + t * t) * sqrt(Scalar(1) + Scalar(9) * t * t));
}

template <typename Scalar>
Scalar r_q_of(Scalar a) {
  using std::min;
  using std::sqrt;
  const Scalar s = sqrt(Scalar(1) + a * a);
  return min(Scalar(1), a) / s;
}

template <typename Scalar>
Scalar require_abs_x(RelationId id, const std::optional<Scalar>& abs_x) {
  if (!abs_x) throw InvalidArgument(std::string(to_string(id)) + " needs abs_x");
  const Scalar a = *abs_x;
  if (!(a > Scalar(0)) || !std::isfinite(static_cast<double>(a))) {
    throw InvalidArgument("abs_x must be positive and finite");
  }
  return a;
}

/// For chordal radii below r_q(x): r / sqrt(1-r^2) < |x| < sqrt(1-r^2) / r.
template <typename Scalar>
void require_chordal_bounds(RelationId id, Scalar r, Scalar a) {
  using std::sqrt;
  const Scalar s = sqrt(Scalar(1) - r * r);
  if (!(r / s < a && a < s / r)) {
    throw OutOfValidity(std::string(to_string(id)) + ": |x| outside (r/sqrt(1-r^2), sqrt(1-r^2)/r)",
                        static_cast<double>(r / s), static_cast<double>(s / r));
  }
}

}  // namespace detail

/// Open validity interval for r, given |x| where the row depends on it.
template <typename Scalar>
Interval<Scalar> validity_interval(RelationId id, std::optional<Scalar> abs_x = std::nullopt) {
  using std::log;
  using std::sqrt;
  const Scalar zero(0);
  const auto a = [&] { return detail::require_abs_x(id, abs_x); };
  switch (id) {
    case RelationId::GEN_JK: return {zero, log(Scalar(2))};
    case RelationId::P_J_IN_K: return {zero, kPi<Scalar> / Scalar(2)};
    case RelationId::P_K_IN_J: return {zero, log(Scalar(3))};
    case RelationId::P_J_IN_Q:
    case RelationId::P_Q_IN_J:
    case RelationId::H_J_IN_Q:
    case RelationId::H_Q_IN_J:
    case RelationId::H_K_IN_Q:
    case RelationId::H_Q_IN_K: return {zero, detail::r_q_of(a())};
    case RelationId::P_Q_IN_J_FROM_JR:
    case RelationId::P_Q_IN_K_FROM_KR: {
      const Scalar v = a();
      return {zero, log(Scalar(1) + v + Scalar(1) / v)};
    }
    case RelationId::P_K_IN_Q:
    case RelationId::P_Q_IN_K: return {zero, detail::punctured_kq_bound(a())};
    case RelationId::P_UNIFORM_IN_Q:
    case RelationId::H_UNIFORM_IN_Q:
      if (abs_x) return {zero, detail::r_q_of(a())};
      return {zero, Scalar(1) / sqrt(Scalar(2))};
    case RelationId::P_UNIFORM_Q_OUT: return {zero, log(Scalar(1) + sqrt(Scalar(2)))};
    case RelationId::H_J_IN_K:
    case RelationId::H_K_IN_J:
    case RelationId::H_Q_IN_J_FROM_JR:
    case RelationId::H_Q_IN_K_FROM_KR:
    case RelationId::H_UNIFORM_Q_OUT: return {zero, detail::inf<Scalar>()};
  }
  return {zero, zero};
}

namespace formulas {

// Closed forms shared by several rows. a = |x|, s = sqrt(1 - r^2),
// c = e^r - 1. Logarithms of ratios are written as log1p of the excess,
// using 1 - r^2(1+a^2) = (s - r a)(s + r a) and
// a - r s (1+a^2) = (s a - r)(s - r a).

template <typename Scalar>
Scalar j_in_q_m(Scalar r, Scalar a) {
  using std::log1p;
  return log1p(r * (a + Scalar(1) / a));
}

template <typename Scalar>
Scalar j_in_q_M(Scalar r, Scalar a) {
  using std::log1p;
  using std::sqrt;
  const Scalar s = sqrt(Scalar(1) - r * r);
  const Scalar w = Scalar(1) + a * a;
  if (a <= Scalar(1)) return log1p(r * w / (s * a - r));
  return log1p(r * w / (a * (s - r * a)));
}

/// Chordal radius of a j- or k-sphere point at Euclidean offset from x:
/// a c / sqrt((1+a^2)(e^{2r} + a^2)) and the |x| -> 1/|x| mirror.
template <typename Scalar>
Scalar q_near(Scalar a, Scalar c, Scalar e2r) {
  using std::sqrt;
  return a * c / sqrt((Scalar(1) + a * a) * (e2r + a * a));
}

template <typename Scalar>
Scalar q_far(Scalar a, Scalar c, Scalar e2r) {
  using std::sqrt;
  return a * c / sqrt((Scalar(1) + a * a) * (Scalar(1) + e2r * a * a));
}

template <typename Scalar>
Scalar uniform_q_out(Scalar r) {
  using std::expm1;
  using std::sqrt;
  const Scalar c = expm1(r);
  return sqrt(c * (c + sqrt(Scalar(16) + c * c))) / (Scalar(2) * sqrt(Scalar(2)));
}

template <typename Scalar>
Scalar uniform_in_q(Scalar r) {
  using std::log1p;
  using std::sqrt;
  return log1p(Scalar(2) * r * r / sqrt(Scalar(1) - r * r));
}

/// f(r, x) of P_K_IN_Q; M = 2 arcsin f.
template <typename Scalar>
Scalar punctured_kq_f(Scalar r, Scalar a) {
  using std::sqrt;
  const Scalar s = sqrt(Scalar(1) - r * r);
  const Scalar num = r * (Scalar(1) + a * a);
  if (a <= Scalar(1)) return num / (Scalar(2) * s * a - Scalar(2) * r);
  return num / (Scalar(2) * s * a - Scalar(2) * r * a * a);
}

}  // namespace formulas

/// Evaluates the formula row `id` at params.r (and params.abs_x).
///
/// Throws OutOfValidity when r leaves the row's open interval, and
/// InvalidArgument when abs_x is missing or supplied to a row without |x|
/// dependence.
template <typename Scalar>
RadiusResult<Scalar> inclusion_radius(RelationId id, const RadiusParams<Scalar>& params) {
  using std::asin;
  using std::exp;
  using std::expm1;
  using std::log1p;
  using std::max;
  using std::min;
  using std::sinh;
  using std::sin;
  using std::sqrt;
  using std::tanh;

  const Scalar r = params.r;
  if (!std::isfinite(static_cast<double>(r))) throw InvalidArgument("r must be finite");
  if (abs_x_use(id) == AbsXUse::None && params.abs_x) {
    throw InvalidArgument(std::string(to_string(id)) + " does not depend on abs_x");
  }
  const auto iv = validity_interval<Scalar>(id, params.abs_x);
  if (!iv.contains(r)) detail::out_of_validity(id, iv);

  RadiusResult<Scalar> res{id, {}, {}, {}, {}, iv, false, false, {}};
  const Scalar one(1);
  const Scalar two(2);
  const Scalar c = expm1(r);

  switch (id) {
    case RelationId::GEN_JK:
      res.m = log1p(-expm1(-r));
      res.M = -log1p(-c);
      res.source = "general domain: j/k ball chain";
      break;
    case RelationId::P_J_IN_K:
      res.m = log1p(two * sin(r / two));
      res.sharp_m = true;
      res.source = "punctured space: j-ball inside k-ball";
      break;
    case RelationId::P_K_IN_J:
      res.M = two * asin(c / two);
      res.sharp_M = true;
      res.source = "punctured space: j-ball inside k-ball, outer radius";
      break;
    case RelationId::P_J_IN_Q:
    case RelationId::P_Q_IN_J: {
      const Scalar a = *params.abs_x;
      detail::require_chordal_bounds(id, r, a);
      res.m = formulas::j_in_q_m(r, a);
      res.M = formulas::j_in_q_M(r, a);
      res.sharp_m = res.sharp_M = true;
      res.source = "punctured space: j/q balls";
      break;
    }
    case RelationId::P_Q_IN_J_FROM_JR: {
      const Scalar a = *params.abs_x;
      const Scalar e2r = exp(two * r);
      res.m = a <= one ? formulas::q_near(a, c, e2r) : formulas::q_far(a, c, e2r);
      res.M = a * c / (one + a * a);
      res.sharp_m = res.sharp_M = true;
      res.source = "punctured space: q/j balls around a j-ball";
      break;
    }
    case RelationId::P_K_IN_Q:
    case RelationId::P_Q_IN_K: {
      const Scalar a = *params.abs_x;
      detail::require_chordal_bounds(id, r, a);
      res.m = formulas::j_in_q_m(r, a);
      res.M = two * asin(formulas::punctured_kq_f(r, a));
      res.source = "punctured space: k/q balls";
      break;
    }
    case RelationId::P_Q_IN_K_FROM_KR: {
      const Scalar a = *params.abs_x;
      const Scalar t = two * sin(r / two);
      const Scalar w = one + a * a;
      const Scalar u = one + t;
      res.m = min(a * t / sqrt(w * (a * a + u * u)), a * t / sqrt(w * (one + a * a * u * u)));
      res.M = a * c / w;
      res.source = "punctured space: q/k balls around a k-ball";
      break;
    }
    case RelationId::P_UNIFORM_IN_Q:
      if (params.abs_x) detail::require_chordal_bounds(id, r, *params.abs_x);
      res.m = formulas::uniform_in_q(r);
      res.source = "punctured space: |x|-free j- and k-balls inside a q-ball";
      break;
    case RelationId::P_UNIFORM_Q_OUT:
      res.M = formulas::uniform_q_out(r);
      res.source = "punctured space: |x|-free q-ball around j- and k-balls";
      break;
    case RelationId::H_J_IN_K:
      // sqrt(2) sqrt(cosh r - 1) = 2 sinh(r/2)
      res.m = log1p(two * sinh(r / two));
      res.sharp_m = true;
      res.source = "half-space: j-ball inside k-ball";
      break;
    case RelationId::H_K_IN_J:
      res.M = arcosh1p(c * c / two);
      res.sharp_M = true;
      res.source = "half-space: j-ball inside k-ball, outer radius";
      break;
    case RelationId::H_J_IN_Q:
    case RelationId::H_Q_IN_J: {
      const Scalar a = *params.abs_x;
      detail::require_chordal_bounds(id, r, a);
      const Scalar s = sqrt(one - r * r);
      const Scalar w = one + a * a;
      const Scalar m1 = log1p(r * w / (a * sqrt((s - r * a) * (s + r * a))));
      const Scalar m2 = log1p(r * w / (s * a - r));
      const Scalar M2 = log1p(r * w / (a * (s - r * a)));
      res.m = min(m1, m2);
      res.M = max(m2, M2);
      res.sharp_m = res.sharp_M = true;
      res.source = "half-space: j/q balls, center on the axis";
      break;
    }
    case RelationId::H_Q_IN_J_FROM_JR: {
      // The outer radius is the larger of the chordal distances to the
      // horizontal contact point (a e_n + a c e_1) and to the bottom point
      // a e^{-r} e_n. They cross at |x| = sqrt(coth(r/2)).
      const Scalar a = *params.abs_x;
      const Scalar e2r = exp(two * r);
      res.m = a <= one ? formulas::q_near(a, c, e2r) : formulas::q_far(a, c, e2r);
      const Scalar horizontal = a * c / sqrt((one + a * a) * (one + (one + c * c) * a * a));
      const Scalar bottom = formulas::q_near(a, c, e2r);
      res.M = a * a * tanh(r / two) <= one ? horizontal : bottom;
      res.sharp_m = res.sharp_M = true;
      res.source = "half-space: q/j balls around a j-ball, center on the axis";
      break;
    }
    case RelationId::H_K_IN_Q:
    case RelationId::H_Q_IN_K: {
      const Scalar a = *params.abs_x;
      detail::require_chordal_bounds(id, r, a);
      const Scalar s = sqrt(one - r * r);
      const Scalar w = one + a * a;
      const Scalar lower = log1p(r * w / (a * (s - r * a)));
      const Scalar upper = log1p(r * w / (s * a - r));
      res.m = min(lower, upper);
      res.M = max(lower, upper);
      res.sharp_m = res.sharp_M = true;
      res.source = "half-space: k/q balls, center on the axis";
      break;
    }
    case RelationId::H_Q_IN_K_FROM_KR: {
      const Scalar a = *params.abs_x;
      const Scalar e2r = exp(two * r);
      const Scalar u = formulas::q_near(a, c, e2r);
      const Scalar v = formulas::q_far(a, c, e2r);
      res.m = min(u, v);
      res.M = max(u, v);
      res.sharp_m = res.sharp_M = true;
      res.source = "half-space: q/k balls around a k-ball, center on the axis";
      break;
    }
    case RelationId::H_UNIFORM_IN_Q:
      if (params.abs_x) detail::require_chordal_bounds(id, r, *params.abs_x);
      res.m = log1p(two * r / (one - r * r));
      res.m_k = formulas::uniform_in_q(r);
      res.source = "half-space: |x|-free j- and k-balls inside a q-ball";
      break;
    case RelationId::H_UNIFORM_Q_OUT:
      // (sqrt(2 + e^r(e^r - 2)) - 1) / (e^r - 1) = c / (sqrt(1 + c^2) + 1)
      res.M = c / (sqrt(one + c * c) + one);
      if (r < std::log(one + sqrt(two))) res.M_k = formulas::uniform_q_out(r);
      res.source = "half-space: |x|-free q-ball around j- and k-balls";
      break;
  }
  return res;
}

template <typename Scalar>
RadiusResult<Scalar> inclusion_radius(RelationId id, Scalar r,
                                      std::optional<Scalar> abs_x = std::nullopt) {
  return inclusion_radius(id, RadiusParams<Scalar>{r, abs_x});
}

/// The ratio a row claims tends to 1, evaluated at r.
template <typename Scalar>
Scalar limit_ratio(RelationId id, Scalar r, std::optional<Scalar> abs_x = std::nullopt) {
  const auto kind = limit_claim(id);
  if (!kind) throw InvalidArgument(std::string(to_string(id)) + " makes no limit claim");
  const auto res = inclusion_radius(id, r, abs_x);
  switch (*kind) {
    case LimitKind::MOverM: return *res.M / *res.m;
    case LimitKind::ROverM: return r / *res.m;
    case LimitKind::MOverR: return *res.M / r;
  }
  return Scalar(0);
}

/// Interval on which a row's linear bracket is stated.
template <typename Scalar>
Interval<Scalar> linear_bound_interval(RelationId id) {
  switch (id) {
    case RelationId::GEN_JK: return {Scalar(0), std::log(Scalar(2))};
    case RelationId::P_J_IN_K: return {Scalar(0), kPi<Scalar> / 2};
    case RelationId::P_K_IN_J: return {Scalar(0), Scalar(0.5)};
    case RelationId::H_J_IN_K:
    case RelationId::H_K_IN_J: return {Scalar(0), Scalar(1)};
    default: break;
  }
  throw InvalidArgument(std::string(to_string(id)) + " has no linear bound");
}

/// Checks the linear bracketing of r/m, M/r and M/m stated for the j/k rows.
///
/// GEN_JK brackets r/m on (0, log 2) and adds the M/r, M/m chains on
/// (0, 1/2). Throws OutOfValidity outside the bracket interval and
/// InvalidArgument for rows without a bracket.
template <typename Scalar>
bool linear_bound_check(RelationId id, Scalar r) {
  const Scalar one(1);
  const Scalar half(0.5);
  const auto within = [](Scalar v, Scalar lo, Scalar hi) { return lo <= v && v <= hi; };
  const auto iv = linear_bound_interval<Scalar>(id);
  if (!iv.contains(r)) detail::out_of_validity(id, iv);
  switch (id) {
    case RelationId::GEN_JK: {
      const auto res = inclusion_radius(id, r);
      const Scalar m = *res.m;
      const Scalar M = *res.M;
      bool ok = within(r / m, one + r / 2, one + 2 * r);
      if (r < half) {
        ok = ok && within(M / r, one + r, one + 3 * r) && within(M / m, one + 2 * r, one + 5 * r);
      }
      return ok;
    }
    case RelationId::P_J_IN_K: {
      const Scalar m = *inclusion_radius(id, r).m;
      return within(r / m, one + r / 3, one + r / 2);
    }
    case RelationId::P_K_IN_J: {
      const Scalar M = *inclusion_radius(id, r).M;
      return within(M / r, one + r / 2, one + r);
    }
    case RelationId::H_J_IN_K: {
      const Scalar m = *inclusion_radius(id, r).m;
      return within(r / m, one + 2 * r / 5, one + r / 2);
    }
    case RelationId::H_K_IN_J: {
      const Scalar M = *inclusion_radius(id, r).M;
      return within(M / r, one + r / 2, one + 3 * r / 5);
    }
    default: break;
  }
  throw InvalidArgument(std::string(to_string(id)) + " has no linear bound");
}

enum class Dominance { PuncturedVsGeneral, HalfspaceVsGeneral, HalfspaceVsPunctured };

inline std::string_view to_string(Dominance d) {
  switch (d) {
    case Dominance::PuncturedVsGeneral: return "punctured-vs-general";
    case Dominance::HalfspaceVsGeneral: return "halfspace-vs-general";
    case Dominance::HalfspaceVsPunctured: return "halfspace-vs-punctured";
  }
  return "?";
}

template <typename Scalar>
Interval<Scalar> dominance_interval(Dominance d) {
  if (d == Dominance::PuncturedVsGeneral) return {Scalar(0), std::log(Scalar(3))};
  return {Scalar(0), detail::inf<Scalar>()};
}

/// Compares the inner j-in-k radii of two domains at r.
///
/// The punctured radius log(1 + 2 sin(r/2)) strictly beats the general
/// log(2 - e^{-r}) on (0, log 3); the half-space radius strictly beats the
/// general one and weakly beats the punctured one for every r > 0. The
/// formulas are compared directly so the check can run past the validity
/// interval of the individual rows.
template <typename Scalar>
bool dominance_check(Dominance d, Scalar r) {
  using std::exp;
  using std::sin;
  using std::sinh;
  const auto iv = dominance_interval<Scalar>(d);
  if (!iv.contains(r)) {
    throw OutOfValidity(std::string(to_string(d)), static_cast<double>(iv.lo),
                        static_cast<double>(iv.hi));
  }
  // Compare the log arguments minus one; log1p is increasing.
  using std::expm1;
  const Scalar general = -expm1(-r);
  const Scalar punctured = Scalar(2) * sin(r / 2);
  const Scalar half = Scalar(2) * sinh(r / 2);
  switch (d) {
    case Dominance::PuncturedVsGeneral: return punctured > general;
    case Dominance::HalfspaceVsGeneral: return half > general;
    case Dominance::HalfspaceVsPunctured: return half >= punctured;
  }
  return false;
}

}  // namespace hypmetric
