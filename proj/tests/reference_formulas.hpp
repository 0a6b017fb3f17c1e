#pragma once

// Radius formulas transcribed as printed, without the rearrangements the
// library uses for accuracy. Independent check on hypmetric/radii.hpp.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

namespace reference {

using std::acosh;
using std::asin;
using std::cosh;
using std::exp;
using std::log;
using std::sin;
using std::sqrt;

inline double r_q(double a) { return std::min(1 / sqrt(1 + a * a), a / sqrt(1 + a * a)); }

inline std::pair<double, double> gen_jk(double r) { return {log(2 - exp(-r)), log(1 / (2 - exp(r)))}; }

inline double p_j_in_k(double r) { return log(1 + 2 * sin(r / 2)); }

inline double p_k_in_j(double r) { return 2 * asin((exp(r) - 1) / 2); }

inline std::pair<double, double> p_j_in_q(double r, double a) {
  const double m = log(1 + r * (a + 1 / a));
  const double w = 1 + a * a;
  const double M = a <= 1 ? log(a * (1 - r * r * w) / (a - r * sqrt(1 - r * r) * w))
                          : log((a + r * sqrt(1 - r * r) * w) / (a * (1 - r * r * w)));
  return {m, M};
}

/// The two candidate chordal radii around B_j(x, r) / B_k(x, r).
inline std::pair<double, double> q_near_far(double r, double a) {
  const double c = exp(r) - 1;
  return {c * a / sqrt((1 + a * a) * (exp(2 * r) + a * a)),
          c * a / sqrt((1 + a * a) * (1 + a * a * exp(2 * r)))};
}

inline std::pair<double, double> p_q_in_j_from_jr(double r, double a) {
  const auto [near, far] = q_near_far(r, a);
  return {a <= 1 ? near : far, a * (exp(r) - 1) / (1 + a * a)};
}

inline double f_of(double r, double a) {
  if (a <= 1) return r * (1 + a * a) / (2 * sqrt(1 - r * r) * a - 2 * r);
  return (r + r * a * a) / (2 * sqrt(1 - r * r) * a - 2 * r * a * a);
}

inline std::pair<double, double> p_k_in_q(double r, double a) {
  return {log(1 + r * (a + 1 / a)), 2 * asin(f_of(r, a))};
}

/// Validity bound R of P_K_IN_Q, as printed.
inline double printed_R(double a) { return 2 * a / (sqrt(1 + a * a) * sqrt(1 + 9 * a * a)); }

/// R_0 from the proof: min of the two endpoint conditions.
inline double printed_R0(double a) {
  const double first = a * (exp(std::numbers::pi / 2) - 1) /
                       (sqrt(1 + a * a) * sqrt(1 + exp(std::numbers::pi) * a * a));
  return std::min(first, printed_R(a));
}

inline std::pair<double, double> p_q_in_k_from_kr(double r, double a) {
  const double s = 2 * sin(r / 2);
  const double w = 1 + a * a;
  const double m = std::min(s * a / sqrt(w * (a * a + (1 + s) * (1 + s))),
                            s * a / sqrt(w * (1 + a * a * (1 + s) * (1 + s))));
  return {m, a * (exp(r) - 1) / w};
}

inline double uniform_in_q(double r) { return log(1 + 2 * r * r / sqrt(1 - r * r)); }

inline double uniform_q_out(double r) {
  const double c = exp(r) - 1;
  return sqrt(c * (c + sqrt(17 + exp(r) * (exp(r) - 2)))) / (2 * sqrt(2.0));
}

inline double h_j_in_k(double r) { return log(1 + sqrt(2.0) * sqrt(cosh(r) - 1)); }

inline double h_k_in_j(double r) { return acosh(1 + (exp(r) - 1) * (exp(r) - 1) / 2); }

inline std::pair<double, double> h_j_in_q(double r, double a) {
  const double s = sqrt(1 - r * r);
  const double w = 1 + a * a;
  const double t1 = log(1 + r * w / (a * sqrt(1 - r * r - r * r * a * a)));
  const double t2 = log(1 + r * w / (s * a - r));
  const double t3 = log(1 + r * w / (a * (s - r * a)));
  return {std::min(t1, t2), std::max(t2, t3)};
}

/// Outer radius of H_Q_IN_J_FROM_JR with the branches as
/// printed: the e^{2r} form for |x| <= sqrt(tanh(r/2)), the horizontal
/// contact form above.
inline double h_q_in_j_printed_M(double r, double a) {
  const double c = exp(r) - 1;
  const double horizontal = c * a / (sqrt(1 + a * a) * sqrt(1 + (1 + c * c) * a * a));
  return a <= sqrt(std::tanh(r / 2)) ? q_near_far(r, a).first : horizontal;
}

inline std::pair<double, double> h_k_in_q(double r, double a) {
  const double s = sqrt(1 - r * r);
  const double w = 1 + a * a;
  const double A = log((a + r * s * w) / (a * (1 - r * r * w)));
  const double B = log(a * (r * r * w - 1) / (r * s * w - a));
  return {std::min(A, B), std::max(A, B)};
}

inline std::pair<double, double> h_q_in_k_from_kr(double r, double a) {
  const auto [near, far] = q_near_far(r, a);
  return {std::min(near, far), std::max(near, far)};
}

inline double h_uniform_in_q_j(double r) { return log(1 + 2 * r / (1 - r * r)); }

inline double h_uniform_q_out_j(double r) {
  return (sqrt(2 + exp(r) * (exp(r) - 2)) - 1) / (exp(r) - 1);
}

}  // namespace reference
