#pragma once

#include <Eigen/Core>

#include <cmath>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>

#include "hypmetric/errors.hpp"

namespace hypmetric {

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Index = Eigen::Index;

/// A point of the extended space R^n ∪ {∞}, n >= 2.
///
/// The point at infinity is only meaningful to the chordal metric; every
/// other operation rejects it.
template <typename Scalar>
class Point {
 public:
  using VectorType = Vector<Scalar>;

  explicit Point(VectorType coords) : coords_(std::move(coords)) {
    if (coords_.size() < 2) throw InvalidArgument("a point needs at least two coordinates");
    if (!coords_.allFinite()) throw InvalidArgument("point coordinates must be finite");
  }

  Point(std::initializer_list<Scalar> coords)
      : Point(VectorType(Eigen::Map<const VectorType>(coords.begin(),
                                                      static_cast<Index>(coords.size())))) {}

  static Point infinity(Index dim) {
    Point p(VectorType::Zero(dim < 2 ? 2 : dim));
    p.at_infinity_ = true;
    return p;
  }

  /// e_k scaled by `scale` in R^dim (k is zero-based).
  static Point basis(Index dim, Index k, Scalar scale = Scalar(1)) {
    VectorType v = VectorType::Zero(dim);
    v(k) = scale;
    return Point(std::move(v));
  }

  const VectorType& coords() const noexcept { return coords_; }
  bool is_infinity() const noexcept { return at_infinity_; }
  Index dim() const noexcept { return coords_.size(); }
  Scalar norm() const { return coords_.norm(); }
  Scalar operator[](Index i) const { return coords_(i); }

  friend bool operator==(const Point& a, const Point& b) {
    if (a.at_infinity_ || b.at_infinity_) return a.at_infinity_ == b.at_infinity_;
    return a.coords_.size() == b.coords_.size() && a.coords_ == b.coords_;
  }

 private:
  VectorType coords_;
  bool at_infinity_ = false;
};

enum class DomainKind { PuncturedSpace, HalfSpace, General };

inline std::string_view to_string(DomainKind kind) {
  switch (kind) {
    case DomainKind::PuncturedSpace: return "punctured";
    case DomainKind::HalfSpace: return "halfspace";
    case DomainKind::General: return "general";
  }
  return "?";
}

/// A proper subdomain G of R^n together with its boundary distance d(x).
///
/// PuncturedSpace is R^n \ {0} with d(x) = |x|; HalfSpace is {x_n > 0} with
/// d(x) = x_n. General domains carry a caller-supplied distance function and
/// admit exactly the points where it is positive.
template <typename Scalar>
class Domain {
 public:
  using VectorType = Vector<Scalar>;
  using DistanceFn = std::function<Scalar(const VectorType&)>;

  static Domain punctured_space() { return Domain(DomainKind::PuncturedSpace, {}, "punctured"); }
  static Domain half_space() { return Domain(DomainKind::HalfSpace, {}, "halfspace"); }
  static Domain general(DistanceFn dist, std::string label = "general") {
    if (!dist) throw InvalidArgument("general domain requires a boundary distance function");
    return Domain(DomainKind::General, std::move(dist), std::move(label));
  }

  DomainKind kind() const noexcept { return kind_; }
  const std::string& label() const noexcept { return label_; }

  /// Euclidean distance to the boundary; not checked for admissibility.
  template <typename Derived>
  Scalar boundary_distance(const Eigen::MatrixBase<Derived>& x) const {
    switch (kind_) {
      case DomainKind::PuncturedSpace: return x.norm();
      case DomainKind::HalfSpace: return x(x.size() - 1);
      case DomainKind::General: return dist_(VectorType(x));
    }
    return Scalar(0);
  }

  template <typename Derived>
  bool contains(const Eigen::MatrixBase<Derived>& x) const {
    const Scalar d = boundary_distance(x);
    return std::isfinite(static_cast<double>(d)) && d > Scalar(0);
  }

  bool contains(const Point<Scalar>& p) const { return !p.is_infinity() && contains(p.coords()); }

  void require(const Point<Scalar>& p, const char* what) const {
    if (p.is_infinity()) throw InvalidArgument(std::string(what) + " must be finite");
    if (!contains(p.coords())) {
      throw DomainViolation(std::string(what) + " lies outside the " + label_ + " domain");
    }
  }

 private:
  Domain(DomainKind kind, DistanceFn dist, std::string label)
      : kind_(kind), dist_(std::move(dist)), label_(std::move(label)) {}

  DomainKind kind_;
  DistanceFn dist_;
  std::string label_;
};

/// The open unit square (0,1)^2 as a general domain.
template <typename Scalar>
Domain<Scalar> unit_square() {
  return Domain<Scalar>::general(
      [](const Vector<Scalar>& x) -> Scalar {
        using std::min;
        return min(min(x(0), Scalar(1) - x(0)), min(x(1), Scalar(1) - x(1)));
      },
      "unit-square");
}

enum class MetricKind { J, K, Q };

inline std::string_view to_string(MetricKind kind) {
  switch (kind) {
    case MetricKind::J: return "j";
    case MetricKind::K: return "k";
    case MetricKind::Q: return "q";
  }
  return "?";
}

/// The metric ball B_d(center, radius) = {z : d(center, z) < radius}.
template <typename Scalar>
struct BallSpec {
  Domain<Scalar> domain;
  MetricKind metric;
  Point<Scalar> center;
  Scalar radius;

  void validate() const {
    domain.require(center, "ball center");
    if (!(radius > Scalar(0))) throw InvalidArgument("ball radius must be positive");
    if (metric == MetricKind::Q && !(radius < Scalar(1))) {
      throw InvalidArgument("chordal ball radius must be below 1");
    }
  }
};

/// B^n(center, radius).
template <typename Scalar>
struct EuclideanBall {
  Vector<Scalar> center;
  Scalar radius;

  template <typename Derived>
  bool contains(const Eigen::MatrixBase<Derived>& z) const {
    return (z - center).norm() < radius;
  }
};

}  // namespace hypmetric
