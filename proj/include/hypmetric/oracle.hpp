#pragma once

#include <Eigen/Core>

#include <vector>

#include "hypmetric/types.hpp"

namespace hypmetric {

/// Planar grid for the shortest-path approximation of k.
///
/// Cells are square with side h = max(width, height) / resolution. Nodes
/// closer than `guard_cells` * h to the domain boundary are dropped, so the
/// density 1/d stays bounded on every edge.
struct GridSpec {
  Eigen::Vector2d lo{0.0, 0.0};
  Eigen::Vector2d hi{1.0, 1.0};
  int resolution = 512;
  int stencil = 16;
  int guard_cells = 1;
  /// Scale edge lengths by the minimax factor of the stencil, which centres
  /// the direction-dependent length error around zero (chamfer weighting).
  bool chamfer = true;

  void validate() const;
  double cell() const;
};

/// A square grid around x and y big enough to hold the k-geodesic, for the
/// punctured plane and the half-plane. General domains need an explicit box.
GridSpec fit_grid(const Domain<double>& domain, const Eigen::Vector2d& x, const Eigen::Vector2d& y,
                  int resolution = 512, int stencil = 16);

/// Worst relative error of the grid metric against k, as calibrated by
/// `hypmetric oracle --calibrate` on both closed-form domains.
double oracle_error_bound(int stencil, bool chamfer = true);

/// Largest and smallest ratio of stencil path length to Euclidean length
/// over all directions, before chamfer scaling.
struct StencilAnisotropy {
  double min_ratio;
  double max_ratio;
};
StencilAnisotropy stencil_anisotropy(int stencil);

struct OracleEstimate {
  double value;
  double relative_error_bound;
};

/// Single-source grid Dijkstra for the quasihyperbolic metric
/// (density 1/d, edge weight = edge length / d(edge midpoint)).
class QhDistanceField {
 public:
  QhDistanceField(const Domain<double>& domain, const Eigen::Vector2d& source, const GridSpec& grid);

  /// Approximate k(source, y). Throws InvalidArgument if y is outside the
  /// box or the domain, or not connected to any grid node.
  double at(const Eigen::Vector2d& y) const;

  const GridSpec& grid() const noexcept { return grid_; }
  const Eigen::Vector2d& source() const noexcept { return source_; }
  double error_bound() const noexcept { return bound_; }

 private:
  double segment_weight(const Eigen::Vector2d& a, const Eigen::Vector2d& b) const;
  Eigen::Vector2d node(int i, int j) const;
  int index(int i, int j) const { return j * nx_ + i; }

  Domain<double> domain_;
  GridSpec grid_;
  Eigen::Vector2d source_;
  double h_ = 0.0;
  double scale_ = 1.0;
  double bound_ = 0.0;
  int nx_ = 0;
  int ny_ = 0;
  std::vector<double> dist_;
};

/// k(x, y) in a planar domain from one Dijkstra run.
OracleEstimate qh_distance_oracle(const Domain<double>& domain, const Point<double>& x,
                                  const Point<double>& y, const GridSpec& grid);

}  // namespace hypmetric
