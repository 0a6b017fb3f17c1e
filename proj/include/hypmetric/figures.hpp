#pragma once

#include <Eigen/Core>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hypmetric/types.hpp"

namespace hypmetric {

enum class FigureId { Fig1, Fig2, Fig3, Fig4, Fig5 };

inline constexpr FigureId kAllFigures[] = {FigureId::Fig1, FigureId::Fig2, FigureId::Fig3,
                                           FigureId::Fig4, FigureId::Fig5};

std::string_view to_string(FigureId id);
FigureId figure_from_string(std::string_view name);

/// The planar figures. fig1/fig2 live in the punctured plane with center
/// (1, 0.4), fig3/fig4 in the upper half-plane with center (0, 1), fig5 in
/// the half-plane with center (0, 1.5).
///
///   fig1  k-disk 0.75 around the j-disk of radius log(1 + 2 sin(r/2))
///   fig2  j-disk 0.5 between the chordal disks of P_Q_IN_J_FROM_JR
///   fig3  k-disk 1 around the largest concentric j-disk
///   fig4  j-disk 0.9 between the chordal disks of H_Q_IN_J_FROM_JR
///   fig5  chordal disk 0.45 between the k-disks of H_K_IN_Q
struct FigureSpec {
  FigureId id = FigureId::Fig1;
  std::optional<Eigen::Vector2d> center;
  /// Overrides the caption radius.
  std::optional<double> radius;
  int points = 720;
};

struct Curve {
  std::string name;
  MetricKind metric;
  double radius;
  /// Drawn black (the caption's primary metric) or gray.
  bool black;
  std::vector<Eigen::Vector2d> points;
};

struct Figure {
  FigureId id;
  Domain<double> domain;
  Eigen::Vector2d center;
  double radius;
  /// Innermost first; each curve should lie inside the next.
  std::vector<Curve> curves;
};

double caption_radius(FigureId id);
Eigen::Vector2d default_center(FigureId id);

Figure make_figure(const FigureSpec& spec);

/// Boundary of a planar metric disk as a closed polyline (first point not
/// repeated), counter-clockwise from angle 0 about the center.
std::vector<Eigen::Vector2d> ball_outline(const BallSpec<double>& ball, int points);

/// Crossing-number test; points on an edge count as inside.
bool polygon_contains(const std::vector<Eigen::Vector2d>& polygon, const Eigen::Vector2d& p,
                      double tol = 0.0);

struct NestingCheck {
  std::string inner;
  std::string outer;
  bool contained;
  /// Largest distance of an inner vertex outside the outer polygon.
  double worst_excursion;
  double tolerance;
};

/// Point-in-polygon test of every inner vertex against the next curve.
///
/// Where the disks touch, an inner vertex lies on the true outer curve and
/// may fall just outside the inscribed outer polygon; the tolerance is the
/// polygon's chord sagitta.
std::vector<NestingCheck> check_nesting(const Figure& figure);

/// header `figure,curve,idx,x,y`, one row per vertex.
std::string figure_csv(const Figure& figure);
std::string figure_svg(const Figure& figure);

}  // namespace hypmetric
