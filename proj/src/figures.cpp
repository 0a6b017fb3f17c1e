#include "hypmetric/figures.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "hypmetric/errors.hpp"
#include "hypmetric/metrics.hpp"
#include "hypmetric/radii.hpp"

namespace hypmetric {

namespace {

using Eigen::Vector2d;
using Polyline = std::vector<Vector2d>;

constexpr double kPiD = kPi<double>;

Polyline circle(const Vector2d& c, double rho, int points) {
  Polyline out;
  out.reserve(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    const double a = 2.0 * kPiD * i / points;
    out.emplace_back(c + rho * Vector2d(std::cos(a), std::sin(a)));
  }
  return out;
}

// j-disks meet every ray from the center once, so plain bisection on
// [0, (e^r - 1) d(x)] finds the boundary.
Polyline j_outline(const BallSpec<double>& ball, int points) {
  const Vector2d x = ball.center.coords();
  const double reach = std::expm1(ball.radius) * ball.domain.boundary_distance(x);
  Polyline out;
  out.reserve(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    const double a = 2.0 * kPiD * i / points;
    const Vector2d u(std::cos(a), std::sin(a));
    const auto inside = [&](double t) {
      const Vector2d p = x + t * u;
      return ball.domain.contains(p) && kernel::j(ball.domain, x, p) < ball.radius;
    };
    double lo = 0.0;
    double hi = reach;
    for (int it = 0; it < 200 && hi - lo > 1e-15 * reach; ++it) {
      const double mid = 0.5 * (lo + hi);
      (inside(mid) ? lo : hi) = mid;
    }
    out.emplace_back(x + 0.5 * (lo + hi) * u);
  }
  return out;
}

// Image of the circle of radius r under the log-polar chart.
Polyline punctured_k_outline(const Vector2d& x, double r, int points) {
  if (!(r < kPiD)) throw RegimeError("punctured k-disks wrap around the origin for r >= pi");
  const double theta0 = std::atan2(x.y(), x.x());
  const double rho0 = x.norm();
  Polyline out;
  out.reserve(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    const double a = 2.0 * kPiD * i / points;
    const double rho = rho0 * std::exp(r * std::cos(a));
    const double theta = theta0 + r * std::sin(a);
    out.emplace_back(rho * std::cos(theta), rho * std::sin(theta));
  }
  return out;
}

double point_segment_distance(const Vector2d& p, const Vector2d& a, const Vector2d& b) {
  const Vector2d ab = b - a;
  const double len2 = ab.squaredNorm();
  const double t = len2 > 0.0 ? std::clamp((p - a).dot(ab) / len2, 0.0, 1.0) : 0.0;
  return (p - (a + t * ab)).norm();
}

double boundary_distance(const Polyline& poly, const Vector2d& p) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < poly.size(); ++i) {
    best = std::min(best, point_segment_distance(p, poly[i], poly[(i + 1) % poly.size()]));
  }
  return best;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

Curve make_curve(const Figure& fig, std::string name, MetricKind metric, double radius, bool black,
                 int points) {
  const BallSpec<double> ball{fig.domain, metric, Point<double>(Eigen::VectorXd(fig.center)), radius};
  return {std::move(name), metric, radius, black, ball_outline(ball, points)};
}

}  // namespace

std::string_view to_string(FigureId id) {
  switch (id) {
    case FigureId::Fig1: return "fig1";
    case FigureId::Fig2: return "fig2";
    case FigureId::Fig3: return "fig3";
    case FigureId::Fig4: return "fig4";
    case FigureId::Fig5: return "fig5";
  }
  return "?";
}

FigureId figure_from_string(std::string_view name) {
  for (FigureId id : kAllFigures) {
    if (to_string(id) == name) return id;
  }
  throw InvalidArgument("unknown figure '" + std::string(name) + "' (expected fig1..fig5)");
}

double caption_radius(FigureId id) {
  switch (id) {
    case FigureId::Fig1: return 0.75;
    case FigureId::Fig2: return 0.5;
    case FigureId::Fig3: return 1.0;
    case FigureId::Fig4: return 0.9;
    case FigureId::Fig5: return 0.45;
  }
  return 0.0;
}

Eigen::Vector2d default_center(FigureId id) {
  if (id == FigureId::Fig1 || id == FigureId::Fig2) return {1.0, 0.4};
  // At x_n = 1 the two k-radii of fig5 coincide with the chordal disk.
  if (id == FigureId::Fig5) return {0.0, 1.5};
  return {0.0, 1.0};
}

std::vector<Eigen::Vector2d> ball_outline(const BallSpec<double>& ball, int points) {
  ball.validate();
  if (ball.center.dim() != 2) throw InvalidArgument("outlines are planar");
  if (points < 3) throw InvalidArgument("an outline needs at least three points");
  const Vector2d x = ball.center.coords();
  switch (ball.metric) {
    case MetricKind::J: return j_outline(ball, points);
    case MetricKind::Q: {
      const auto e = chordal_ball_as_euclidean(x, ball.radius);
      return circle(e.center, e.radius, points);
    }
    case MetricKind::K:
      if (ball.domain.kind() == DomainKind::HalfSpace) {
        const auto e = qh_ball_as_euclidean_halfspace(x, ball.radius);
        return circle(e.center, e.radius, points);
      }
      if (ball.domain.kind() == DomainKind::PuncturedSpace) {
        return punctured_k_outline(x, ball.radius, points);
      }
      throw UnsupportedClosedForm("k-disk outlines need a closed form");
  }
  return {};
}

Figure make_figure(const FigureSpec& spec) {
  const FigureId id = spec.id;
  const bool punctured = id == FigureId::Fig1 || id == FigureId::Fig2;
  Figure fig{id,
             punctured ? Domain<double>::punctured_space() : Domain<double>::half_space(),
             spec.center.value_or(default_center(id)),
             spec.radius.value_or(caption_radius(id)),
             {}};
  const Point<double> x{Eigen::VectorXd(fig.center)};
  fig.domain.require(x, "figure center");
  const double r = fig.radius;
  const int n = spec.points;

  // Half-plane rows with q are stated for centers on the vertical axis.
  const auto axis_height = [&](RelationId rel) {
    if (fig.center.x() != 0.0) {
      throw InvalidArgument(std::string(to_string(id)) + " uses " + std::string(to_string(rel)) +
                            ", which needs the center on the vertical axis");
    }
    return fig.center.y();
  };

  switch (id) {
    case FigureId::Fig1: {
      const auto res = inclusion_radius<double>(RelationId::P_J_IN_K, r);
      fig.curves.push_back(make_curve(fig, "j-inner", MetricKind::J, *res.m, false, n));
      fig.curves.push_back(make_curve(fig, "k", MetricKind::K, r, true, n));
      break;
    }
    case FigureId::Fig2: {
      const auto res = inclusion_radius<double>(RelationId::P_Q_IN_J_FROM_JR, r, fig.center.norm());
      fig.curves.push_back(make_curve(fig, "q-inner", MetricKind::Q, *res.m, true, n));
      fig.curves.push_back(make_curve(fig, "j", MetricKind::J, r, false, n));
      fig.curves.push_back(make_curve(fig, "q-outer", MetricKind::Q, *res.M, true, n));
      break;
    }
    case FigureId::Fig3: {
      const auto res = inclusion_radius<double>(RelationId::H_J_IN_K, r);
      fig.curves.push_back(make_curve(fig, "j-inner", MetricKind::J, *res.m, false, n));
      fig.curves.push_back(make_curve(fig, "k", MetricKind::K, r, true, n));
      break;
    }
    case FigureId::Fig4: {
      const double a = axis_height(RelationId::H_Q_IN_J_FROM_JR);
      const auto res = inclusion_radius<double>(RelationId::H_Q_IN_J_FROM_JR, r, a);
      fig.curves.push_back(make_curve(fig, "q-inner", MetricKind::Q, *res.m, true, n));
      fig.curves.push_back(make_curve(fig, "j", MetricKind::J, r, false, n));
      fig.curves.push_back(make_curve(fig, "q-outer", MetricKind::Q, *res.M, true, n));
      break;
    }
    case FigureId::Fig5: {
      const double a = axis_height(RelationId::H_K_IN_Q);
      const auto res = inclusion_radius<double>(RelationId::H_K_IN_Q, r, a);
      fig.curves.push_back(make_curve(fig, "k-inner", MetricKind::K, *res.m, false, n));
      fig.curves.push_back(make_curve(fig, "q", MetricKind::Q, r, true, n));
      fig.curves.push_back(make_curve(fig, "k-outer", MetricKind::K, *res.M, false, n));
      break;
    }
  }
  return fig;
}

bool polygon_contains(const std::vector<Eigen::Vector2d>& polygon, const Eigen::Vector2d& p,
                      double tol) {
  if (polygon.size() < 3) return false;
  bool inside = false;
  for (std::size_t i = 0, j = polygon.size() - 1; i < polygon.size(); j = i++) {
    const Vector2d& a = polygon[i];
    const Vector2d& b = polygon[j];
    if ((a.y() > p.y()) != (b.y() > p.y())) {
      const double xc = a.x() + (p.y() - a.y()) * (b.x() - a.x()) / (b.y() - a.y());
      if (p.x() < xc) inside = !inside;
    }
  }
  return inside || boundary_distance(polygon, p) <= tol;
}

std::vector<NestingCheck> check_nesting(const Figure& figure) {
  std::vector<NestingCheck> out;
  for (std::size_t c = 0; c + 1 < figure.curves.size(); ++c) {
    const Curve& inner = figure.curves[c];
    const Curve& outer = figure.curves[c + 1];
    // Sagitta of the longest outer chord, against the smallest bounding-box
    // half-width as a curvature radius.
    double longest = 0.0;
    Vector2d lo = outer.points.front();
    Vector2d hi = lo;
    for (std::size_t i = 0; i < outer.points.size(); ++i) {
      longest = std::max(longest, (outer.points[(i + 1) % outer.points.size()] - outer.points[i]).norm());
      lo = lo.cwiseMin(outer.points[i]);
      hi = hi.cwiseMax(outer.points[i]);
    }
    const double half_width = 0.5 * (hi - lo).minCoeff();
    const double tol = longest * longest / half_width;

    NestingCheck check{inner.name, outer.name, true, 0.0, tol};
    for (const Vector2d& p : inner.points) {
      if (polygon_contains(outer.points, p)) continue;
      check.worst_excursion = std::max(check.worst_excursion, boundary_distance(outer.points, p));
    }
    check.contained = check.worst_excursion <= tol;
    out.push_back(check);
  }
  return out;
}

std::string figure_csv(const Figure& figure) {
  std::ostringstream os;
  os << "figure,curve,idx,x,y\n";
  for (const Curve& c : figure.curves) {
    for (std::size_t i = 0; i < c.points.size(); ++i) {
      os << to_string(figure.id) << ',' << c.name << ',' << i << ',' << fmt(c.points[i].x()) << ','
         << fmt(c.points[i].y()) << '\n';
    }
  }
  return os.str();
}

std::string figure_svg(const Figure& figure) {
  const bool punctured = figure.domain.kind() == DomainKind::PuncturedSpace;
  Vector2d lo = figure.center;
  Vector2d hi = figure.center;
  for (const Curve& c : figure.curves) {
    for (const Vector2d& p : c.points) {
      lo = lo.cwiseMin(p);
      hi = hi.cwiseMax(p);
    }
  }
  if (punctured) {
    lo = lo.cwiseMin(Vector2d::Zero());
    hi = hi.cwiseMax(Vector2d::Zero());
  } else {
    lo.y() = std::min(lo.y(), 0.0);
  }
  const double extent = std::max((hi - lo).maxCoeff(), 1e-12);
  lo.array() -= 0.08 * extent;
  hi.array() += 0.08 * extent;

  constexpr double kSize = 480.0;
  const double scale = kSize / (hi - lo).maxCoeff();
  const double width = (hi.x() - lo.x()) * scale;
  const double height = (hi.y() - lo.y()) * scale;
  const auto X = [&](double x) { return fmt((x - lo.x()) * scale); };
  const auto Y = [&](double y) { return fmt((hi.y() - y) * scale); };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(width)
     << "\" height=\"" << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << ' ' << fmt(height)
     << "\">\n"
     << "  <title>" << to_string(figure.id) << "</title>\n"
     << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (punctured) {
    os << "  <circle cx=\"" << X(0.0) << "\" cy=\"" << Y(0.0)
       << "\" r=\"4\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
  } else {
    os << "  <line x1=\"0\" y1=\"" << Y(0.0) << "\" x2=\"" << fmt(width) << "\" y2=\"" << Y(0.0)
       << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
  }
  for (const Curve& c : figure.curves) {
    os << "  <path id=\"" << c.name << "\" fill=\"none\" stroke=\"" << (c.black ? "black" : "gray")
       << "\" stroke-width=\"1.5\" d=\"";
    for (std::size_t i = 0; i < c.points.size(); ++i) {
      os << (i == 0 ? "M" : " L") << X(c.points[i].x()) << ' ' << Y(c.points[i].y());
    }
    os << " Z\"/>\n";
  }
  os << "  <circle cx=\"" << X(figure.center.x()) << "\" cy=\"" << Y(figure.center.y())
     << "\" r=\"3\" fill=\"black\"/>\n"
     << "</svg>\n";
  return os.str();
}

}  // namespace hypmetric
