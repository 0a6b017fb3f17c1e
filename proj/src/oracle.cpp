#include "hypmetric/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <span>
#include <utility>

#include "hypmetric/errors.hpp"

namespace hypmetric {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Offset {
  int di;
  int dj;
};

constexpr std::array<Offset, 16> kStencil16 = {{
    {1, 0}, {-1, 0}, {0, 1}, {0, -1},
    {1, 1}, {1, -1}, {-1, 1}, {-1, -1},
    {2, 1}, {2, -1}, {-2, 1}, {-2, -1},
    {1, 2}, {1, -2}, {-1, 2}, {-1, -2},
}};

std::span<const Offset> stencil_offsets(int stencil) {
  return std::span<const Offset>(kStencil16.data(), stencil == 8 ? 8 : 16);
}

}  // namespace

void GridSpec::validate() const {
  if (resolution < 64) throw ConfigError("grid resolution must be at least 64");
  if (stencil != 8 && stencil != 16) throw ConfigError("grid stencil must be 8 or 16");
  if (guard_cells < 1) throw ConfigError("grid needs at least one guard cell");
  if (!lo.allFinite() || !hi.allFinite() || !(hi.x() > lo.x()) || !(hi.y() > lo.y())) {
    throw ConfigError("grid box is empty or not finite");
  }
}

double GridSpec::cell() const { return std::max(hi.x() - lo.x(), hi.y() - lo.y()) / resolution; }

StencilAnisotropy stencil_anisotropy(int stencil) {
  if (stencil != 8 && stencil != 16) throw ConfigError("grid stencil must be 8 or 16");
  std::vector<double> angles;
  for (const Offset& o : stencil_offsets(stencil)) angles.push_back(std::atan2(o.dj, o.di));
  std::sort(angles.begin(), angles.end());
  angles.push_back(angles.front() + 2.0 * std::numbers::pi);
  // A straight segment between two neighbouring stencil directions at angle
  // gamma is worst at the bisector, where the stencil path is 1/cos(gamma/2)
  // times longer.
  double worst = 1.0;
  for (std::size_t i = 0; i + 1 < angles.size(); ++i) {
    worst = std::max(worst, 1.0 / std::cos(0.5 * (angles[i + 1] - angles[i])));
  }
  return {1.0, worst};
}

double oracle_error_bound(int stencil, bool chamfer) {
  // Largest relative error seen by the calibration run (400 pairs per
  // domain at resolution 512), rounded up.
  if (stencil == 16) return chamfer ? 0.016 : 0.03;
  if (stencil == 8) return chamfer ? 0.045 : 0.085;
  throw ConfigError("grid stencil must be 8 or 16");
}

GridSpec fit_grid(const Domain<double>& domain, const Eigen::Vector2d& x, const Eigen::Vector2d& y,
                  int resolution, int stencil) {
  Eigen::Vector2d lo;
  Eigen::Vector2d hi;
  switch (domain.kind()) {
    case DomainKind::HalfSpace: {
      // Geodesics are vertical lines or arcs of circles centred on the
      // boundary; an arc between x and y rises at most |x_1 - y_1| above the
      // higher endpoint and never dips below the lower one.
      const double dx = std::abs(x.x() - y.x());
      lo = Eigen::Vector2d(std::min(x.x(), y.x()), std::min(x.y(), y.y()));
      hi = Eigen::Vector2d(std::max(x.x(), y.x()), std::max(x.y(), y.y()) + dx);
      break;
    }
    case DomainKind::PuncturedSpace: {
      // Geodesics wind monotonically in angle (the short way round) and in
      // log-radius, so they stay in the annular sector spanned by x and y.
      const double rx = x.norm();
      const double ry = y.norm();
      const double ax = std::atan2(x.y(), x.x());
      double sweep = std::atan2(y.y(), y.x()) - ax;
      if (sweep > std::numbers::pi) sweep -= 2.0 * std::numbers::pi;
      if (sweep < -std::numbers::pi) sweep += 2.0 * std::numbers::pi;
      lo = hi = x;
      constexpr int kSteps = 64;
      for (int s = 0; s <= kSteps; ++s) {
        const double a = ax + sweep * s / kSteps;
        for (double rad : {rx, ry}) {
          const Eigen::Vector2d p(rad * std::cos(a), rad * std::sin(a));
          lo = lo.cwiseMin(p);
          hi = hi.cwiseMax(p);
        }
      }
      break;
    }
    case DomainKind::General:
      throw ConfigError("general domains need an explicit grid box");
  }
  const double extent = std::max((hi - lo).maxCoeff(), 1e-12);
  const double pad = 0.1 * extent + 0.05 * std::min(domain.boundary_distance(x),
                                                    domain.boundary_distance(y));
  lo.array() -= pad;
  hi.array() += pad;
  // Square box so that cells are square.
  const double side = (hi - lo).maxCoeff();
  const Eigen::Vector2d centre = 0.5 * (lo + hi);
  GridSpec grid;
  grid.lo = centre.array() - 0.5 * side;
  grid.hi = centre.array() + 0.5 * side;
  grid.resolution = resolution;
  grid.stencil = stencil;
  return grid;
}

QhDistanceField::QhDistanceField(const Domain<double>& domain, const Eigen::Vector2d& source,
                                 const GridSpec& grid)
    : domain_(domain), grid_(grid), source_(source) {
  grid_.validate();
  if (!source.allFinite() || (source.array() < grid_.lo.array()).any() ||
      (source.array() > grid_.hi.array()).any()) {
    throw InvalidArgument("oracle source lies outside the grid box");
  }
  if (!domain_.contains(source)) throw InvalidArgument("oracle source lies outside the domain");

  h_ = grid_.cell();
  nx_ = static_cast<int>(std::ceil((grid_.hi.x() - grid_.lo.x()) / h_ - 1e-9)) + 1;
  ny_ = static_cast<int>(std::ceil((grid_.hi.y() - grid_.lo.y()) / h_ - 1e-9)) + 1;
  if (grid_.chamfer) {
    const auto an = stencil_anisotropy(grid_.stencil);
    scale_ = 2.0 / (an.min_ratio + an.max_ratio);
  }
  bound_ = oracle_error_bound(grid_.stencil, grid_.chamfer);

  // Density 1/d on the half-step lattice: even indices are nodes, odd ones
  // are edge midpoints.
  const int hx = 2 * nx_ - 1;
  const int hy = 2 * ny_ - 1;
  std::vector<double> rho(static_cast<std::size_t>(hx) * hy);
  for (int j = 0; j < hy; ++j) {
    for (int i = 0; i < hx; ++i) {
      const Eigen::Vector2d p = grid_.lo + 0.5 * h_ * Eigen::Vector2d(i, j);
      const double d = domain_.boundary_distance(p);
      rho[static_cast<std::size_t>(j) * hx + i] = (std::isfinite(d) && d > 0.0) ? 1.0 / d : kInf;
    }
  }
  const double guard = grid_.guard_cells * h_;
  std::vector<char> valid(static_cast<std::size_t>(nx_) * ny_);
  for (int j = 0; j < ny_; ++j) {
    for (int i = 0; i < nx_; ++i) {
      const double r = rho[static_cast<std::size_t>(2 * j) * hx + 2 * i];
      valid[index(i, j)] = std::isfinite(r) && 1.0 / r >= guard;
    }
  }

  dist_.assign(valid.size(), kInf);
  using Entry = std::pair<double, int>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;

  const int ci = static_cast<int>(std::floor((source.x() - grid_.lo.x()) / h_));
  const int cj = static_cast<int>(std::floor((source.y() - grid_.lo.y()) / h_));
  for (int j = cj - 2; j <= cj + 3; ++j) {
    for (int i = ci - 2; i <= ci + 3; ++i) {
      if (i < 0 || j < 0 || i >= nx_ || j >= ny_ || !valid[index(i, j)]) continue;
      const double w = segment_weight(source, node(i, j));
      if (w < dist_[index(i, j)]) {
        dist_[index(i, j)] = w;
        queue.emplace(w, index(i, j));
      }
    }
  }

  const auto offsets = stencil_offsets(grid_.stencil);
  std::vector<double> step(offsets.size());
  for (std::size_t k = 0; k < offsets.size(); ++k) {
    step[k] = scale_ * h_ * std::hypot(offsets[k].di, offsets[k].dj);
  }
  while (!queue.empty()) {
    const auto [d, idx] = queue.top();
    queue.pop();
    if (d > dist_[idx]) continue;
    const int i = idx % nx_;
    const int j = idx / nx_;
    for (std::size_t k = 0; k < offsets.size(); ++k) {
      const int ni = i + offsets[k].di;
      const int nj = j + offsets[k].dj;
      if (ni < 0 || nj < 0 || ni >= nx_ || nj >= ny_) continue;
      const int nidx = index(ni, nj);
      if (!valid[nidx]) continue;
      const double r = rho[static_cast<std::size_t>(2 * j + offsets[k].dj) * hx + 2 * i + offsets[k].di];
      const double nd = d + step[k] * r;
      if (nd < dist_[nidx]) {
        dist_[nidx] = nd;
        queue.emplace(nd, nidx);
      }
    }
  }
}

Eigen::Vector2d QhDistanceField::node(int i, int j) const {
  return grid_.lo + h_ * Eigen::Vector2d(i, j);
}

double QhDistanceField::segment_weight(const Eigen::Vector2d& a, const Eigen::Vector2d& b) const {
  const double d = domain_.boundary_distance(0.5 * (a + b));
  if (!(d > 0.0)) return kInf;
  return (b - a).norm() / d;
}

double QhDistanceField::at(const Eigen::Vector2d& y) const {
  if (y == source_) return 0.0;
  if (!y.allFinite() || (y.array() < grid_.lo.array()).any() ||
      (y.array() > grid_.hi.array()).any()) {
    throw InvalidArgument("oracle target lies outside the grid box");
  }
  if (!domain_.contains(y)) throw InvalidArgument("oracle target lies outside the domain");
  double best = kInf;
  if ((y - source_).norm() <= 3.0 * h_) best = segment_weight(source_, y);
  const int ci = static_cast<int>(std::floor((y.x() - grid_.lo.x()) / h_));
  const int cj = static_cast<int>(std::floor((y.y() - grid_.lo.y()) / h_));
  for (int j = cj - 2; j <= cj + 3; ++j) {
    for (int i = ci - 2; i <= ci + 3; ++i) {
      if (i < 0 || j < 0 || i >= nx_ || j >= ny_) continue;
      const double d = dist_[index(i, j)];
      if (!std::isfinite(d)) continue;
      best = std::min(best, d + segment_weight(node(i, j), y));
    }
  }
  if (!std::isfinite(best)) throw InvalidArgument("oracle target is not connected to the grid");
  return best;
}

OracleEstimate qh_distance_oracle(const Domain<double>& domain, const Point<double>& x,
                                  const Point<double>& y, const GridSpec& grid) {
  if (x.is_infinity() || y.is_infinity()) throw InvalidArgument("oracle points must be finite");
  if (x.dim() != 2 || y.dim() != 2) throw InvalidArgument("the grid oracle is planar");
  grid.validate();
  if (x == y) return {0.0, oracle_error_bound(grid.stencil, grid.chamfer)};
  const QhDistanceField field(domain, x.coords(), grid);
  return {field.at(y.coords()), field.error_bound()};
}

}  // namespace hypmetric
