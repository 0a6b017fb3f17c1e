#include "hypmetric/sampler.hpp"

#include <Eigen/QR>

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <numbers>
#include <numeric>
#include <random>

#include "hypmetric/errors.hpp"
#include "hypmetric/metrics.hpp"
#include "hypmetric/parallel.hpp"

namespace hypmetric {

namespace {

using Eigen::VectorXd;

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPiD = std::numbers::pi;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Uniform double in [0, 1) from the top 53 bits.
double unit53(std::uint64_t bits) { return static_cast<double>(bits >> 11) * 0x1.0p-53; }

/// Orthonormal basis of the complement of unit vector u, as columns.
Eigen::MatrixXd complement_basis(const VectorXd& u) {
  const Eigen::Index n = u.size();
  const Eigen::MatrixXd column = u;
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(column);
  const Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(n, n);
  return q.rightCols(n - 1);
}

/// Boundary of a ball as a family of maps from unit directions to points.
/// A direction may give no point on a patch.
class BoundaryMap {
 public:
  virtual ~BoundaryMap() = default;
  virtual int patches() const { return 1; }
  virtual std::optional<VectorXd> point(int patch, const VectorXd& u) const = 0;
  /// Boundary points missed by generic directions (patch seams).
  virtual std::vector<VectorXd> seams(int /*count*/) const { return {}; }
};

class EuclideanSphereMap final : public BoundaryMap {
 public:
  EuclideanSphereMap(VectorXd centre, double radius) : centre_(std::move(centre)), radius_(radius) {}
  std::optional<VectorXd> point(int, const VectorXd& u) const override {
    return VectorXd(centre_ + radius_ * u);
  }

 private:
  VectorXd centre_;
  double radius_;
};

/// k-sphere in R^n \ {0}: in log-polar coordinates (log|y|, y/|y|) it is the
/// product-metric sphere, reached by moving r u_r radially and r |u_t| along
/// the great circle. Directions whose angular part exceeds pi give interior
/// points and are dropped.
class PuncturedKMap final : public BoundaryMap {
 public:
  PuncturedKMap(const VectorXd& x, double r) : abs_x_(x.norm()), xhat_(x / x.norm()), r_(r) {}
  std::optional<VectorXd> point(int, const VectorXd& u) const override {
    const double ur = u.dot(xhat_);
    const VectorXd w = u - ur * xhat_;
    const double wn = w.norm();
    const double theta = r_ * wn;
    if (theta > kPiD) return std::nullopt;
    const double rho = abs_x_ * std::exp(r_ * ur);
    if (wn == 0.0) return VectorXd(rho * xhat_);
    return VectorXd(rho * (std::cos(theta) * xhat_ + std::sin(theta) * (w / wn)));
  }

 private:
  double abs_x_;
  VectorXd xhat_;
  double r_;
};

/// j-sphere in R^n \ {0} with c = e^r - 1. Where |y| >= |x| it is the sphere
/// |y - x| = c|x|; where |y| <= |x| it is the Apollonius sphere
/// |y - x| = c|y|, hit by the ray x + t u at the roots of
/// (1 - c^2) t^2 - 2 c^2 (x.u) t - c^2 |x|^2 = 0.
class PuncturedJMap final : public BoundaryMap {
 public:
  PuncturedJMap(VectorXd x, double c) : x_(std::move(x)), abs_x_(x_.norm()), c_(c) {}
  int patches() const override { return 3; }
  std::optional<VectorXd> point(int patch, const VectorXd& u) const override {
    if (patch == 0) {
      VectorXd p = x_ + c_ * abs_x_ * u;
      if (p.norm() < abs_x_) return std::nullopt;
      return p;
    }
    const double c2 = c_ * c_;
    const double a = (1.0 - c_) * (1.0 + c_);
    const double b = -2.0 * c2 * x_.dot(u);
    const double cc = -c2 * abs_x_ * abs_x_;
    const double disc = b * b - 4.0 * a * cc;
    if (disc < 0.0) return std::nullopt;
    const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
    double t = kInf;
    if (patch == 1 && a != 0.0) t = q / a;
    if (patch == 2 && q != 0.0) t = cc / q;
    if (!(t > 0.0) || !std::isfinite(t)) return std::nullopt;
    VectorXd p = x_ + t * u;
    const double np = p.norm();
    if (!(np > 0.0) || np > abs_x_) return std::nullopt;
    return p;
  }
  /// The patches meet where |y| = |x| and |y - x| = c|x|: at angle
  /// 2 arcsin(c/2) from x, when c <= 2.
  std::vector<VectorXd> seams(int count) const override {
    if (c_ > 2.0) return {};
    const double phi = 2.0 * std::asin(c_ / 2.0);
    const VectorXd xhat = x_ / abs_x_;
    const Eigen::MatrixXd basis = complement_basis(xhat);
    const int m = static_cast<int>(basis.cols());
    std::vector<VectorXd> out;
    const auto dirs = m == 1 ? std::vector<VectorXd>{VectorXd::Constant(1, 1.0), VectorXd::Constant(1, -1.0)}
                             : sphere_directions(m, std::max(count, 2), 0x5eed);
    for (const VectorXd& v : dirs) {
      out.emplace_back(abs_x_ * (std::cos(phi) * xhat + std::sin(phi) * (basis * v)));
    }
    return out;
  }

 private:
  VectorXd x_;
  double abs_x_;
  double c_;
};

/// j-sphere in {y_n > 0}: along x + t u it is met at t = c x_n when u_n >= 0
/// and at t = c x_n / (1 - c u_n) when u_n < 0.
class HalfJMap final : public BoundaryMap {
 public:
  HalfJMap(VectorXd x, double c) : x_(std::move(x)), c_(c) {}
  std::optional<VectorXd> point(int, const VectorXd& u) const override {
    const Eigen::Index n = x_.size();
    const double xn = x_(n - 1);
    const double un = u(n - 1);
    const double t = un >= 0.0 ? c_ * xn : c_ * xn / (1.0 - c_ * un);
    return VectorXd(x_ + t * u);
  }

 private:
  VectorXd x_;
  double c_;
};

std::unique_ptr<BoundaryMap> make_boundary_map(const BallSpec<double>& ball) {
  ball.validate();
  const VectorXd& x = ball.center.coords();
  const double r = ball.radius;
  const DomainKind kind = ball.domain.kind();
  switch (ball.metric) {
    case MetricKind::Q: {
      if (!(r * r * (1.0 + x.squaredNorm()) < 1.0)) {
        throw RegimeError("chordal ball is not a bounded Euclidean ball at this radius");
      }
      auto e = chordal_ball_as_euclidean(x, r);
      return std::make_unique<EuclideanSphereMap>(std::move(e.center), e.radius);
    }
    case MetricKind::K:
      if (kind == DomainKind::HalfSpace) {
        auto e = qh_ball_as_euclidean_halfspace(x, r);
        return std::make_unique<EuclideanSphereMap>(std::move(e.center), e.radius);
      }
      if (kind == DomainKind::PuncturedSpace) return std::make_unique<PuncturedKMap>(x, r);
      break;
    case MetricKind::J:
      if (kind == DomainKind::HalfSpace) return std::make_unique<HalfJMap>(x, std::expm1(r));
      if (kind == DomainKind::PuncturedSpace) return std::make_unique<PuncturedJMap>(x, std::expm1(r));
      break;
  }
  throw RegimeError("no exact boundary description for a " + std::string(to_string(ball.metric)) +
                    "-ball in a general domain");
}

struct Sample {
  int patch;     // -1 for seam points
  int direction; // index into the direction list, or the seam index
  VectorXd p;
  double margin;
};

/// Outer margin at p. Points outside the domain cannot lie in the outer ball.
class OuterMargin {
 public:
  OuterMargin(const BallSpec<double>& outer, const QhDistanceField* field)
      : outer_(outer), field_(field) {}
  double operator()(const VectorXd& p) const {
    if (!outer_.domain.contains(p)) return -kInf;
    if (outer_.metric == MetricKind::K && outer_.domain.kind() == DomainKind::General) {
      return outer_.radius - field_->at(p);
    }
    return outer_.radius - kernel::distance(outer_.metric, outer_.domain, outer_.center.coords(), p);
  }

 private:
  const BallSpec<double>& outer_;
  const QhDistanceField* field_;
};

void require_compatible(const BallSpec<double>& inner, const BallSpec<double>& outer) {
  inner.validate();
  outer.validate();
  if (inner.domain.kind() != outer.domain.kind() || inner.domain.label() != outer.domain.label()) {
    throw InvalidArgument("inner and outer balls live in different domains");
  }
  if (!(inner.center == outer.center)) throw InvalidArgument("inner and outer balls must share a center");
}

/// Compass search over the direction sphere for a smaller margin.
Sample refine(const BoundaryMap& map, const VectorXd& u0, Sample s, const OuterMargin& margin,
              double step, double tol) {
  VectorXd u = u0;
  int iterations = 0;
  while (step > tol && iterations < 400) {
    ++iterations;
    const Eigen::MatrixXd basis = complement_basis(u);
    bool improved = false;
    for (Eigen::Index k = 0; k < basis.cols() && !improved; ++k) {
      for (double sign : {1.0, -1.0}) {
        const VectorXd trial = (u + sign * step * basis.col(k)).normalized();
        const auto p = map.point(s.patch, trial);
        if (!p) continue;
        const double m = margin(*p);
        if (m < s.margin) {
          s.p = *p;
          s.margin = m;
          u = trial;
          improved = true;
          break;
        }
      }
    }
    if (!improved) step *= 0.5;
  }
  return s;
}

void finish(InclusionReport& report, const std::vector<Sample>& samples, double tolerance) {
  // Lowest margin wins; ties go to the earliest sample.
  std::size_t best = 0;
  for (std::size_t i = 1; i < samples.size(); ++i) {
    if (samples[i].margin < samples[best].margin) best = i;
  }
  report.worst_margin = samples[best].margin;
  report.contact_gap = std::abs(report.worst_margin);
  report.contact = Point<double>(samples[best].p);
  report.holds = report.worst_margin >= -(tolerance + report.slack);
  if (!report.holds) report.witness = report.contact;
}

InclusionReport check_by_boundary(const BoundaryMap& map, const BallSpec<double>& inner,
                                  const BallSpec<double>& outer, const SamplerConfig& cfg) {
  const int n = static_cast<int>(inner.center.dim());
  const auto dirs = sphere_directions(n, cfg.directions, cfg.seed);
  const OuterMargin margin(outer, nullptr);

  std::vector<std::vector<Sample>> per_dir(dirs.size());
  parallel_for(dirs.size(), [&](std::size_t i) {
    for (int patch = 0; patch < map.patches(); ++patch) {
      if (auto p = map.point(patch, dirs[i])) {
        const double m = margin(*p);
        per_dir[i].push_back({patch, static_cast<int>(i), std::move(*p), m});
      }
    }
  });
  std::vector<Sample> samples;
  for (auto& v : per_dir) {
    for (auto& s : v) samples.push_back(std::move(s));
  }
  const auto seams = map.seams(std::max(2, cfg.directions / 16));
  for (std::size_t i = 0; i < seams.size(); ++i) {
    samples.push_back({-1, static_cast<int>(i), seams[i], margin(seams[i])});
  }
  if (samples.empty()) throw RegimeError("boundary sampler produced no points");

  // Polish the lowest margins, one per direction.
  std::vector<std::size_t> order(samples.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return samples[a].margin < samples[b].margin; });
  std::vector<std::size_t> chosen;
  for (std::size_t idx : order) {
    if (static_cast<int>(chosen.size()) >= cfg.refine) break;
    if (samples[idx].patch < 0 || !std::isfinite(samples[idx].margin)) continue;
    chosen.push_back(idx);
  }
  const double spacing = n == 2 ? 2.0 * kPiD / cfg.directions
                                : std::pow(4.0 * kPiD / cfg.directions, 1.0 / (n - 1));
  std::vector<Sample> polished(chosen.size());
  parallel_for(chosen.size(), [&](std::size_t k) {
    const Sample& s = samples[chosen[k]];
    polished[k] = refine(map, dirs[s.direction], s, margin, 2.0 * spacing, cfg.bisection_tol);
  });
  for (auto& s : polished) samples.push_back(std::move(s));

  InclusionReport report;
  report.seed = cfg.seed;
  report.samples_used = static_cast<long>(samples.size());
  report.method = "boundary";
  finish(report, samples, cfg.tolerance);
  return report;
}

InclusionReport check_by_monte_carlo(const BallSpec<double>& inner, const BallSpec<double>& outer,
                                     const SamplerConfig& cfg, const QhDistanceField* shared) {
  const Domain<double>& domain = inner.domain;
  const VectorXd& x = inner.center.coords();
  const Eigen::Index n = x.size();
  const bool needs_oracle = domain.kind() == DomainKind::General &&
                            (inner.metric == MetricKind::K || outer.metric == MetricKind::K);
  std::optional<QhDistanceField> owned;
  const QhDistanceField* field = nullptr;
  if (needs_oracle) {
    if (n != 2) throw UnsupportedClosedForm("k in a general domain needs the planar grid oracle");
    if (shared) {
      field = shared;
    } else {
      owned.emplace(domain, Eigen::Vector2d(x), cfg.oracle_grid);
      field = &*owned;
    }
  }

  // Every j- and k-ball sits in B^n(x, (e^r - 1) d(x)).
  double bound = std::expm1(inner.radius) * domain.boundary_distance(x);
  if (inner.metric == MetricKind::Q) {
    const auto e = chordal_ball_as_euclidean(x, inner.radius);
    bound = (e.center - x).norm() + e.radius;
  }

  std::vector<VectorXd> points(static_cast<std::size_t>(cfg.monte_carlo));
  std::mt19937_64 rng(cfg.seed);
  for (auto& p : points) {
    VectorXd g(n);
    for (Eigen::Index i = 0; i < n; i += 2) {
      const double u1 = 1.0 - unit53(rng());
      const double u2 = unit53(rng());
      const double rad = std::sqrt(-2.0 * std::log(u1));
      g(i) = rad * std::cos(2.0 * kPiD * u2);
      if (i + 1 < n) g(i + 1) = rad * std::sin(2.0 * kPiD * u2);
    }
    const double scale = bound * std::pow(unit53(rng()), 1.0 / static_cast<double>(n));
    p = x + scale * g.normalized();
  }

  const OuterMargin margin(outer, field);
  const auto in_inner = [&](const VectorXd& p) {
    if (!domain.contains(p)) return false;
    if (inner.metric == MetricKind::K && field) return field->at(p) < inner.radius;
    return kernel::distance(inner.metric, domain, x, p) < inner.radius;
  };
  std::vector<double> margins(points.size(), kInf);
  parallel_for(points.size(), [&](std::size_t i) {
    if (in_inner(points[i])) margins[i] = margin(points[i]);
  });

  std::vector<Sample> samples;
  samples.push_back({-1, 0, x, margin(x)});
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (std::isfinite(margins[i]) || margins[i] == -kInf) {
      samples.push_back({0, static_cast<int>(i), points[i], margins[i]});
    }
  }

  InclusionReport report;
  report.seed = cfg.seed;
  report.samples_used = static_cast<long>(samples.size());
  report.method = "monte-carlo";
  if (field) report.slack = field->error_bound() * std::max(inner.radius, outer.radius);
  finish(report, samples, cfg.tolerance);
  return report;
}

}  // namespace

void SamplerConfig::validate() const {
  if (directions < 1) throw ConfigError("direction count must be positive");
  if (monte_carlo < 1) throw ConfigError("Monte Carlo sample count must be positive");
  if (!(bisection_tol > 0.0) || bisection_tol > 1e-6) {
    throw ConfigError("bisection tolerance must lie in (0, 1e-6]");
  }
  if (!(tolerance >= 0.0)) throw ConfigError("inclusion tolerance must be non-negative");
  if (refine < 0) throw ConfigError("refine count must be non-negative");
}

std::vector<VectorXd> sphere_directions(int n, int count, std::uint64_t seed) {
  if (n < 1 || count < 1) throw InvalidArgument("sphere_directions needs n >= 1 and count >= 1");
  std::vector<VectorXd> out;
  out.reserve(static_cast<std::size_t>(count));
  const double phase = unit53(splitmix64(seed));
  if (n == 1) {
    for (int i = 0; i < count; ++i) out.push_back(VectorXd::Constant(1, i % 2 == 0 ? 1.0 : -1.0));
    return out;
  }
  if (n == 2) {
    for (int i = 0; i < count; ++i) {
      const double a = 2.0 * kPiD * (i + phase) / count;
      out.push_back((VectorXd(2) << std::cos(a), std::sin(a)).finished());
    }
    return out;
  }
  if (n == 3) {
    const double golden = kPiD * (3.0 - std::sqrt(5.0));
    for (int i = 0; i < count; ++i) {
      const double z = 1.0 - (2.0 * i + 1.0) / count;
      const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
      const double a = golden * i + 2.0 * kPiD * phase;
      out.push_back((VectorXd(3) << rho * std::cos(a), rho * std::sin(a), z).finished());
    }
    return out;
  }
  std::mt19937_64 rng(seed);
  for (int i = 0; i < count; ++i) {
    VectorXd g(n);
    for (int k = 0; k < n; k += 2) {
      const double u1 = 1.0 - unit53(rng());
      const double u2 = unit53(rng());
      const double rad = std::sqrt(-2.0 * std::log(u1));
      g(k) = rad * std::cos(2.0 * kPiD * u2);
      if (k + 1 < n) g(k + 1) = rad * std::sin(2.0 * kPiD * u2);
    }
    out.push_back(g.normalized());
  }
  return out;
}

std::vector<Point<double>> sample_ball_boundary(const BallSpec<double>& ball, const SamplerConfig& cfg) {
  cfg.validate();
  const auto map = make_boundary_map(ball);
  const auto dirs = sphere_directions(static_cast<int>(ball.center.dim()), cfg.directions, cfg.seed);
  std::vector<Point<double>> out;
  for (const auto& u : dirs) {
    for (int patch = 0; patch < map->patches(); ++patch) {
      if (auto p = map->point(patch, u)) out.emplace_back(std::move(*p));
    }
  }
  for (auto& p : map->seams(std::max(2, cfg.directions / 16))) out.emplace_back(std::move(p));
  return out;
}

InclusionReport check_inclusion(const BallSpec<double>& inner, const BallSpec<double>& outer,
                                const SamplerConfig& cfg) {
  return check_inclusion(inner, outer, cfg, nullptr);
}

InclusionReport check_inclusion(const BallSpec<double>& inner, const BallSpec<double>& outer,
                                const SamplerConfig& cfg, const QhDistanceField* field) {
  cfg.validate();
  require_compatible(inner, outer);
  if (field && (inner.center.dim() != 2 || field->source() != Eigen::Vector2d(inner.center.coords()))) {
    throw InvalidArgument("the distance field must start at the ball center");
  }
  std::unique_ptr<BoundaryMap> map;
  try {
    map = make_boundary_map(inner);
  } catch (const RegimeError&) {
    return check_by_monte_carlo(inner, outer, cfg, field);
  }
  return check_by_boundary(*map, inner, outer, cfg);
}

double sharpness_contact(const BallSpec<double>& inner, const BallSpec<double>& outer,
                         const SamplerConfig& cfg) {
  return check_inclusion(inner, outer, cfg).contact_gap;
}

std::vector<double> limit_ratio_scan(RelationId id, std::optional<double> abs_x,
                                     const std::vector<double>& r_values) {
  std::vector<double> out;
  out.reserve(r_values.size());
  for (double r : r_values) {
    const auto iv = validity_interval<double>(id, abs_x);
    if (!iv.contains(r)) {
      throw OutOfValidity(std::string(to_string(id)) + " at r = " + std::to_string(r), iv.lo, iv.hi);
    }
    out.push_back(limit_ratio<double>(id, r, abs_x));
  }
  return out;
}

InscribedBall explore_inscribed_ball(const Point<double>& x, double r, const SamplerConfig& cfg) {
  const auto domain = Domain<double>::punctured_space();
  domain.require(x, "x");
  if (!(r > 0.0)) throw InvalidArgument("ball radius must be positive");
  cfg.validate();
  const auto boundary = sample_ball_boundary({domain, MetricKind::K, x, r}, cfg);
  const VectorXd xhat = x.coords() / x.norm();

  // Inradius of B_k(x, r) about z = s xhat, limited by the puncture too.
  const auto inradius = [&](double s) {
    const VectorXd z = s * xhat;
    if (!(kernel::k_punctured(x.coords(), z) < r)) return 0.0;
    double t = s;
    for (const auto& p : boundary) t = std::min(t, (p.coords() - z).norm());
    return t;
  };

  const double lo = x.norm() * std::exp(-r);
  const double hi = x.norm() * std::exp(r);
  constexpr int kScan = 64;
  int best = 0;
  std::vector<double> values(kScan + 1);
  for (int i = 0; i <= kScan; ++i) {
    values[i] = inradius(lo + (hi - lo) * i / kScan);
    if (values[i] > values[best]) best = i;
  }
  double a = lo + (hi - lo) * std::max(0, best - 1) / kScan;
  double b = lo + (hi - lo) * std::min(kScan, best + 1) / kScan;
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - g * (b - a);
  double d = a + g * (b - a);
  double fc = inradius(c);
  double fd = inradius(d);
  while (b - a > 1e-10 * hi) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - g * (b - a);
      fc = inradius(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + g * (b - a);
      fd = inradius(d);
    }
  }
  double s = 0.5 * (a + b);
  double t = inradius(s);
  const double s_scan = lo + (hi - lo) * best / kScan;
  if (values[best] > t) {
    s = s_scan;
    t = values[best];
  }
  return {t, Point<double>(VectorXd(s * xhat))};
}

}  // namespace hypmetric
