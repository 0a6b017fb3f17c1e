#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hypmetric/oracle.hpp"
#include "hypmetric/radii.hpp"
#include "hypmetric/types.hpp"

namespace hypmetric {

struct SamplerConfig {
  int directions = 4096;
  /// Step size at which the local contact search stops (radians on the
  /// direction sphere).
  double bisection_tol = 1e-10;
  /// Interior points drawn when the inner boundary has no exact sampler.
  int monte_carlo = 20000;
  std::uint64_t seed = 42;
  /// Inclusion holds when every margin is at least -tolerance.
  double tolerance = 1e-9;
  /// Number of best samples polished by the local search.
  int refine = 8;
  /// Grid for the oracle when a general domain needs k.
  GridSpec oracle_grid{};

  void validate() const;
};

/// Margins are in the outer metric: outer radius minus outer distance.
struct InclusionReport {
  bool holds = true;
  double worst_margin = 0.0;
  /// A sample violating the inclusion; present iff !holds.
  std::optional<Point<double>> witness;
  /// The sample attaining worst_margin.
  std::optional<Point<double>> contact;
  /// |worst_margin|: how close the inner boundary comes to the outer one.
  double contact_gap = 0.0;
  /// Extra slack granted for oracle error on general-domain k checks.
  double slack = 0.0;
  long samples_used = 0;
  std::uint64_t seed = 0;
  /// "boundary" or "monte-carlo".
  std::string method = "boundary";
};

/// Deterministic well-spread unit vectors in R^n: equally spaced angles in
/// the plane, a Fibonacci lattice on S^2, seeded Gaussian draws above that.
std::vector<Eigen::VectorXd> sphere_directions(int n, int count, std::uint64_t seed);

/// Points on the boundary of the ball, from exact parametrizations.
///
/// q-balls and half-space k-balls are Euclidean balls, punctured k-balls
/// come from the log-polar isometry, and j-spheres are intersected with rays
/// in closed form. Throws RegimeError when no exact description applies
/// (general domains, chordal balls reaching the boundary).
std::vector<Point<double>> sample_ball_boundary(const BallSpec<double>& ball,
                                                const SamplerConfig& cfg);

/// Samples the inner ball and evaluates the outer metric.
///
/// Uses the exact boundary when available and Monte Carlo interior points
/// otherwise (with k from the grid oracle in general planar domains). The
/// best samples are refined by a local search over the boundary parameter.
InclusionReport check_inclusion(const BallSpec<double>& inner, const BallSpec<double>& outer,
                                const SamplerConfig& cfg);

/// As above, reusing a distance field from the common center for k in a
/// general domain instead of running the oracle again.
InclusionReport check_inclusion(const BallSpec<double>& inner, const BallSpec<double>& outer,
                                const SamplerConfig& cfg, const QhDistanceField* field);

/// |worst margin| of the inclusion inner ⊂ outer; near zero when the balls
/// touch.
double sharpness_contact(const BallSpec<double>& inner, const BallSpec<double>& outer,
                         const SamplerConfig& cfg);

/// The ratio each row claims tends to 1, at every r.
std::vector<double> limit_ratio_scan(RelationId id, std::optional<double> abs_x,
                                     const std::vector<double>& r_values);

struct InscribedBall {
  double best_t;
  Point<double> best_center;
};

/// Largest Euclidean ball B^n(z, t) ⊂ B_k(x, r) in the punctured space with z
/// on the ray through x, found by golden-section search on |z|.
InscribedBall explore_inscribed_ball(const Point<double>& x, double r, const SamplerConfig& cfg);

}  // namespace hypmetric
