#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hypmetric/radii.hpp"
#include "hypmetric/sampler.hpp"
#include "hypmetric/types.hpp"

namespace hypmetric {

/// One parameter draw for a formula row: domain, center and source radius.
struct RelationDraw {
  RelationId id;
  Domain<double> domain;
  Point<double> x;
  double r;
  /// |x| for punctured rows, x_n for half-space rows; empty when unused.
  std::optional<double> abs_x;
};

/// Largest r used when a row's interval is unbounded.
inline constexpr double kUnboundedRadiusCap = 5.0;

/// Deterministic draw number `index` for row `id` in R^dim.
///
/// Punctured rows take |x| log-uniform in [0.1, 10] and a random direction.
/// Half-space rows put x on the e_n axis at height log-uniform in [0.1, 10]
/// when the formula needs it, and anywhere above the boundary otherwise.
/// GEN_JK alternates between the punctured space and the half-space. r is
/// uniform over the validity interval (capped at kUnboundedRadiusCap).
RelationDraw draw_relation(RelationId id, int dim, std::uint64_t seed, int index);

/// Builds a draw from explicit values, filling abs_x from x.
RelationDraw make_draw(RelationId id, const Domain<double>& domain, const Point<double>& x, double r);

struct ClaimResult {
  InclusionClaim claim;
  double inner_radius;
  double outer_radius;
  InclusionReport report;
};

/// Checks every inclusion the row states at this draw. Claims whose radius
/// the row leaves undefined at this r are skipped.
std::vector<ClaimResult> check_relation(const RelationDraw& draw, const SamplerConfig& cfg);

}  // namespace hypmetric
