#include "hypmetric/relations.hpp"

#include <cmath>
#include <random>

#include "hypmetric/errors.hpp"

namespace hypmetric {

namespace {

double log_uniform(std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
  return std::exp(u(rng));
}

Eigen::VectorXd random_unit(std::mt19937_64& rng, int dim) {
  std::normal_distribution<double> g;
  Eigen::VectorXd v(dim);
  do {
    for (int i = 0; i < dim; ++i) v(i) = g(rng);
  } while (v.norm() < 1e-8);
  return v.normalized();
}

}  // namespace

RelationDraw make_draw(RelationId id, const Domain<double>& domain, const Point<double>& x, double r) {
  std::optional<double> abs_x;
  if (abs_x_use(id) != AbsXUse::None) {
    if (relation_domain(id) == DomainKind::HalfSpace) {
      const auto& c = x.coords();
      if (c.head(c.size() - 1).norm() != 0.0) {
        throw InvalidArgument(std::string(to_string(id)) + " needs the center on the e_n axis");
      }
      abs_x = c(c.size() - 1);
    } else {
      abs_x = x.norm();
    }
  }
  return {id, domain, x, r, abs_x};
}

RelationDraw draw_relation(RelationId id, int dim, std::uint64_t seed, int index) {
  if (dim < 2) throw InvalidArgument("draws need dimension at least 2");
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(id), static_cast<std::uint32_t>(index),
                    static_cast<std::uint32_t>(dim)};
  std::mt19937_64 rng(seq);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  DomainKind kind = relation_domain(id);
  if (kind == DomainKind::General) {
    kind = index % 2 == 0 ? DomainKind::PuncturedSpace : DomainKind::HalfSpace;
  }
  const double height = log_uniform(rng, 0.1, 10.0);
  Eigen::VectorXd coords(dim);
  Domain<double> domain = Domain<double>::punctured_space();
  if (kind == DomainKind::PuncturedSpace) {
    coords = height * random_unit(rng, dim);
  } else {
    domain = Domain<double>::half_space();
    coords.setZero();
    if (!axis_centered(id)) {
      for (int i = 0; i + 1 < dim; ++i) coords(i) = 10.0 * unit(rng) - 5.0;
    }
    coords(dim - 1) = height;
  }
  const Point<double> x(coords);
  RelationDraw draw = make_draw(id, domain, x, 0.0);
  const auto iv = validity_interval<double>(id, draw.abs_x);
  const double hi = std::min(iv.hi, kUnboundedRadiusCap);
  // Stay off both ends of the open interval.
  draw.r = iv.lo + (hi - iv.lo) * (1e-3 + (1.0 - 2e-3) * unit(rng));
  return draw;
}

std::vector<ClaimResult> check_relation(const RelationDraw& draw, const SamplerConfig& cfg) {
  const auto res = inclusion_radius<double>(draw.id, draw.r, draw.abs_x);
  std::vector<ClaimResult> out;
  for (const InclusionClaim& claim : inclusion_claims(draw.id)) {
    const auto inner_r = claim_radius(res, claim.inner_radius, draw.r);
    const auto outer_r = claim_radius(res, claim.outer_radius, draw.r);
    if (!inner_r || !outer_r) continue;
    const BallSpec<double> inner{draw.domain, claim.inner, draw.x, *inner_r};
    const BallSpec<double> outer{draw.domain, claim.outer, draw.x, *outer_r};
    out.push_back({claim, *inner_r, *outer_r, check_inclusion(inner, outer, cfg)});
  }
  return out;
}

}  // namespace hypmetric
