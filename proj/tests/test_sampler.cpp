#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hypmetric/metrics.hpp"
#include "hypmetric/relations.hpp"
#include "hypmetric/sampler.hpp"

using namespace hypmetric;
using P = Point<double>;

namespace {

const auto kPunct = Domain<double>::punctured_space();
const auto kHalf = Domain<double>::half_space();

SamplerConfig config(int directions = 4096) {
  SamplerConfig cfg;
  cfg.directions = directions;
  return cfg;
}

}  // namespace

TEST_SUITE("sampler") {
  TEST_CASE("direction sets") {
    const auto d2 = sphere_directions(2, 8, 1);
    REQUIRE(d2.size() == 8);
    for (int i = 0; i < 8; ++i) {
      const double step = std::acos(std::clamp(d2[i].dot(d2[(i + 1) % 8]), -1.0, 1.0));
      CHECK(step == doctest::Approx(std::numbers::pi / 4));
    }
    for (const auto& d : sphere_directions(3, 500, 1)) CHECK(d.norm() == doctest::Approx(1.0));
    const auto a = sphere_directions(5, 20, 9);
    const auto b = sphere_directions(5, 20, 9);
    for (int i = 0; i < 20; ++i) CHECK(a[i] == b[i]);
    CHECK_THROWS_AS(sphere_directions(2, 0, 1), InvalidArgument);
  }

  TEST_CASE("chordal boundary lies on the converted sphere") {
    const auto pts = sample_ball_boundary({kPunct, MetricKind::Q, P{1, 0}, 0.5}, config(1024));
    REQUIRE(pts.size() == 1024);
    for (const auto& p : pts) {
      CHECK(std::abs((p.coords() - Eigen::Vector2d(2, 0)).norm() - std::sqrt(3.0)) <= 1e-9);
    }
  }

  TEST_CASE("tiny balls collapse onto the center") {
    for (MetricKind m : {MetricKind::J, MetricKind::K, MetricKind::Q}) {
      const auto pts = sample_ball_boundary({kPunct, m, P{1, 1, 1}, 1e-9}, config(64));
      for (const auto& p : pts) CHECK((p.coords() - Eigen::Vector3d(1, 1, 1)).norm() < 1e-8);
    }
  }

  TEST_CASE("boundary points sit at the ball radius") {
    const P x{0.4, 1.3};
    for (const auto& domain : {kPunct, kHalf}) {
      for (MetricKind m : {MetricKind::J, MetricKind::K, MetricKind::Q}) {
        const double r = m == MetricKind::Q ? 0.3 : 0.9;
        for (const auto& p : sample_ball_boundary({domain, m, x, r}, config(256))) {
          CHECK(std::abs(distance(m, domain, x, p) - r) <= 1e-9);
        }
      }
    }
  }

  TEST_CASE("j-sphere along +e_1") {
    // j(e_1, t e_1) = log t, so the +e_1 sample is 2 e_1.
    const auto pts = sample_ball_boundary({kPunct, MetricKind::J, P{1, 0}, std::log(2.0)}, config(4096));
    double best = 1e300;
    for (const auto& p : pts) best = std::min(best, (p.coords() - Eigen::Vector2d(2, 0)).norm());
    CHECK(best <= 2e-3);
  }

  TEST_CASE("regime errors") {
    CHECK_THROWS_AS(sample_ball_boundary({kPunct, MetricKind::Q, P{1, 0}, 0.8}, config(16)), RegimeError);
    CHECK_THROWS_AS(
        sample_ball_boundary({unit_square<double>(), MetricKind::J, P{0.5, 0.5}, 0.2}, config(16)),
        RegimeError);
  }

  TEST_CASE("sharp j-in-k inclusion in the punctured plane") {
    const double r = 0.75;
    const double m = *inclusion_radius(RelationId::P_J_IN_K, r).m;
    const BallSpec<double> outer{kPunct, MetricKind::K, P{1, 0}, r};
    const auto rep = check_inclusion({kPunct, MetricKind::J, P{1, 0}, m}, outer, config());
    CHECK(rep.holds);
    CHECK(rep.contact_gap <= 1e-6);
    REQUIRE(rep.contact);
    CHECK(rep.contact->norm() == doctest::Approx(1.0).epsilon(1e-4));
    CHECK(sharpness_contact({kPunct, MetricKind::J, P{1, 0}, m}, outer, config()) <= 1e-6);

    const auto bad = check_inclusion({kPunct, MetricKind::J, P{1, 0}, m + 0.05}, outer, config());
    CHECK_FALSE(bad.holds);
    REQUIRE(bad.witness);
    CHECK(bad.witness->norm() == doctest::Approx(1.0).epsilon(0.1));
    const double angle = std::atan2(std::abs((*bad.witness)[1]), (*bad.witness)[0]);
    CHECK(angle == doctest::Approx(r).epsilon(0.15));
  }

  TEST_CASE("a ball contains itself with zero gap") {
    const BallSpec<double> b{kHalf, MetricKind::K, P{0.2, 0.7}, 0.6};
    const auto rep = check_inclusion(b, b, config(512));
    CHECK(rep.holds);
    CHECK(rep.contact_gap <= 1e-12);
  }

  TEST_CASE("sharp j-in-k inclusion in the half-plane") {
    const double m = *inclusion_radius(RelationId::H_J_IN_K, 1.0).m;
    const double gap = sharpness_contact({kHalf, MetricKind::J, P{0, 1}, m},
                                         {kHalf, MetricKind::K, P{0, 1}, 1.0}, config());
    CHECK(gap <= 1e-6);
  }

  TEST_CASE("punctured k/q inclusion is not sharp") {
    const auto res = inclusion_radius(RelationId::P_K_IN_Q, 0.2, std::optional(1.0));
    const double gap = sharpness_contact({kPunct, MetricKind::K, P{1, 0}, *res.m},
                                         {kPunct, MetricKind::Q, P{1, 0}, 0.2}, config());
    CHECK(gap > 1e-3);
  }

  TEST_CASE("input validation") {
    CHECK_THROWS_AS(check_inclusion({kPunct, MetricKind::J, P{1, 0}, 0.1},
                                    {kPunct, MetricKind::K, P{2, 0}, 0.1}, config()),
                    InvalidArgument);
    CHECK_THROWS_AS(check_inclusion({kPunct, MetricKind::J, P{1, 1}, 0.1},
                                    {kHalf, MetricKind::K, P{1, 1}, 0.1}, config()),
                    InvalidArgument);
    SamplerConfig cfg;
    cfg.directions = 0;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
    cfg = SamplerConfig{};
    cfg.bisection_tol = 0.1;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
  }

  TEST_CASE("unit-square chain via Monte Carlo and the oracle") {
    const auto square = unit_square<double>();
    const P x{0.4, 0.55};
    const double r = 0.4;
    const auto res = inclusion_radius(RelationId::GEN_JK, r);
    SamplerConfig cfg = config(256);
    cfg.monte_carlo = 4000;
    const auto a = check_inclusion({square, MetricKind::J, x, *res.m}, {square, MetricKind::K, x, r}, cfg);
    CHECK(a.holds);
    CHECK(a.method == "monte-carlo");
    CHECK(a.slack > 0.0);
    const auto b = check_inclusion({square, MetricKind::K, x, r}, {square, MetricKind::J, x, r}, cfg);
    CHECK(b.holds);
    const auto c = check_inclusion({square, MetricKind::J, x, r}, {square, MetricKind::K, x, *res.M}, cfg);
    CHECK(c.holds);
  }

  TEST_CASE("same seed, same report") {
    const auto draw = draw_relation(RelationId::P_K_IN_Q, 3, 42, 7);
    const auto a = check_relation(draw, config(1024));
    const auto b = check_relation(draw, config(1024));
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].report.worst_margin == b[i].report.worst_margin);
      CHECK(a[i].report.samples_used == b[i].report.samples_used);
    }
  }

  TEST_CASE("limit scans") {
    const auto v = limit_ratio_scan(RelationId::P_J_IN_K, std::nullopt, {1e-2, 1e-3, 1e-4});
    REQUIRE(v.size() == 3);
    CHECK(std::abs(v[1] - 1) < std::abs(v[0] - 1));
    CHECK(std::abs(v[2] - 1) < std::abs(v[1] - 1));
    CHECK(std::abs(v[0] - 1) == doctest::Approx(1e-2 / 4).epsilon(0.05));
    const auto g = limit_ratio_scan(RelationId::GEN_JK, std::nullopt, {1e-3});
    CHECK(std::abs(g[0] - 1) < 5e-3);
    const auto single = limit_ratio_scan(RelationId::H_K_IN_J, std::nullopt, {1e-4});
    CHECK(single.size() == 1);
    CHECK(single[0] == doctest::Approx(1.0).epsilon(1e-3));
    CHECK_THROWS_AS(limit_ratio_scan(RelationId::GEN_JK, std::nullopt, {1e-3, 0.9}), OutOfValidity);
  }

  TEST_CASE("inscribed Euclidean ball of a punctured k-ball") {
    const auto small = explore_inscribed_ball(P{1, 0}, 0.1, config(1024));
    CHECK(small.best_t >= 1 - std::exp(-0.1) - 1e-6);
    CHECK(small.best_t <= std::expm1(0.1) + 1e-6);
    const auto tiny = explore_inscribed_ball(P{1, 0}, 1e-6, config(256));
    CHECK(tiny.best_t < 2e-6);
    const auto big = explore_inscribed_ball(P{1, 0}, 1.0, config(1024));
    CHECK(big.best_t > 0.0);
    MESSAGE("r = 1: best_t = " << big.best_t << ", cosh 1 = " << std::cosh(1.0));
    CHECK_THROWS_AS(explore_inscribed_ball(P{0, 0}, 0.5, config()), DomainViolation);
  }
}
