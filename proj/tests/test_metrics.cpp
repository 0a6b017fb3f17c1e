#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "hypmetric/metrics.hpp"

using namespace hypmetric;
using doctest::Approx;
using P = Point<double>;

namespace {

const auto kPunct = Domain<double>::punctured_space();
const auto kHalf = Domain<double>::half_space();

P random_point(std::mt19937_64& rng, const Domain<double>& domain, int dim) {
  std::normal_distribution<double> g;
  std::uniform_real_distribution<double> u(0.05, 3.0);
  Eigen::VectorXd v(dim);
  for (int i = 0; i < dim; ++i) v(i) = g(rng);
  if (domain.kind() == DomainKind::HalfSpace) {
    v(dim - 1) = u(rng);
  } else {
    v *= u(rng) / v.norm();
  }
  return P(v);
}

}  // namespace

TEST_SUITE("metrics") {
  TEST_CASE("j spot values") {
    CHECK(dist_j(kPunct, P{1, 0}, P{2, 0}) == Approx(std::log(2.0)).epsilon(1e-15));
    CHECK(dist_j(kHalf, P{0, 1}, P{1, 1}) == Approx(std::log(2.0)).epsilon(1e-15));
    CHECK(dist_j(kHalf, P{0.3, 0.7}, P{0.3, 0.7}) == 0.0);
    CHECK_THROWS_AS(dist_j(kPunct, P{0, 0}, P{1, 0}), DomainViolation);
    CHECK_THROWS_AS(dist_j(kHalf, P{0, -1}, P{1, 1}), DomainViolation);
    CHECK_THROWS_AS(dist_j(kPunct, P::infinity(2), P{1, 0}), InvalidArgument);
  }

  TEST_CASE("k spot values") {
    CHECK(dist_k(kHalf, P{0, 1}, P{0, 2}) == Approx(std::log(2.0)).epsilon(1e-14));
    CHECK(dist_k(kPunct, P{1, 0}, P{0, 1}) == Approx(std::numbers::pi / 2).epsilon(1e-14));
    CHECK(dist_k(kPunct, P{1, 2, 3}, P{1, 2, 3}) == 0.0);
    CHECK_THROWS_AS(dist_k(unit_square<double>(), P{0.5, 0.5}, P{0.4, 0.4}), UnsupportedClosedForm);
  }

  TEST_CASE("punctured k equals the angle on a sphere about the origin") {
    for (double t : {0.1, 0.75, 2.0, 3.0}) {
      const P x{2 * std::cos(0.3), 2 * std::sin(0.3)};
      const P y{2 * std::cos(0.3 + t), 2 * std::sin(0.3 + t)};
      CHECK(dist_k(kPunct, x, y) == Approx(t).epsilon(1e-13));
    }
  }

  TEST_CASE("q spot values") {
    CHECK(dist_q(P{0, 0}, P::infinity(2)) == 1.0);
    CHECK(dist_q(P{1, 0}, P{-1, 0}) == Approx(1.0).epsilon(1e-15));
    CHECK(dist_q(P{0.2, 5}, P{0.2, 5}) == 0.0);
    CHECK(dist_q(P::infinity(3), P::infinity(3)) == 0.0);
  }

  TEST_CASE("r_q") {
    CHECK(r_q(1.0) == Approx(1 / std::sqrt(2.0)).epsilon(1e-15));
    CHECK(r_q(2.0) == Approx(1 / std::sqrt(5.0)).epsilon(1e-15));
    CHECK(r_q(1e-8) < 1e-7);
    CHECK(r_q(1e8) < 1e-7);
    CHECK_THROWS_AS(r_q(0.0), InvalidArgument);
    CHECK_THROWS_AS(r_q(P{0, 0}), InvalidArgument);
  }

  TEST_CASE("ball membership") {
    CHECK(ball_contains(BallSpec<double>{kPunct, MetricKind::J, P{1, 0}, std::log(2.0)}, P{1.9, 0}));
    const BallSpec<double> bq{kPunct, MetricKind::Q, P{1, 0}, 0.5};
    CHECK(ball_contains(bq, P{1, 0}));
    CHECK_FALSE(ball_contains(bq, P{-1, 0}));
    CHECK_FALSE(ball_contains(bq, P::infinity(2)));
    CHECK_THROWS_AS(
        ball_contains(BallSpec<double>{unit_square<double>(), MetricKind::K, P{0.5, 0.5}, 0.1},
                      P{0.5, 0.5}),
        UnsupportedClosedForm);
    CHECK_THROWS_AS(ball_contains(BallSpec<double>{kPunct, MetricKind::Q, P{1, 0}, 1.0}, P{1, 0}),
                    InvalidArgument);
  }

  TEST_CASE("chordal ball as a Euclidean ball") {
    const auto b = chordal_ball_as_euclidean(P{1, 0}, 0.5);
    CHECK(b.center(0) == Approx(2.0).epsilon(1e-14));
    CHECK(b.center(1) == 0.0);
    CHECK(b.radius == Approx(std::sqrt(3.0)).epsilon(1e-14));
    // x = 2e_1, r = 0.3: 1 - 0.09 * 5 = 0.55, s = 0.3 * 5 * sqrt(0.91) / 0.55.
    const auto c = chordal_ball_as_euclidean(P{2, 0}, 0.3);
    CHECK(c.center(0) == Approx(2 / 0.55).epsilon(1e-14));
    CHECK(c.radius == Approx(2.6016523675007609).epsilon(1e-14));
    const auto tiny = chordal_ball_as_euclidean(P{1, 1}, 1e-9);
    CHECK((tiny.center - Eigen::Vector2d(1, 1)).norm() < 1e-8);
    CHECK(tiny.radius < 1e-8);
    CHECK_THROWS_AS(chordal_ball_as_euclidean(P{1, 0}, 0.7072), OutOfValidity);
    CHECK_THROWS_AS(chordal_ball_as_euclidean(P{1, 0}, 0.0), OutOfValidity);
  }

  TEST_CASE("half-space k-ball as a Euclidean ball") {
    const auto b = qh_ball_as_euclidean_halfspace(P{0, 1}, std::log(2.0));
    CHECK(b.center(1) == Approx(1.25).epsilon(1e-14));
    CHECK(b.radius == Approx(0.75).epsilon(1e-14));
    const auto t = qh_ball_as_euclidean_halfspace(P{1, 1}, std::log(2.0));
    CHECK(t.center(0) == Approx(1.0));
    CHECK(t.center(1) == Approx(1.25).epsilon(1e-14));
    for (int i = 0; i < 64; ++i) {
      const double phi = 2 * std::numbers::pi * i / 64;
      const P y(Eigen::VectorXd(t.center + t.radius * Eigen::Vector2d(std::cos(phi), std::sin(phi))));
      CHECK(std::abs(dist_k(kHalf, P{1, 1}, y) - std::log(2.0)) < 1e-9);
    }
    const auto tiny = qh_ball_as_euclidean_halfspace(P{0, 1}, 1e-12);
    CHECK(tiny.radius < 1e-11);
    CHECK_THROWS_AS(qh_ball_as_euclidean_halfspace(P{0, -1}, 0.5), DomainViolation);
  }

  TEST_CASE("inversion") {
    CHECK(invert(P{2, 0}) == P{0.5, 0});
    CHECK(invert(P{1, 0}) == P{1, 0});
    CHECK_THROWS_AS(invert(P{0, 0}), InvalidArgument);
    std::mt19937_64 rng(7);
    for (int i = 0; i < 100; ++i) {
      const P x = random_point(rng, kPunct, 3);
      const P back = invert(invert(x));
      CHECK((back.coords() - x.coords()).norm() <= 1e-14 * x.norm());
      CHECK(invert(x).norm() == Approx(1 / x.norm()).epsilon(1e-14));
    }
  }

  TEST_CASE("metric axioms on random triples") {
    std::mt19937_64 rng(42);
    for (const auto& domain : {kPunct, kHalf}) {
      for (MetricKind metric : {MetricKind::J, MetricKind::K, MetricKind::Q}) {
        for (int i = 0; i < 1000; ++i) {
          const int dim = 2 + i % 2;
          const P x = random_point(rng, domain, dim);
          const P y = random_point(rng, domain, dim);
          const P z = random_point(rng, domain, dim);
          const double xy = distance(metric, domain, x, y);
          const double yx = distance(metric, domain, y, x);
          CHECK(std::abs(xy - yx) <= 1e-12 * std::max(1.0, xy));
          CHECK(xy > 0.0);
          CHECK(xy <= distance(metric, domain, x, z) + distance(metric, domain, z, y) + 1e-9);
          if (metric == MetricKind::Q) CHECK(xy <= 1.0);
        }
      }
    }
  }

  TEST_CASE("j is dominated by k") {
    std::mt19937_64 rng(3);
    for (const auto& domain : {kPunct, kHalf}) {
      for (int i = 0; i < 1000; ++i) {
        const int dim = 2 + i % 2;
        const P x = random_point(rng, domain, dim);
        const P y = random_point(rng, domain, dim);
        CHECK(dist_j(domain, x, y) <= dist_k(domain, x, y) + 1e-12);
      }
    }
  }

  TEST_CASE("membership equivalence of the Euclidean ball forms") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    int checked = 0;
    for (int i = 0; i < 1000; ++i) {
      const P x{2 * u(rng), 2 * u(rng)};
      const double r = (0.05 + 0.9 * (u(rng) + 1) / 2) * chordal_ball_bound(x.norm());
      const auto e = chordal_ball_as_euclidean(x, r);
      const Eigen::Vector2d z = e.center + 1.5 * e.radius * Eigen::Vector2d(u(rng), u(rng));
      const double dq = dist_q(x, P(Eigen::VectorXd(z)));
      if (std::abs(dq - r) <= 1e-9) continue;
      CHECK((dq < r) == e.contains(z));
      ++checked;
    }
    CHECK(checked > 900);
    for (int i = 0; i < 1000; ++i) {
      const P x{u(rng), 1.5 + u(rng)};
      const double r = 2 * (u(rng) + 1.01);
      const auto e = qh_ball_as_euclidean_halfspace(x, r);
      const Eigen::Vector2d z = e.center + 1.5 * e.radius * Eigen::Vector2d(u(rng), u(rng));
      if (z(1) <= 0) continue;
      const double dk = dist_k(kHalf, x, P(Eigen::VectorXd(z)));
      if (std::abs(dk - r) <= 1e-9) continue;
      CHECK((dk < r) == e.contains(z));
    }
  }

  TEST_CASE("punctured metrics are invariant under inversion and scaling") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 500; ++i) {
      const int dim = 2 + i % 2;
      const P x = random_point(rng, kPunct, dim);
      const P y = random_point(rng, kPunct, dim);
      const double k = dist_k(kPunct, x, y);
      const double j = dist_j(kPunct, x, y);
      CHECK(std::abs(dist_k(kPunct, invert(x), invert(y)) - k) <= 1e-10);
      CHECK(std::abs(dist_j(kPunct, invert(x), invert(y)) - j) <= 1e-10);
      const P sx(Eigen::VectorXd(3.7 * x.coords()));
      const P sy(Eigen::VectorXd(3.7 * y.coords()));
      CHECK(std::abs(dist_k(kPunct, sx, sy) - k) <= 1e-10);
      CHECK(std::abs(dist_j(kPunct, sx, sy) - j) <= 1e-10);
    }
  }
}
