#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <numbers>

#include "hypmetric/metrics.hpp"
#include "hypmetric/oracle.hpp"
#include "hypmetric/suites.hpp"

using namespace hypmetric;
using P = Point<double>;

namespace {

const auto kPunct = Domain<double>::punctured_space();
const auto kHalf = Domain<double>::half_space();

double oracle(const Domain<double>& d, const P& x, const P& y, int stencil = 16) {
  return qh_distance_oracle(d, x, y, fit_grid(d, x.coords(), y.coords(), 512, stencil)).value;
}

}  // namespace

TEST_SUITE("oracle") {
  TEST_CASE("closed-form spot values within 2%") {
    const double v = oracle(kHalf, P{0, 1}, P{0, 2});
    CHECK(std::abs(v / std::log(2.0) - 1) <= 0.02);
    const double w = oracle(kPunct, P{1, 0}, P{0, 1});
    CHECK(std::abs(w / (std::numbers::pi / 2) - 1) <= 0.02);
    CHECK(oracle(kHalf, P{0.3, 0.8}, P{0.3, 0.8}) == 0.0);
  }

  TEST_CASE("estimate carries the stored error bound") {
    const P x{0, 1};
    const P y{0.5, 1.5};
    const auto est = qh_distance_oracle(kHalf, x, y, fit_grid(kHalf, x.coords(), y.coords()));
    CHECK(est.relative_error_bound == oracle_error_bound(16));
    CHECK(std::abs(est.value - dist_k(kHalf, x, y)) <= est.relative_error_bound * dist_k(kHalf, x, y));
    CHECK(oracle_error_bound(16) <= 0.02);
    CHECK(oracle_error_bound(8) > oracle_error_bound(16));
    CHECK(oracle_error_bound(16, false) > oracle_error_bound(16, true));
  }

  TEST_CASE("stencil anisotropy") {
    const auto s16 = stencil_anisotropy(16);
    const auto s8 = stencil_anisotropy(8);
    CHECK(s16.min_ratio == doctest::Approx(1.0));
    CHECK(s16.max_ratio < s8.max_ratio);
    CHECK(s8.max_ratio == doctest::Approx(std::sqrt(4 - 2 * std::sqrt(2.0))).epsilon(1e-9));
    CHECK_THROWS_AS(stencil_anisotropy(4), ConfigError);
  }

  TEST_CASE("grid configuration errors") {
    GridSpec g;
    g.resolution = 10;
    CHECK_THROWS_AS(g.validate(), ConfigError);
    g = GridSpec{};
    g.stencil = 32;
    CHECK_THROWS_AS(g.validate(), ConfigError);
    g = GridSpec{};
    g.hi = g.lo;
    CHECK_THROWS_AS(g.validate(), ConfigError);
    CHECK_THROWS_AS(fit_grid(unit_square<double>(), {0.5, 0.5}, {0.4, 0.4}), ConfigError);
  }

  TEST_CASE("points outside the grid box or domain") {
    GridSpec g;
    g.lo = {-1, 0.1};
    g.hi = {1, 2};
    CHECK_THROWS_AS(qh_distance_oracle(kHalf, P{0, 1}, P{5, 1}, g), InvalidArgument);
    CHECK_THROWS_AS(qh_distance_oracle(kHalf, P{0, 1}, P{0, 1, 1}, g), InvalidArgument);
    QhDistanceField field(kHalf, {0, 1}, g);
    CHECK_THROWS_AS(field.at({3, 1}), InvalidArgument);
    CHECK(field.at({0, 1}) == 0.0);
  }

  TEST_CASE("general domain oracle brackets k by the Euclidean sandwich") {
    GridSpec g;
    g.lo = {0, 0};
    g.hi = {1, 1};
    const auto square = unit_square<double>();
    const Eigen::Vector2d x(0.5, 0.5);
    QhDistanceField field(square, x, g);
    // B^n(x, (1 - e^{-r}) d) ⊂ B_k(x, r) ⊂ B^n(x, (e^r - 1) d) with d = 0.5.
    for (double r : {0.1, 0.4, 0.65}) {
      const double inner = (1 - std::exp(-r)) * 0.5;
      const double outer = std::expm1(r) * 0.5;
      for (int i = 0; i < 36; ++i) {
        const double phi = 2 * std::numbers::pi * i / 36;
        const Eigen::Vector2d u(std::cos(phi), std::sin(phi));
        CHECK(field.at(x + 0.999 * inner * u) < r * (1 + field.error_bound()));
        CHECK(field.at(x + std::min(1.001 * outer, 0.499) * u) > r * (1 - field.error_bound()) - 1e-12);
      }
    }
  }

  TEST_CASE("random pairs in both planar domains") {
    SuiteOptions opts;
    opts.seed = 99;
    const auto cases = oracle_cases(6, 0.02, opts);
    CHECK(cases.size() == 12);
    for (const auto& c : cases) CHECK(c.pass);
  }

  TEST_CASE("results do not depend on the thread count") {
    SuiteOptions opts;
    opts.seed = 5;
    const char* saved = std::getenv("HYPMETRIC_THREADS");
    const std::string keep = saved ? saved : "";
    setenv("HYPMETRIC_THREADS", "1", 1);
    const auto one = oracle_cases(3, 0.02, opts);
    setenv("HYPMETRIC_THREADS", "4", 1);
    const auto four = oracle_cases(3, 0.02, opts);
    setenv("HYPMETRIC_THREADS", "zero", 1);
    CHECK_THROWS_AS(oracle_cases(3, 0.02, opts), ConfigError);
    if (saved) {
      setenv("HYPMETRIC_THREADS", keep.c_str(), 1);
    } else {
      unsetenv("HYPMETRIC_THREADS");
    }
    REQUIRE(one.size() == four.size());
    for (std::size_t i = 0; i < one.size(); ++i) CHECK(one[i].result.dump() == four[i].result.dump());
  }
}
