#include "hypmetric/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>

#include "hypmetric/errors.hpp"
#include "hypmetric/metrics.hpp"
#include "hypmetric/oracle.hpp"
#include "hypmetric/parallel.hpp"
#include "hypmetric/relations.hpp"

namespace hypmetric {

namespace {

using json = nlohmann::ordered_json;
using Eigen::Vector2d;
using Eigen::VectorXd;

constexpr double kPiD = kPi<double>;
constexpr double kLimitTolerance = 5e-3;
constexpr double kNonSharpGap = 1e-3;
constexpr double kIdentityBand = 1e-9;

std::mt19937_64 seeded(std::uint64_t seed, std::uint32_t stream, std::uint32_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), stream,
                    index};
  return std::mt19937_64(seq);
}

double log_uniform(std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
  return std::exp(u(rng));
}

VectorXd random_unit(std::mt19937_64& rng, int dim) {
  std::normal_distribution<double> g;
  VectorXd v(dim);
  do {
    for (int i = 0; i < dim; ++i) v(i) = g(rng);
  } while (v.norm() < 1e-8);
  return v.normalized();
}

std::string_view role_name(RadiusRole role) {
  switch (role) {
    case RadiusRole::Given: return "r";
    case RadiusRole::Inner: return "m";
    case RadiusRole::Outer: return "M";
    case RadiusRole::InnerK: return "m_k";
    case RadiusRole::OuterK: return "M_k";
  }
  return "?";
}

std::string describe(const InclusionClaim& c) {
  return std::string(to_string(c.inner)) + "(" + std::string(role_name(c.inner_radius)) + ") in " +
         std::string(to_string(c.outer)) + "(" + std::string(role_name(c.outer_radius)) + ")";
}

json vec(const VectorXd& v) { return std::vector<double>(v.data(), v.data() + v.size()); }

json draw_params(const RelationDraw& d) {
  json p{{"domain", to_string(d.domain.kind())},
         {"dim", d.x.dim()},
         {"x", vec(d.x.coords())},
         {"r", d.r}};
  p["abs_x"] = d.abs_x ? json(*d.abs_x) : json(nullptr);
  return p;
}

SamplerConfig case_config(const SuiteOptions& opts, int index) {
  SamplerConfig cfg = opts.sampler;
  cfg.seed = opts.seed + static_cast<std::uint64_t>(index);
  return cfg;
}

CaseRecord error_case(std::string kind, std::string name, json params, const Error& e) {
  return {std::move(kind), std::move(name), std::move(params), json{{"error", e.what()}}, false};
}

template <typename Fn>
double timed(Fn&& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void append(std::vector<CaseRecord>& out, std::vector<CaseRecord> more) {
  for (auto& c : more) out.push_back(std::move(c));
}

constexpr RelationId kPuncturedRows[] = {
    RelationId::P_J_IN_K,         RelationId::P_K_IN_J,       RelationId::P_J_IN_Q,
    RelationId::P_Q_IN_J,         RelationId::P_Q_IN_J_FROM_JR, RelationId::P_K_IN_Q,
    RelationId::P_Q_IN_K,         RelationId::P_Q_IN_K_FROM_KR, RelationId::P_UNIFORM_IN_Q,
    RelationId::P_UNIFORM_Q_OUT};

constexpr RelationId kHalfspaceRows[] = {
    RelationId::H_J_IN_K,         RelationId::H_K_IN_J,         RelationId::H_J_IN_Q,
    RelationId::H_Q_IN_J,         RelationId::H_Q_IN_J_FROM_JR, RelationId::H_K_IN_Q,
    RelationId::H_Q_IN_K,         RelationId::H_Q_IN_K_FROM_KR, RelationId::H_UNIFORM_IN_Q,
    RelationId::H_UNIFORM_Q_OUT};

constexpr RelationId kGeneralRows[] = {RelationId::GEN_JK};

}  // namespace

int SuiteResult::passed() const {
  return static_cast<int>(std::count_if(cases.begin(), cases.end(), [](const auto& c) { return c.pass; }));
}

int SuiteResult::failed() const { return static_cast<int>(cases.size()) - passed(); }

json to_json(const InclusionReport& report) {
  json j{{"holds", report.holds},
         {"worst_margin", report.worst_margin},
         {"contact_gap", report.contact_gap},
         {"slack", report.slack},
         {"samples_used", report.samples_used},
         {"seed", report.seed},
         {"method", report.method}};
  j["witness"] = report.witness ? vec(report.witness->coords()) : json(nullptr);
  j["contact"] = report.contact ? vec(report.contact->coords()) : json(nullptr);
  return j;
}

json to_json(const CaseRecord& record) {
  return {{"kind", record.kind},
          {"name", record.name},
          {"params", record.params},
          {"result", record.result},
          {"pass", record.pass}};
}

json to_json(const SuiteResult& result) {
  json cases = json::array();
  for (const auto& c : result.cases) cases.push_back(to_json(c));
  return {{"schema", 1},
          {"suite", result.suite},
          {"seed", result.seed},
          {"passed", result.passed()},
          {"failed", result.failed()},
          {"pass", result.pass()},
          {"wall_seconds", result.wall_seconds},
          {"cases", std::move(cases)}};
}

std::vector<CaseRecord> inclusion_cases(std::span<const RelationId> ids, int draws,
                                        const SuiteOptions& opts) {
  std::vector<CaseRecord> out;
  for (RelationId id : ids) {
    for (int i = 0; i < draws; ++i) {
      const RelationDraw draw = draw_relation(id, 2 + i % 2, opts.seed, i);
      CaseRecord rec{"inclusion", std::string(to_string(id)), draw_params(draw), json::array(), true};
      try {
        for (const ClaimResult& c : check_relation(draw, case_config(opts, i))) {
          rec.result.push_back({{"claim", describe(c.claim)},
                                {"inner_radius", c.inner_radius},
                                {"outer_radius", c.outer_radius},
                                {"report", to_json(c.report)}});
          rec.pass = rec.pass && c.report.holds;
        }
      } catch (const Error& e) {
        rec = error_case("inclusion", rec.name, rec.params, e);
      }
      out.push_back(std::move(rec));
    }
  }
  return out;
}

std::vector<CaseRecord> sharpness_cases(std::span<const RelationId> ids, int draws,
                                        const SuiteOptions& opts) {
  std::vector<CaseRecord> out;
  for (RelationId id : ids) {
    const auto claims = inclusion_claims(id);
    for (const InclusionClaim& claim : claims) {
      if (!claim.sharp) continue;
      for (int i = 0; i < draws; ++i) {
        const RelationDraw draw = draw_relation(id, 2 + i % 2, opts.seed + 1, i);
        json params = draw_params(draw);
        params["claim"] = describe(claim);
        try {
          const auto res = inclusion_radius<double>(id, draw.r, draw.abs_x);
          const double inner_r = *claim_radius(res, claim.inner_radius, draw.r);
          const double outer_r = *claim_radius(res, claim.outer_radius, draw.r);
          const BallSpec<double> inner{draw.domain, claim.inner, draw.x, inner_r};
          const BallSpec<double> outer{draw.domain, claim.outer, draw.x, outer_r};
          const InclusionReport report = check_inclusion(inner, outer, case_config(opts, i));
          const bool pass = report.holds && report.contact_gap <= opts.tol;
          out.push_back({"sharpness", std::string(to_string(id)), std::move(params),
                         {{"inner_radius", inner_r},
                          {"outer_radius", outer_r},
                          {"max_gap", opts.tol},
                          {"report", to_json(report)}},
                         pass});
        } catch (const Error& e) {
          out.push_back(error_case("sharpness", std::string(to_string(id)), std::move(params), e));
        }
      }
    }
  }
  return out;
}

CaseRecord non_sharp_gap_case(const SuiteOptions& opts) {
  const RelationId id = RelationId::P_K_IN_Q;
  const double r = 0.2;
  const auto draw = make_draw(id, Domain<double>::punctured_space(), Point<double>{1.0, 0.0}, r);
  json params = draw_params(draw);
  params["claim"] = "k(m) in q(r), not sharp";
  try {
    const auto res = inclusion_radius<double>(id, r, draw.abs_x);
    const BallSpec<double> inner{draw.domain, MetricKind::K, draw.x, *res.m};
    const BallSpec<double> outer{draw.domain, MetricKind::Q, draw.x, r};
    const InclusionReport report = check_inclusion(inner, outer, case_config(opts, 0));
    return {"non-sharp gap",
            std::string(to_string(id)),
            std::move(params),
            {{"inner_radius", *res.m}, {"min_gap", kNonSharpGap}, {"report", to_json(report)}},
            report.holds && report.contact_gap > kNonSharpGap};
  } catch (const Error& e) {
    return error_case("non-sharp gap", std::string(to_string(id)), std::move(params), e);
  }
}

std::vector<CaseRecord> limit_cases() {
  const std::vector<double> rs{1e-2, 1e-3, 1e-4};
  std::vector<CaseRecord> out;
  for (RelationId id : kAllRelations) {
    const auto kind = limit_claim(id);
    if (!kind) continue;
    std::vector<std::optional<double>> xs{std::nullopt};
    if (abs_x_use(id) == AbsXUse::Required) xs = {0.5, 1.0, 2.0};
    for (const auto& a : xs) {
      json params{{"ratio", to_string(*kind)}, {"r", rs}};
      params["abs_x"] = a ? json(*a) : json(nullptr);
      try {
        const auto ratios = limit_ratio_scan(id, a, rs);
        std::vector<double> dev;
        for (double v : ratios) dev.push_back(std::abs(v - 1.0));
        const bool pass = dev[1] <= kLimitTolerance && dev[0] >= dev[1] && dev[1] >= dev[2];
        out.push_back({"limit",
                       std::string(to_string(id)),
                       std::move(params),
                       {{"ratios", ratios}, {"deviation", dev}, {"tolerance", kLimitTolerance}},
                       pass});
      } catch (const Error& e) {
        out.push_back(error_case("limit", std::string(to_string(id)), std::move(params), e));
      }
    }
  }
  return out;
}

std::pair<Vector2d, Vector2d> oracle_pair(DomainKind kind, std::uint64_t seed, int index) {
  auto rng = seeded(seed, 0x0AC1Eu + static_cast<std::uint32_t>(kind), static_cast<std::uint32_t>(index));
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const auto point = [&]() -> Vector2d {
    if (kind == DomainKind::HalfSpace) return {2.0 * unit(rng) - 1.0, log_uniform(rng, 0.5, 2.0)};
    const double a = 2.0 * kPiD * unit(rng);
    const double rho = log_uniform(rng, 0.5, 2.0);
    return {rho * std::cos(a), rho * std::sin(a)};
  };
  const Vector2d x = point();
  const Vector2d y = point();
  return {x, y};
}

std::vector<CaseRecord> oracle_cases(int pairs, double max_rel_error, const SuiteOptions& opts) {
  std::vector<CaseRecord> out;
  for (DomainKind kind : {DomainKind::HalfSpace, DomainKind::PuncturedSpace}) {
    const Domain<double> domain =
        kind == DomainKind::HalfSpace ? Domain<double>::half_space() : Domain<double>::punctured_space();
    std::vector<CaseRecord> slots(static_cast<std::size_t>(std::max(pairs, 0)));
    parallel_for(slots.size(), [&](std::size_t i) {
      const auto [x, y] = oracle_pair(kind, opts.seed, static_cast<int>(i));
      json params{{"domain", to_string(kind)}, {"x", vec(x)}, {"y", vec(y)}, {"resolution", 512}, {"stencil", 16}};
      try {
        const GridSpec grid = fit_grid(domain, x, y, 512, 16);
        const OracleEstimate est =
            qh_distance_oracle(domain, Point<double>(VectorXd(x)), Point<double>(VectorXd(y)), grid);
        const double exact = kernel::k(domain, x, y);
        const double rel = std::abs(est.value - exact) / exact;
        slots[i] = {"oracle",
                    std::string(to_string(kind)),
                    std::move(params),
                    {{"estimate", est.value},
                     {"closed_form", exact},
                     {"relative_error", rel},
                     {"declared_bound", est.relative_error_bound},
                     {"max_relative_error", max_rel_error}},
                    rel <= max_rel_error};
      } catch (const Error& e) {
        slots[i] = error_case("oracle", std::string(to_string(kind)), std::move(params), e);
      }
    });
    append(out, std::move(slots));
  }
  return out;
}

std::vector<CaseRecord> ball_identity_cases(BallIdentity which, int probes, const SuiteOptions& opts) {
  struct Config {
    VectorXd x;
    double r;
  };
  std::vector<Config> configs;
  const bool chordal = which == BallIdentity::Chordal;
  if (chordal) {
    configs.push_back({(VectorXd(2) << 1.0, 0.0).finished(), 0.5});
    configs.push_back({(VectorXd(2) << 2.0, 0.0).finished(), 0.3});
    configs.push_back({(VectorXd(3) << 0.2, -0.1, 0.05).finished(), 0.9});
    configs.push_back({(VectorXd(3) << 3.0, 4.0, -1.0).finished(), 0.15});
  } else {
    configs.push_back({(VectorXd(2) << 0.0, 1.0).finished(), std::log(2.0)});
    configs.push_back({(VectorXd(2) << 1.0, 1.0).finished(), std::log(2.0)});
    configs.push_back({(VectorXd(3) << -2.0, 0.5, 0.3).finished(), 1.7});
    configs.push_back({(VectorXd(3) << 4.0, 1.0, 6.0).finished(), 0.05});
  }
  const Domain<double> half = Domain<double>::half_space();

  std::vector<CaseRecord> out;
  for (std::size_t c = 0; c < configs.size(); ++c) {
    const VectorXd& x = configs[c].x;
    const double r = configs[c].r;
    const EuclideanBall<double> ball =
        chordal ? chordal_ball_as_euclidean(x, r) : qh_ball_as_euclidean_halfspace(x, r);
    const auto in_metric_ball = [&](const VectorXd& z) {
      if (chordal) return kernel::q(x, z) < r;
      return half.contains(z) && kernel::k_halfspace(x, z) < r;
    };
    auto rng = seeded(opts.seed, chordal ? 0xC40Du : 0x4A1Fu, static_cast<std::uint32_t>(c));
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    int disagreements = 0;
    int outside_band = 0;
    double worst_offset = 0.0;
    for (int i = 0; i < probes; ++i) {
      VectorXd z;
      if (i % 2 == 0) {
        z = ball.center + 2.0 * ball.radius * VectorXd::NullaryExpr(x.size(), [&] { return 2.0 * unit(rng) - 1.0; });
      } else {
        // Close to the sphere, where rounding decides.
        const double rel = 1e-6 * (2.0 * unit(rng) - 1.0);
        z = ball.center + ball.radius * (1.0 + rel) * random_unit(rng, static_cast<int>(x.size()));
      }
      const bool a = in_metric_ball(z);
      const bool b = ball.contains(z);
      if (a == b) continue;
      ++disagreements;
      const double offset = std::abs((z - ball.center).norm() - ball.radius);
      worst_offset = std::max(worst_offset, offset);
      if (offset > kIdentityBand) ++outside_band;
    }
    out.push_back({"ball identity",
                   chordal ? "chordal_ball_as_euclidean" : "qh_ball_as_euclidean_halfspace",
                   {{"x", vec(x)}, {"r", r}, {"probes", probes}},
                   {{"center", vec(ball.center)},
                    {"radius", ball.radius},
                    {"disagreements", disagreements},
                    {"disagreements_off_sphere", outside_band},
                    {"worst_offset", worst_offset},
                    {"band", kIdentityBand}},
                   outside_band == 0});
  }
  return out;
}

std::vector<CaseRecord> gehring_palka_cases(int pairs, const SuiteOptions& opts) {
  std::vector<CaseRecord> out;
  for (DomainKind kind : {DomainKind::PuncturedSpace, DomainKind::HalfSpace}) {
    const Domain<double> domain =
        kind == DomainKind::HalfSpace ? Domain<double>::half_space() : Domain<double>::punctured_space();
    for (int dim : {2, 3}) {
      auto rng = seeded(opts.seed, 0x6E7Au + static_cast<std::uint32_t>(kind),
                        static_cast<std::uint32_t>(dim));
      std::uniform_real_distribution<double> unit(0.0, 1.0);
      const auto point = [&]() -> VectorXd {
        if (kind == DomainKind::PuncturedSpace) return log_uniform(rng, 0.1, 10.0) * random_unit(rng, dim);
        VectorXd v(dim);
        for (int i = 0; i + 1 < dim; ++i) v(i) = 10.0 * unit(rng) - 5.0;
        v(dim - 1) = log_uniform(rng, 0.1, 10.0);
        return v;
      };
      int violations = 0;
      double worst = -std::numeric_limits<double>::infinity();
      for (int i = 0; i < pairs; ++i) {
        const VectorXd x = point();
        const VectorXd y = point();
        const double excess = kernel::j(domain, x, y) - kernel::k(domain, x, y);
        worst = std::max(worst, excess);
        if (excess > 1e-12) ++violations;
      }
      out.push_back({"gehring-palka",
                     std::string(to_string(kind)),
                     {{"dim", dim}, {"pairs", pairs}},
                     {{"violations", violations}, {"max_j_minus_k", pairs > 0 ? json(worst) : json(nullptr)}},
                     violations == 0});
    }
  }
  return out;
}

std::vector<CaseRecord> linear_bound_cases(int points) {
  std::vector<CaseRecord> out;
  for (RelationId id : {RelationId::GEN_JK, RelationId::P_J_IN_K, RelationId::P_K_IN_J,
                        RelationId::H_J_IN_K, RelationId::H_K_IN_J}) {
    const auto iv = linear_bound_interval<double>(id);
    std::vector<double> failing;
    for (int i = 1; i <= points; ++i) {
      const double r = iv.lo + (iv.hi - iv.lo) * i / (points + 1);
      if (!linear_bound_check(id, r)) failing.push_back(r);
    }
    out.push_back({"linear bound",
                   std::string(to_string(id)),
                   {{"interval", {iv.lo, iv.hi}}, {"points", points}},
                   {{"failing_r", failing}},
                   failing.empty()});
  }
  return out;
}

std::vector<CaseRecord> dominance_cases(int points) {
  std::vector<CaseRecord> out;
  for (Dominance d : {Dominance::PuncturedVsGeneral, Dominance::HalfspaceVsGeneral,
                      Dominance::HalfspaceVsPunctured}) {
    const auto iv = dominance_interval<double>(d);
    const double hi = std::min(iv.hi, kUnboundedRadiusCap);
    std::vector<double> failing;
    for (int i = 1; i <= points; ++i) {
      const double r = iv.lo + (hi - iv.lo) * i / (points + 1);
      if (!dominance_check(d, r)) failing.push_back(r);
    }
    out.push_back({"dominance",
                   std::string(to_string(d)),
                   {{"interval", {iv.lo, hi}}, {"points", points}},
                   {{"failing_r", failing}},
                   failing.empty()});
  }
  return out;
}

std::vector<CaseRecord> unit_square_cases(int draws, const SuiteOptions& opts) {
  const Domain<double> square = unit_square<double>();
  GridSpec grid;
  grid.lo = {0.0, 0.0};
  grid.hi = {1.0, 1.0};
  grid.resolution = opts.sampler.oracle_grid.resolution;
  grid.stencil = opts.sampler.oracle_grid.stencil;
  constexpr int kCirclePoints = 720;

  std::vector<CaseRecord> out;
  for (int i = 0; i < draws; ++i) {
    auto rng = seeded(opts.seed, 0x5C0A4Eu, static_cast<std::uint32_t>(i));
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const Vector2d x(0.1 + 0.8 * unit(rng), 0.1 + 0.8 * unit(rng));
    const double r = std::log(2.0) * (1e-3 + 0.998 * unit(rng));
    const Point<double> center{VectorXd(x)};
    json params{{"domain", "unit-square"}, {"x", vec(x)}, {"r", r}};
    try {
      const QhDistanceField field(square, x, grid);
      const double d = square.boundary_distance(x);
      const double slack = field.error_bound() * r;

      // Euclidean sandwich: k < r on the inner circle, k >= r on the outer.
      const double inner_rho = -std::expm1(-r) * d;
      const double outer_rho = std::expm1(r) * d;
      double inner_worst = std::numeric_limits<double>::infinity();
      double outer_worst = std::numeric_limits<double>::infinity();
      for (int p = 0; p < kCirclePoints; ++p) {
        const double a = 2.0 * kPiD * p / kCirclePoints;
        const Vector2d u(std::cos(a), std::sin(a));
        inner_worst = std::min(inner_worst, r - field.at(x + inner_rho * u));
        outer_worst = std::min(outer_worst, field.at(x + outer_rho * u) - r);
      }
      const bool sandwich = inner_worst >= -slack && outer_worst >= -slack;
      out.push_back({"sandwich",
                     "unit-square",
                     params,
                     {{"inner_radius", inner_rho},
                      {"outer_radius", outer_rho},
                      {"inner_margin", inner_worst},
                      {"outer_margin", outer_worst},
                      {"slack", slack}},
                     sandwich});

      const auto res = inclusion_radius<double>(RelationId::GEN_JK, r);
      CaseRecord chain{"inclusion", "GEN_JK", params, json::array(), true};
      for (const InclusionClaim& claim : inclusion_claims(RelationId::GEN_JK)) {
        const double inner_r = *claim_radius(res, claim.inner_radius, r);
        const double outer_r = *claim_radius(res, claim.outer_radius, r);
        const InclusionReport report =
            check_inclusion({square, claim.inner, center, inner_r}, {square, claim.outer, center, outer_r},
                            case_config(opts, i), &field);
        chain.result.push_back({{"claim", describe(claim)},
                                {"inner_radius", inner_r},
                                {"outer_radius", outer_r},
                                {"report", to_json(report)}});
        chain.pass = chain.pass && report.holds;
      }
      out.push_back(std::move(chain));
    } catch (const Error& e) {
      out.push_back(error_case("unit square", "GEN_JK", std::move(params), e));
    }
  }
  return out;
}

std::vector<CaseRecord> inscribed_ball_cases(const SuiteOptions& opts) {
  std::vector<CaseRecord> out;
  for (double abs_x : {1.0, 2.0}) {
    for (double r : {0.1, 0.5, 1.0, 2.0}) {
      const Point<double> x{abs_x, 0.0};
      json params{{"x", vec(x.coords())}, {"r", r}};
      try {
        const InscribedBall b = explore_inscribed_ball(x, r, case_config(opts, 0));
        out.push_back({"inscribed ball",
                       "punctured",
                       std::move(params),
                       {{"best_t", b.best_t},
                        {"best_center", vec(b.best_center.coords())},
                        {"best_t_over_abs_x", b.best_t / abs_x},
                        {"cosh_r", std::cosh(r)},
                        {"sandwich_low", -std::expm1(-r) * abs_x},
                        {"sandwich_high", std::expm1(r) * abs_x},
                        {"asserted", false}},
                       true});
      } catch (const Error& e) {
        out.push_back(error_case("inscribed ball", "punctured", std::move(params), e));
      }
    }
  }
  return out;
}

SuiteResult run_suite(std::string_view name, const SuiteOptions& opts) {
  if (opts.samples < 0) throw InvalidArgument("sample count must be non-negative");
  opts.sampler.validate();
  SuiteResult result;
  result.suite = std::string(name);
  result.seed = opts.seed;
  auto& cases = result.cases;
  const double seconds = timed([&] {
    if (name == "punctured") {
      append(cases, inclusion_cases(kPuncturedRows, opts.samples, opts));
      append(cases, ball_identity_cases(BallIdentity::Chordal, 1000, opts));
    } else if (name == "halfspace") {
      append(cases, inclusion_cases(kHalfspaceRows, opts.samples, opts));
      append(cases, ball_identity_cases(BallIdentity::HalfspaceK, 1000, opts));
    } else if (name == "general") {
      append(cases, inclusion_cases(kGeneralRows, opts.samples, opts));
      append(cases, unit_square_cases(opts.samples, opts));
    } else if (name == "limits") {
      append(cases, limit_cases());
    } else if (name == "sharpness") {
      append(cases, sharpness_cases(kAllRelations, opts.samples, opts));
      cases.push_back(non_sharp_gap_case(opts));
    } else if (name == "oracle") {
      append(cases, oracle_cases(opts.samples, oracle_error_bound(16), opts));
    } else if (name == "remarks") {
      append(cases, gehring_palka_cases(1000, opts));
      append(cases, linear_bound_cases(50));
      append(cases, dominance_cases(50));
      append(cases, inscribed_ball_cases(opts));
    } else {
      throw InvalidArgument("unknown suite '" + std::string(name) +
                            "' (expected punctured, halfspace, general, limits, sharpness, oracle or remarks)");
    }
  });
  result.wall_seconds = seconds;
  return result;
}

std::vector<CalibrationRow> calibrate_oracle(int pairs, int resolution, std::uint64_t seed) {
  if (pairs < 1) throw ConfigError("calibration needs at least one pair");
  std::vector<CalibrationRow> rows;
  for (DomainKind kind : {DomainKind::HalfSpace, DomainKind::PuncturedSpace}) {
    const Domain<double> domain =
        kind == DomainKind::HalfSpace ? Domain<double>::half_space() : Domain<double>::punctured_space();
    for (int stencil : {16, 8}) {
      for (bool chamfer : {true, false}) {
        std::vector<double> errors(static_cast<std::size_t>(pairs));
        parallel_for(errors.size(), [&](std::size_t i) {
          const auto [x, y] = oracle_pair(kind, seed, static_cast<int>(i));
          GridSpec grid = fit_grid(domain, x, y, resolution, stencil);
          grid.chamfer = chamfer;
          const double exact = kernel::k(domain, x, y);
          const double est = qh_distance_oracle(domain, Point<double>(VectorXd(x)),
                                                Point<double>(VectorXd(y)), grid).value;
          errors[i] = std::abs(est - exact) / exact;
        });
        double worst = 0.0;
        double sum = 0.0;
        for (double e : errors) {
          worst = std::max(worst, e);
          sum += e;
        }
        rows.push_back({kind, stencil, chamfer, pairs, worst, sum / pairs, oracle_error_bound(stencil, chamfer)});
      }
    }
  }
  return rows;
}

}  // namespace hypmetric
