#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hypmetric/radii.hpp"
#include "hypmetric/sampler.hpp"

namespace hypmetric {

struct SuiteOptions {
  /// Draws per relation (inclusion, sharpness), pairs per domain (oracle),
  /// or draws in the unit square (general).
  int samples = 200;
  std::uint64_t seed = 42;
  /// Largest contact gap accepted for a sharp inclusion.
  double tol = 1e-6;
  SamplerConfig sampler{};
};

struct CaseRecord {
  std::string kind;
  std::string name;
  nlohmann::ordered_json params;
  nlohmann::ordered_json result;
  bool pass = true;
};

struct SuiteResult {
  std::string suite;
  std::vector<CaseRecord> cases;
  std::uint64_t seed = 0;
  double wall_seconds = 0.0;

  int passed() const;
  int failed() const;
  bool pass() const { return failed() == 0; }
};

inline constexpr std::string_view kSuiteNames[] = {"punctured", "halfspace", "general", "limits",
                                                   "sharpness", "oracle",    "remarks"};

/// Runs one named suite. Throws InvalidArgument for unknown names.
SuiteResult run_suite(std::string_view name, const SuiteOptions& opts);

nlohmann::ordered_json to_json(const InclusionReport& report);
nlohmann::ordered_json to_json(const CaseRecord& record);
/// Versioned with `schema: 1`.
nlohmann::ordered_json to_json(const SuiteResult& result);

// Building blocks of the suites.

/// Every inclusion each row states, at `draws` draws alternating R^2 / R^3.
std::vector<CaseRecord> inclusion_cases(std::span<const RelationId> ids, int draws,
                                        const SuiteOptions& opts);

/// contact_gap <= opts.tol for every claim marked sharp.
std::vector<CaseRecord> sharpness_cases(std::span<const RelationId> ids, int draws,
                                        const SuiteOptions& opts);

/// P_K_IN_Q at r = 0.2, |x| = 1 must leave a gap above 1e-3.
CaseRecord non_sharp_gap_case(const SuiteOptions& opts);

/// Ratio within 5e-3 of 1 at r = 1e-3 and deviation shrinking over
/// r = 1e-2, 1e-3, 1e-4; |x| in {0.5, 1, 2} where the row depends on it.
std::vector<CaseRecord> limit_cases();

/// Oracle against the closed form on `pairs` random pairs per planar domain.
std::vector<CaseRecord> oracle_cases(int pairs, double max_rel_error, const SuiteOptions& opts);

enum class BallIdentity { Chordal, HalfspaceK };

/// Membership equivalence of a ball conversion on `probes` points per
/// configuration; disagreement is allowed within 1e-9 of the sphere.
std::vector<CaseRecord> ball_identity_cases(BallIdentity which, int probes, const SuiteOptions& opts);

std::vector<CaseRecord> gehring_palka_cases(int pairs, const SuiteOptions& opts);
std::vector<CaseRecord> linear_bound_cases(int points);
std::vector<CaseRecord> dominance_cases(int points);

/// Euclidean sandwich and the j/k chain in the unit square, with k from the
/// grid oracle.
std::vector<CaseRecord> unit_square_cases(int draws, const SuiteOptions& opts);

/// Logs the inscribed-ball search next to cosh r; always passes.
std::vector<CaseRecord> inscribed_ball_cases(const SuiteOptions& opts);

/// Random oracle test pair: half-plane points with x in [-1, 1] and height
/// log-uniform in [0.5, 2]; punctured-plane points with radius log-uniform
/// in [0.5, 2] and uniform angle.
std::pair<Eigen::Vector2d, Eigen::Vector2d> oracle_pair(DomainKind kind, std::uint64_t seed, int index);

struct CalibrationRow {
  DomainKind domain;
  int stencil;
  bool chamfer;
  int pairs;
  double worst;
  double mean;
  double bound;
};

/// Measures the oracle's relative error for both stencils with and without
/// chamfer scaling, against the stored bounds.
std::vector<CalibrationRow> calibrate_oracle(int pairs, int resolution, std::uint64_t seed);

}  // namespace hypmetric
