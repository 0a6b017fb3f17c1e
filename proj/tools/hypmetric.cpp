// hypmetric: radii, verification suites, figures and the grid oracle from the
// command line.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "hypmetric/errors.hpp"
#include "hypmetric/figures.hpp"
#include "hypmetric/metrics.hpp"
#include "hypmetric/oracle.hpp"
#include "hypmetric/radii.hpp"
#include "hypmetric/suites.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace hypmetric;

struct Globals {
  bool json = false;
  std::uint64_t seed = 42;
  double tol = 1e-6;
};

std::string num(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

json num_json(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

Eigen::Vector2d parse_pair(const std::string& text, const char* what) {
  double a = 0.0;
  double b = 0.0;
  char tail = 0;
  if (std::sscanf(text.c_str(), "%lf,%lf%c", &a, &b, &tail) != 2) {
    throw InvalidArgument(std::string(what) + " must look like 'x,y', got '" + text + "'");
  }
  return {a, b};
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  out << content;
  if (!out.flush()) throw std::runtime_error("failed writing '" + path.string() + "'");
}

// radii ---------------------------------------------------------------------

struct RadiiArgs {
  std::string relation;
  double r = 0.0;
  std::optional<double> abs_x;
};

int cmd_radii(const Globals& g, const RadiiArgs& a) {
  const RelationId id = relation_from_string(a.relation);
  const auto res = inclusion_radius<double>(id, a.r, a.abs_x);
  if (g.json) {
    json j{{"schema", 1},
           {"relation", to_string(id)},
           {"r", a.r},
           {"abs_x", a.abs_x ? json(*a.abs_x) : json(nullptr)},
           {"validity", {res.validity.lo, num_json(res.validity.hi)}},
           {"sharp", {{"m", res.sharp_m}, {"M", res.sharp_M}}},
           {"source", res.source}};
    j["m"] = res.m ? json(*res.m) : json(nullptr);
    j["M"] = res.M ? json(*res.M) : json(nullptr);
    j["m_k"] = res.m_k ? json(*res.m_k) : json(nullptr);
    j["M_k"] = res.M_k ? json(*res.M_k) : json(nullptr);
    std::cout << j.dump(2) << '\n';
    return 0;
  }
  std::cout << "relation  " << to_string(id) << '\n'
            << "source    " << res.source << '\n'
            << "r         " << num(a.r) << '\n';
  if (a.abs_x) std::cout << "|x|       " << num(*a.abs_x) << '\n';
  std::cout << "validity  (" << num(res.validity.lo) << ", " << num(res.validity.hi) << ")\n";
  const auto line = [](const char* name, const std::optional<double>& v, bool sharp) {
    if (!v) return;
    std::cout << name << num(*v) << (sharp ? "  (sharp)" : "") << '\n';
  };
  line("m         ", res.m, res.sharp_m);
  line("M         ", res.M, res.sharp_M);
  line("m (k)     ", res.m_k, false);
  line("M (k)     ", res.M_k, false);
  return 0;
}

// verify --------------------------------------------------------------------

struct VerifyArgs {
  std::string suite;
  int samples = 200;
  int directions = 4096;
  std::string out;
};

int cmd_verify(const Globals& g, const VerifyArgs& a) {
  SuiteOptions opts;
  opts.samples = a.samples;
  opts.seed = g.seed;
  opts.tol = g.tol;
  opts.sampler.directions = a.directions;
  opts.sampler.seed = g.seed;
  const SuiteResult result = run_suite(a.suite, opts);
  const std::string text = to_json(result).dump(2) + "\n";
  if (a.out.empty()) {
    std::cout << text;
  } else {
    write_file(a.out, text);
  }
  std::cerr << result.suite << ": " << result.passed() << " passed, " << result.failed() << " failed ("
            << num(result.wall_seconds) << " s)\n";
  for (const auto& c : result.cases) {
    if (!c.pass) std::cerr << "  FAIL " << c.kind << ' ' << c.name << ' ' << c.params.dump() << '\n';
  }
  return result.pass() ? 0 : 1;
}

// figure --------------------------------------------------------------------

struct FigureArgs {
  std::string id;
  std::string format = "csv";
  std::string out;
  std::string center;
  std::optional<double> radius;
  int points = 720;
};

int cmd_figure(const Globals& g, const FigureArgs& a) {
  if (a.format != "csv" && a.format != "svg") throw InvalidArgument("--format must be csv or svg");
  std::vector<FigureId> ids;
  if (a.id == "all") {
    ids.assign(std::begin(kAllFigures), std::end(kAllFigures));
    if (a.out.empty()) throw InvalidArgument("--id all needs --out DIR");
    if (!a.center.empty() || a.radius) throw InvalidArgument("--center and --radius apply to one figure");
    std::filesystem::create_directories(a.out);
  } else {
    ids.push_back(figure_from_string(a.id));
  }

  bool nested = true;
  json report = json::array();
  for (FigureId id : ids) {
    FigureSpec spec;
    spec.id = id;
    spec.points = a.points;
    spec.radius = a.radius;
    if (!a.center.empty()) spec.center = parse_pair(a.center, "--center");
    const Figure fig = make_figure(spec);
    const std::string text = a.format == "csv" ? figure_csv(fig) : figure_svg(fig);
    if (a.out.empty()) {
      std::cout << text;
    } else {
      const std::filesystem::path path =
          a.id == "all" ? std::filesystem::path(a.out) / (std::string(to_string(id)) + "." + a.format)
                        : std::filesystem::path(a.out);
      write_file(path, text);
    }
    json curves = json::array();
    for (const auto& c : fig.curves) {
      curves.push_back({{"name", c.name}, {"metric", to_string(c.metric)}, {"radius", c.radius}});
    }
    json checks = json::array();
    for (const auto& n : check_nesting(fig)) {
      nested = nested && n.contained;
      checks.push_back({{"inner", n.inner},
                        {"outer", n.outer},
                        {"contained", n.contained},
                        {"worst_excursion", n.worst_excursion},
                        {"tolerance", n.tolerance}});
    }
    report.push_back({{"figure", to_string(id)},
                      {"center", {fig.center.x(), fig.center.y()}},
                      {"radius", fig.radius},
                      {"curves", curves},
                      {"nesting", checks}});
  }
  if (g.json) {
    std::cerr << json{{"schema", 1}, {"figures", report}}.dump(2) << '\n';
  } else {
    for (const auto& f : report) {
      for (const auto& n : f["nesting"]) {
        std::cerr << f["figure"].get<std::string>() << ": " << n["inner"].get<std::string>() << " inside "
                  << n["outer"].get<std::string>() << ": " << (n["contained"].get<bool>() ? "yes" : "NO")
                  << '\n';
      }
    }
  }
  return nested ? 0 : 1;
}

// oracle --------------------------------------------------------------------

struct OracleArgs {
  std::string domain = "halfspace";
  std::string x;
  std::string y;
  int resolution = 512;
  int stencil = 16;
  bool no_chamfer = false;
  bool calibrate = false;
  int pairs = 100;
};

int cmd_oracle(const Globals& g, const OracleArgs& a) {
  if (a.calibrate) {
    const auto rows = calibrate_oracle(a.pairs, a.resolution, g.seed);
    bool within = true;
    json out = json::array();
    for (const auto& row : rows) {
      // The stored bounds are quoted for resolution 512.
      if (a.resolution == 512 && row.worst > row.bound) within = false;
      out.push_back({{"domain", to_string(row.domain)},
                     {"stencil", row.stencil},
                     {"chamfer", row.chamfer},
                     {"pairs", row.pairs},
                     {"worst", row.worst},
                     {"mean", row.mean},
                     {"bound", row.bound}});
    }
    if (g.json) {
      std::cout << json{{"schema", 1}, {"resolution", a.resolution}, {"calibration", out}}.dump(2) << '\n';
    } else {
      std::printf("%-10s %7s %7s %9s %9s %9s\n", "domain", "stencil", "chamfer", "worst", "mean", "bound");
      for (const auto& row : rows) {
        std::printf("%-10s %7d %7s %9.5f %9.5f %9.5f\n", std::string(to_string(row.domain)).c_str(),
                    row.stencil, row.chamfer ? "yes" : "no", row.worst, row.mean, row.bound);
      }
    }
    return within ? 0 : 1;
  }

  Domain<double> domain = Domain<double>::half_space();
  if (a.domain == "punctured") {
    domain = Domain<double>::punctured_space();
  } else if (a.domain != "halfspace") {
    throw InvalidArgument("--domain must be punctured or halfspace");
  }
  if (a.x.empty() || a.y.empty()) throw InvalidArgument("oracle needs --x and --y (or --calibrate)");
  const Eigen::Vector2d x = parse_pair(a.x, "--x");
  const Eigen::Vector2d y = parse_pair(a.y, "--y");
  const Point<double> px{Eigen::VectorXd(x)};
  const Point<double> py{Eigen::VectorXd(y)};
  GridSpec grid = fit_grid(domain, x, y, a.resolution, a.stencil);
  grid.chamfer = !a.no_chamfer;
  const OracleEstimate est = qh_distance_oracle(domain, px, py, grid);
  const double exact = dist_k(domain, px, py);
  const double rel = exact > 0.0 ? std::abs(est.value - exact) / exact : 0.0;
  if (g.json) {
    std::cout << json{{"schema", 1},
                      {"domain", a.domain},
                      {"x", {x.x(), x.y()}},
                      {"y", {y.x(), y.y()}},
                      {"estimate", est.value},
                      {"relative_error_bound", est.relative_error_bound},
                      {"closed_form", exact},
                      {"relative_error", rel}}
                     .dump(2)
              << '\n';
  } else {
    std::cout << "estimate     " << num(est.value) << "  (bound " << num(100.0 * est.relative_error_bound)
              << "%)\n"
              << "closed form  " << num(exact) << '\n'
              << "rel. error   " << num(rel) << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distance ratio, quasihyperbolic and chordal metric balls"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_flag("--json", g.json, "Machine-readable output");
  app.add_option("--seed", g.seed, "Random seed")->capture_default_str();
  app.add_option("--tol", g.tol, "Largest contact gap accepted as sharp")->capture_default_str();

  RadiiArgs radii;
  auto* radii_cmd = app.add_subcommand("radii", "Inclusion radii of one formula row");
  radii_cmd->add_option("--relation", radii.relation, "Relation id, e.g. P_J_IN_K")->required();
  radii_cmd->add_option("--r", radii.r, "Source radius")->required();
  radii_cmd->add_option("--abs-x", radii.abs_x, "|x| (x_n for half-space rows)");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite and print a JSON report");
  verify_cmd->add_option("--suite", verify.suite, "punctured, halfspace, general, limits, sharpness, oracle, remarks")
      ->required();
  verify_cmd->add_option("--samples", verify.samples, "Draws per relation or pairs per domain")
      ->capture_default_str();
  verify_cmd->add_option("--directions", verify.directions, "Boundary directions per ball")
      ->capture_default_str();
  verify_cmd->add_option("--out", verify.out, "Write the report here instead of stdout");

  FigureArgs figure;
  auto* figure_cmd = app.add_subcommand("figure", "Export a figure as CSV polylines or SVG");
  figure_cmd->add_option("--id", figure.id, "fig1..fig5, or all")->required();
  figure_cmd->add_option("--format", figure.format, "csv or svg")->capture_default_str();
  figure_cmd->add_option("--out", figure.out, "Output file (directory for --id all)");
  figure_cmd->add_option("--center", figure.center, "Disk center as x,y");
  figure_cmd->add_option("--radius", figure.radius, "Override the caption radius");
  figure_cmd->add_option("--points", figure.points, "Vertices per curve")->capture_default_str();

  OracleArgs oracle;
  auto* oracle_cmd = app.add_subcommand("oracle", "Grid shortest-path estimate of k");
  oracle_cmd->add_option("--domain", oracle.domain, "punctured or halfspace")->capture_default_str();
  oracle_cmd->add_option("--x", oracle.x, "First point as x,y");
  oracle_cmd->add_option("--y", oracle.y, "Second point as x,y");
  oracle_cmd->add_option("--resolution", oracle.resolution, "Cells per axis")->capture_default_str();
  oracle_cmd->add_option("--stencil", oracle.stencil, "8 or 16")->capture_default_str();
  oracle_cmd->add_flag("--no-chamfer", oracle.no_chamfer, "Use raw edge lengths");
  oracle_cmd->add_flag("--calibrate", oracle.calibrate, "Measure the error against both closed forms");
  oracle_cmd->add_option("--pairs", oracle.pairs, "Pairs per domain when calibrating")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*radii_cmd) return cmd_radii(g, radii);
    if (*verify_cmd) return cmd_verify(g, verify);
    if (*figure_cmd) return cmd_figure(g, figure);
    if (*oracle_cmd) return cmd_oracle(g, oracle);
  } catch (const hypmetric::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
