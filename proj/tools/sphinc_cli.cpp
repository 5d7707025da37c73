// sphinc: command-line front end for generation, incidence counting,
// decomposition, distance censuses and scaling experiments.
//
// Exit codes: 0 success, 2 invariant violation, 3 input error, 1 internal error.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sphinc/decomposition.hpp"
#include "sphinc/distances.hpp"
#include "sphinc/error.hpp"
#include "sphinc/experiment.hpp"
#include "sphinc/generators.hpp"
#include "sphinc/incidence.hpp"
#include "sphinc/io.hpp"

namespace {

using sphinc::io::json;

constexpr int kExitViolation = 2;
constexpr int kExitInput = 3;

struct Globals {
  std::uint64_t seed = 42;
  unsigned threads = 1;
  bool verify = false;
  bool timing = false;
  std::string out = "-";
};

void emit(const Globals& g, const json& j) {
  if (g.out == "-") {
    std::cout << j.dump(2) << '\n';
  } else {
    sphinc::io::write_json(g.out, j);
  }
}

// Input files hold either the bare value or an object carrying it under `key`,
// so the output of `gen` can be fed back in directly.
const json& unwrap(const json& j, const char* key) {
  if (j.is_object() && j.contains(key)) return j.at(key);
  return j;
}

sphinc::PointSet load_points(const std::string& path) {
  const json j = sphinc::io::read_json(path);
  return sphinc::io::points_from_json(unwrap(j, "points"));
}

sphinc::SphereSet load_spheres(const std::string& path) {
  const json j = sphinc::io::read_json(path);
  return sphinc::io::spheres_from_json(unwrap(j, "spheres"));
}

std::optional<sphinc::SurfacePoly> load_variety(const std::string& path, int max_degree) {
  if (path.empty()) return std::nullopt;
  const json j = sphinc::io::read_json(path);
  return sphinc::io::variety_from_json(unwrap(j, "variety"), max_degree);
}

json edges_json(const std::vector<sphinc::Edge>& edges) {
  json out = json::array();
  for (const auto& e : edges) out.push_back(sphinc::io::to_json(e));
  return out;
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

// ---- gen -------------------------------------------------------------------

struct GenArgs {
  std::string kind;
  int k = 3;
  int depth = 1;
  std::size_t circles = 2;
  std::size_t per_circle = 4;
  std::string major = "2";
  std::string minor = "1";
  std::size_t count = 3;
  std::vector<std::string> lambdas;
  std::string circle_file;
  std::string anchor_file;
  std::string surface = "torus";
  long num_bound = 20;
  long den_bound = 4;
};

int run_gen(const Globals& g, const GenArgs& a) {
  json out = {{"kind", a.kind}};
  const auto surface_kind = [&](const std::string& name) {
    if (name == "cylinder") return sphinc::SurfaceKind::Cylinder;
    if (name == "torus") return sphinc::SurfaceKind::Torus;
    throw sphinc::Error(sphinc::ErrorKind::InvalidInput, "unknown surface '" + name + "'");
  };
  const sphinc::TorusShape torus{sphinc::Rational::parse(a.major), sphinc::Rational::parse(a.minor)};

  if (a.kind == "grid") {
    out["points"] = sphinc::io::to_json(sphinc::gen_grid(a.k));
  } else if (a.kind == "sphere_half") {
    out["points"] = sphinc::io::to_json(sphinc::gen_sphere_half(a.depth));
  } else if (a.kind == "cylinder" || a.kind == "torus") {
    const auto sample = sphinc::gen_surface_points(surface_kind(a.kind), a.circles, a.per_circle, torus);
    out["points"] = sphinc::io::to_json(sample.points);
    out["variety"] = sphinc::io::to_json(sample.variety);
    json circles = json::array();
    for (const auto& c : sample.circles) circles.push_back(sphinc::io::to_json(c));
    out["circles"] = circles;
  } else if (a.kind == "sphere_pencil") {
    std::optional<sphinc::Circle3> circle;
    if (!a.circle_file.empty()) {
      const json j = sphinc::io::read_json(a.circle_file);
      circle = sphinc::io::circle_from_json(unwrap(j, "circle"));
    } else {
      // Default: the equator of the unit sphere with its four axis points.
      const sphinc::Point3 px{1, 0, 0}, py{0, 1, 0}, nx{-1, 0, 0}, ny{0, -1, 0};
      circle = sphinc::circle_through(px, py, nx);
      out["points"] = sphinc::io::to_json(sphinc::PointSet({px, nx, py, ny}));
    }
    std::vector<sphinc::Rational> lambdas;
    for (const auto& t : a.lambdas) lambdas.push_back(sphinc::Rational::parse(t));
    if (lambdas.empty())
      for (std::size_t i = 0; i < a.count; ++i) lambdas.emplace_back(static_cast<long>(i));
    out["circle"] = sphinc::io::to_json(*circle);
    out["spheres"] = sphinc::io::to_json(sphinc::gen_sphere_pencil(*circle, lambdas));
  } else {
    static const std::vector<std::pair<std::string, sphinc::RandomKind>> kRandom = {
        {"random_free", sphinc::RandomKind::FreePoints},
        {"random_clustered", sphinc::RandomKind::ClusteredPoints},
        {"random_unit_chain", sphinc::RandomKind::UnitChain},
        {"random_on_surface", sphinc::RandomKind::OnSurface},
        {"random_spheres", sphinc::RandomKind::FreeSpheres},
        {"random_spheres_through", sphinc::RandomKind::SpheresThrough},
    };
    auto it = std::find_if(kRandom.begin(), kRandom.end(), [&](const auto& e) { return e.first == a.kind; });
    if (it == kRandom.end()) throw sphinc::Error(sphinc::ErrorKind::InvalidInput, "unknown kind '" + a.kind + "'");
    sphinc::GeneratorSpec spec;
    spec.kind = it->second;
    spec.count = a.count;
    spec.seed = g.seed;
    spec.numerator_bound = a.num_bound;
    spec.denominator_bound = a.den_bound;
    spec.surface = surface_kind(a.surface);
    out["seed"] = g.seed;
    if (spec.kind == sphinc::RandomKind::FreeSpheres || spec.kind == sphinc::RandomKind::SpheresThrough) {
      sphinc::PointSet anchor;
      if (!a.anchor_file.empty()) anchor = load_points(a.anchor_file);
      out["spheres"] = sphinc::io::to_json(sphinc::gen_random_spheres(spec, anchor));
    } else {
      out["points"] = sphinc::io::to_json(sphinc::gen_random_points(spec));
      if (spec.kind == sphinc::RandomKind::OnSurface)
        out["variety"] = sphinc::io::to_json(spec.surface == sphinc::SurfaceKind::Torus
                                                 ? sphinc::SurfacePoly::torus(2, 1)
                                                 : sphinc::SurfacePoly::cylinder());
    }
  }
  emit(g, out);
  return 0;
}

// ---- incidences --------------------------------------------------------------

struct IncidenceArgs {
  std::string points;
  std::string spheres;
  std::string engine = "bucketed";
  bool k33 = false;
  std::size_t k33_limit = sphinc::kDefaultK33Limit;
};

int run_incidences(const Globals& g, const IncidenceArgs& a) {
  const auto P = load_points(a.points);
  const auto S = load_spheres(a.spheres);
  const sphinc::IncidenceOptions opts{g.threads};
  const auto start = std::chrono::steady_clock::now();
  sphinc::IncidenceGraph graph;
  if (a.engine == "brute") {
    graph = sphinc::incidences_bruteforce(P, S, opts);
  } else if (a.engine == "bucketed") {
    graph = sphinc::incidences_bucketed(P, S, opts);
  } else {
    throw sphinc::Error(sphinc::ErrorKind::InvalidInput, "unknown engine '" + a.engine + "'");
  }
  const double ms = elapsed_ms(start);

  json out = {{"m", P.size()},
              {"n", S.size()},
              {"incidences", graph.size()},
              {"engine", a.engine},
              {"edges", edges_json(graph.edges())}};
  if (g.timing) out["timing_ms"] = ms;
  int code = 0;
  if (a.k33) {
    const auto w = sphinc::contains_k33(graph, a.k33_limit);
    out["k33"] = w ? json{{"points", w->points}, {"spheres", w->spheres}} : json(nullptr);
  }
  if (g.verify) {
    const auto other = a.engine == "brute" ? sphinc::incidences_bucketed(P, S, opts)
                                           : sphinc::incidences_bruteforce(P, S, opts);
    const auto bad = sphinc::unverified_edges(graph, P, S);
    const bool ok = other == graph && bad.empty();
    out["verification"] = {{"ok", ok}, {"engines_agree", other == graph}, {"unverified_edges", edges_json(bad)}};
    if (!ok) code = kExitViolation;
  }
  emit(g, out);
  return code;
}

// ---- decompose -----------------------------------------------------------------

struct DecomposeArgs {
  std::string points;
  std::string spheres;
  std::string variety;
  std::size_t theta_p = sphinc::kDefaultThetaPoints;
  std::size_t theta_s = sphinc::kDefaultThetaSpheres;
  std::size_t max_pairs = sphinc::EnumerationLimits{}.max_sphere_pairs;
  std::size_t max_triples = sphinc::EnumerationLimits{}.max_point_triples;
  int max_degree = sphinc::kDefaultMaxDegree;
};

int run_decompose(const Globals& g, const DecomposeArgs& a) {
  const auto P = load_points(a.points);
  const auto S = load_spheres(a.spheres);
  const auto V = load_variety(a.variety, a.max_degree);
  const sphinc::SurfacePoly* v = V ? &*V : nullptr;
  sphinc::EnumerationLimits limits;
  limits.max_sphere_pairs = a.max_pairs;
  limits.max_point_triples = a.max_triples;
  limits.threads = g.threads;
  const auto start = std::chrono::steady_clock::now();
  const auto d = sphinc::decompose(P, S, v, a.theta_p, a.theta_s, limits);
  const double ms = elapsed_ms(start);

  json out = sphinc::io::to_json(d);
  out["theta_p"] = a.theta_p;
  out["theta_s"] = a.theta_s;
  out["bound"] = sphinc::residual_bound(static_cast<double>(P.size()), static_cast<double>(S.size()));
  if (g.timing) out["timing_ms"] = ms;
  int code = 0;
  if (g.verify) {
    const auto report = sphinc::verify_decomposition(d, P, S, v);
    out["verification"] = sphinc::io::to_json(report);
    if (!report.ok()) code = kExitViolation;
  }
  emit(g, out);
  return code;
}

// ---- distances -----------------------------------------------------------------

struct DistanceArgs {
  std::string points;
  std::string points2;
  bool unit = false;
};

int run_distances(const Globals& g, const DistanceArgs& a) {
  const auto P = load_points(a.points);
  std::optional<sphinc::PointSet> P2;
  if (!a.points2.empty()) P2 = load_points(a.points2);
  const auto census_with = [&](bool force_rational) {
    const sphinc::DistanceOptions opts{g.threads, force_rational};
    return P2 ? sphinc::distinct_distances_bipartite(P, *P2, opts) : sphinc::distinct_distances(P, opts);
  };
  const auto unit_with = [&](bool force_rational) {
    const sphinc::DistanceOptions opts{g.threads, force_rational};
    return P2 ? sphinc::unit_distances_bipartite(P, *P2, opts) : sphinc::unit_distances(P, opts);
  };
  const auto start = std::chrono::steady_clock::now();
  const auto census = census_with(false);
  std::optional<std::uint64_t> unit;
  if (a.unit) unit = unit_with(false);
  const double ms = elapsed_ms(start);

  json out = sphinc::io::to_json(census);
  out["bipartite"] = P2.has_value();
  if (unit) out["unit"] = *unit;
  if (g.timing) out["timing_ms"] = ms;
  int code = 0;
  if (g.verify) {
    const auto oracle = census_with(true);
    bool ok = oracle.histogram == census.histogram && oracle.zero_pairs == census.zero_pairs;
    json v = {{"census_agrees", ok}};
    if (unit) {
      // Unit pairs re-counted through unit spheres around the (second) point set.
      const auto g2 = sphinc::unit_incidences(P, P2 ? *P2 : P, {g.threads});
      const std::uint64_t via_spheres = P2 ? g2.size() : g2.size() / 2;
      v["unit_via_incidences"] = via_spheres;
      ok = ok && via_spheres == *unit;
    }
    v["ok"] = ok;
    out["verification"] = v;
    if (!ok) code = kExitViolation;
  }
  emit(g, out);
  return code;
}

// ---- experiment ------------------------------------------------------------------

struct ExperimentArgs {
  std::string family = "grid";
  std::string quantity = "distinct";
  std::vector<long> ladder;
  std::size_t burn_in = 0;
  double bound_constant = 1.0;
  std::string csv;
};

int run_experiment_cmd(const Globals& g, const ExperimentArgs& a) {
  sphinc::ExperimentConfig cfg;
  cfg.family = sphinc::parse_family(a.family);
  cfg.quantity = sphinc::parse_quantity(a.quantity);
  cfg.ladder = a.ladder;
  cfg.seed = g.seed;
  cfg.threads = g.threads;
  cfg.verify = g.verify;
  cfg.timing = g.timing;
  cfg.burn_in = a.burn_in;
  cfg.bound_constant = a.bound_constant;

  const auto flush = [&](const sphinc::ScalingReport& r) {
    if (g.out != "-") sphinc::io::write_json(g.out, sphinc::io::to_json(r));
    if (!a.csv.empty()) {
      std::ofstream csv(a.csv, std::ios::binary | std::ios::trunc);
      csv << sphinc::io::to_csv(r);
    }
  };
  const auto report = sphinc::run_experiment(cfg, flush);
  flush(report);
  if (g.out == "-") std::cout << sphinc::io::to_json(report).dump(2) << '\n';
  return report.violations.empty() ? 0 : kExitViolation;
}

// ---- verify ------------------------------------------------------------------------

struct VerifyArgs {
  std::string points;
  std::string spheres;
  std::string decomposition;
  std::string variety;
  int degree = 0;
  std::size_t popular = 2;
  int max_degree = sphinc::kDefaultMaxDegree;
};

int run_verify(const Globals& g, const VerifyArgs& a) {
  const auto P = load_points(a.points);
  const auto S = load_spheres(a.spheres);
  const auto V = load_variety(a.variety, a.max_degree);
  const auto d = sphinc::io::decomposition_from_json(sphinc::io::read_json(a.decomposition));
  const auto report = sphinc::verify_decomposition(d, P, S, V ? &*V : nullptr);
  json out = sphinc::io::to_json(report);
  bool ok = report.ok();
  const int degree = a.degree > 0 ? a.degree : (V ? V->degree() : 0);
  if (degree > 0) {
    const auto bounds = sphinc::check_circle_bounds(report, degree, a.popular);
    json violations = json::array();
    for (const auto& v : bounds) violations.push_back({{"kind", v.kind}, {"detail", v.detail}});
    out["circle_bounds"] = {{"degree", degree}, {"popular_allowance", a.popular}, {"violations", violations}};
    ok = ok && bounds.empty();
  }
  out["ok"] = ok;
  emit(g, out);
  return ok ? 0 : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact point-sphere incidences, decompositions and distance censuses"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "PRNG seed")->capture_default_str();
  app.add_option("--threads", g.threads, "Worker threads (0 = hardware concurrency)")->capture_default_str();
  app.add_flag("--verify", g.verify, "Re-check results against the brute-force oracles");
  app.add_flag("--timing", g.timing, "Include wall-clock timings (output is then run-dependent)");
  app.add_option("--out,-o", g.out, "Output file, - for stdout")->capture_default_str();

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a configuration");
  gen_cmd->add_option("--kind", gen.kind,
                      "grid | sphere_half | cylinder | torus | sphere_pencil | random_free | random_clustered | "
                      "random_unit_chain | random_on_surface | random_spheres | random_spheres_through")
      ->required();
  gen_cmd->add_option("--k", gen.k, "Grid side");
  gen_cmd->add_option("--depth", gen.depth, "sphere_half depth");
  gen_cmd->add_option("--circles", gen.circles, "Surface parallels");
  gen_cmd->add_option("--per-circle", gen.per_circle, "Points per parallel");
  gen_cmd->add_option("--major", gen.major, "Torus major radius R");
  gen_cmd->add_option("--minor", gen.minor, "Torus minor radius r");
  gen_cmd->add_option("--count", gen.count, "Number of random elements or pencil spheres");
  gen_cmd->add_option("--lambdas", gen.lambdas, "Pencil parameters")->delimiter(',');
  gen_cmd->add_option("--circle", gen.circle_file, "Circle file for sphere_pencil");
  gen_cmd->add_option("--anchor", gen.anchor_file, "Point file for random_spheres_through");
  gen_cmd->add_option("--surface", gen.surface, "cylinder | torus for random_on_surface");
  gen_cmd->add_option("--num-bound", gen.num_bound, "Random numerator bound");
  gen_cmd->add_option("--den-bound", gen.den_bound, "Random denominator bound");

  IncidenceArgs inc;
  auto* inc_cmd = app.add_subcommand("incidences", "Build the incidence graph G(P,S)");
  inc_cmd->add_option("--points", inc.points)->required();
  inc_cmd->add_option("--spheres", inc.spheres)->required();
  inc_cmd->add_option("--engine", inc.engine, "brute | bucketed")->capture_default_str();
  inc_cmd->add_flag("--k33", inc.k33, "Search for a K_{3,3} subgraph");
  inc_cmd->add_option("--k33-limit", inc.k33_limit, "Size guard for the K_{3,3} search")->capture_default_str();

  DecomposeArgs dec;
  auto* dec_cmd = app.add_subcommand("decompose", "Split G(P,S) into rich-circle blocks and a residual");
  dec_cmd->add_option("--points", dec.points)->required();
  dec_cmd->add_option("--spheres", dec.spheres)->required();
  dec_cmd->add_option("--variety", dec.variety, "Host surface; circles are restricted to it");
  dec_cmd->add_option("--theta-p", dec.theta_p, "Minimum |P_c|")->capture_default_str();
  dec_cmd->add_option("--theta-s", dec.theta_s, "Minimum |S_c|")->capture_default_str();
  dec_cmd->add_option("--max-pairs", dec.max_pairs, "Sphere-pair budget")->capture_default_str();
  dec_cmd->add_option("--max-triples", dec.max_triples, "Point-triple budget")->capture_default_str();
  dec_cmd->add_option("--max-degree", dec.max_degree, "Variety degree cap")->capture_default_str();

  DistanceArgs dist;
  auto* dist_cmd = app.add_subcommand("distances", "Distinct and unit distance census");
  dist_cmd->add_option("--points", dist.points)->required();
  dist_cmd->add_option("--points2", dist.points2, "Second set for a bipartite census");
  dist_cmd->add_flag("--unit", dist.unit, "Also count unit distances");

  ExperimentArgs exp;
  auto* exp_cmd = app.add_subcommand("experiment", "Scaling run with a log-log exponent fit");
  exp_cmd->add_option("--family", exp.family, "grid | sphere_half | pencil | cylinder | torus")->capture_default_str();
  exp_cmd->add_option("--quantity", exp.quantity,
                      "distinct | unit | incidences | residual | sum_points | sum_spheres")
      ->capture_default_str();
  exp_cmd->add_option("--ladder", exp.ladder, "Size ladder, e.g. 4,6,8")->delimiter(',')->required();
  exp_cmd->add_option("--burn-in", exp.burn_in, "Leading rows excluded from the fit")->capture_default_str();
  exp_cmd->add_option("--bound-constant", exp.bound_constant, "C in |G_0| <= C * bound")->capture_default_str();
  exp_cmd->add_option("--csv", exp.csv, "Also write rows as CSV");

  VerifyArgs ver;
  auto* ver_cmd = app.add_subcommand("verify", "Check a decomposition file against P and S");
  ver_cmd->add_option("--points", ver.points)->required();
  ver_cmd->add_option("--spheres", ver.spheres)->required();
  ver_cmd->add_option("--decomposition", ver.decomposition)->required();
  ver_cmd->add_option("--variety", ver.variety, "Host surface");
  ver_cmd->add_option("--degree", ver.degree, "D for the circle-count bounds (default: variety degree)");
  ver_cmd->add_option("--popular", ver.popular, "Points allowed to exceed 44 D^2")->capture_default_str();
  ver_cmd->add_option("--max-degree", ver.max_degree, "Variety degree cap")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*gen_cmd) return run_gen(g, gen);
    if (*inc_cmd) return run_incidences(g, inc);
    if (*dec_cmd) return run_decompose(g, dec);
    if (*dist_cmd) return run_distances(g, dist);
    if (*exp_cmd) return run_experiment_cmd(g, exp);
    if (*ver_cmd) return run_verify(g, ver);
  } catch (const sphinc::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
