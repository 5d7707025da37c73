#include "sphinc/experiment.hpp"

#include <chrono>
#include <cmath>
#include <set>

#include "sphinc/distances.hpp"
#include "sphinc/error.hpp"
#include "sphinc/generators.hpp"

namespace sphinc {

namespace {

struct Reference {
  double exponent;
  const char* label;
};

Reference reference_for(Family f, Quantity q) {
  switch (q) {
    case Quantity::Distinct:
      if (f == Family::Grid) return {2.0 / 3.0, "distinct distances of the integer grid: Theta(n^{2/3})"};
      return {7.0 / 9.0, "distinct distances on a surface: Omega(n^{7/9}) up to polylog"};
    case Quantity::Unit:
      return {4.0 / 3.0, "unit distances on a surface: O(n^{4/3})"};
    case Quantity::Incidences:
      if (f == Family::Pencil) return {1.0, "complete bipartite block: I = 4n"};
      return {11.0 / 8.0, "I(P,S) with n ~ m: m^{1/2} n^{7/8} term dominates"};
    case Quantity::Residual:
      return {11.0 / 8.0, "|G_0| = O(m^{2/3}n^{2/3} + m^{1/2}n^{7/8} + m + n) with n ~ m"};
    case Quantity::SumPoints:
      return {1.0, "sum |P_c| = O(m)"};
    case Quantity::SumSpheres:
      return {1.0, "sum |S_c| = O(n)"};
  }
  return {0.0, "none"};
}

bool needs_spheres(Quantity q) { return q != Quantity::Distinct && q != Quantity::Unit; }

void validate(const ExperimentConfig& cfg) {
  if (cfg.ladder.size() < 3) throw Error(ErrorKind::InvalidInput, "size ladder needs at least 3 entries");
  for (std::size_t i = 1; i < cfg.ladder.size(); ++i)
    if (cfg.ladder[i] <= cfg.ladder[i - 1])
      throw Error(ErrorKind::InvalidInput, "size ladder must be strictly increasing");
  if (cfg.ladder.front() < 1) throw Error(ErrorKind::InvalidInput, "size ladder entries must be positive");
  if (needs_spheres(cfg.quantity) && (cfg.family == Family::Grid || cfg.family == Family::SphereHalf))
    throw Error(ErrorKind::InvalidInput, std::string(to_string(cfg.quantity)) + " needs a family with spheres");
}

SphereSet surface_spheres(const SurfaceSample& sample, long extra, std::uint64_t seed) {
  std::set<Sphere> seen;
  std::vector<Sphere> spheres;
  auto add = [&](const Sphere& s) {
    if (seen.insert(s).second) spheres.push_back(s);
  };
  for (const Circle3& c : sample.circles)
    for (const Sphere& s : gen_sphere_pencil(c, {Rational(0), Rational(1), Rational(2)})) add(s);

  Rng rng(seed);
  const long m = static_cast<long>(sample.points.size());
  long made = 0;
  for (long attempt = 0; made < extra && attempt < 100 * extra + 100; ++attempt) {
    std::array<long, 4> idx{};
    for (auto& i : idx) i = rng.uniform(0, m - 1);
    try {
      const std::size_t before = spheres.size();
      add(sphere_through(sample.points[idx[0]], sample.points[idx[1]], sample.points[idx[2]],
                         sample.points[idx[3]]));
      if (spheres.size() > before) ++made;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::CollinearInput) throw;
    }
  }
  return SphereSet(std::move(spheres));
}

}  // namespace

FitResult fit_exponent(std::span<const ScalingPoint> rows) {
  if (rows.size() < 3) throw Error(ErrorKind::InvalidInput, "exponent fit needs at least 3 rows");
  std::vector<double> xs, ys;
  for (const auto& r : rows) {
    if (!(r.n > 0) || !(r.value > 0))
      throw Error(ErrorKind::NonPositiveValue, "log-log fit needs positive sizes and values");
    xs.push_back(std::log(r.n));
    ys.push_back(std::log(r.value));
  }
  const double k = static_cast<double>(xs.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= k;
  my /= k;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  if (sxx == 0) throw Error(ErrorKind::InvalidInput, "exponent fit needs at least two distinct sizes");
  FitResult fit;
  fit.exponent = sxy / sxx;
  fit.intercept = my - fit.exponent * mx;
  double ss = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double e = ys[i] - (fit.intercept + fit.exponent * xs[i]);
    ss += e * e;
  }
  fit.residual = std::sqrt(ss / k);
  return fit;
}

std::string_view to_string(Family f) {
  switch (f) {
    case Family::Grid: return "grid";
    case Family::SphereHalf: return "sphere_half";
    case Family::Pencil: return "pencil";
    case Family::Cylinder: return "cylinder";
    case Family::Torus: return "torus";
  }
  return "unknown";
}

std::string_view to_string(Quantity q) {
  switch (q) {
    case Quantity::Distinct: return "distinct";
    case Quantity::Unit: return "unit";
    case Quantity::Incidences: return "incidences";
    case Quantity::Residual: return "residual";
    case Quantity::SumPoints: return "sum_points";
    case Quantity::SumSpheres: return "sum_spheres";
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  for (Family f : {Family::Grid, Family::SphereHalf, Family::Pencil, Family::Cylinder, Family::Torus})
    if (to_string(f) == name) return f;
  throw Error(ErrorKind::InvalidInput, "unknown family '" + std::string(name) + "'");
}

Quantity parse_quantity(std::string_view name) {
  for (Quantity q : {Quantity::Distinct, Quantity::Unit, Quantity::Incidences, Quantity::Residual,
                     Quantity::SumPoints, Quantity::SumSpheres})
    if (to_string(q) == name) return q;
  throw Error(ErrorKind::InvalidInput, "unknown quantity '" + std::string(name) + "'");
}

Instance build_instance(Family family, long size, std::uint64_t seed) {
  if (size < 1) throw Error(ErrorKind::InvalidInput, "instance size must be positive");
  switch (family) {
    case Family::Grid:
      return {gen_grid(static_cast<int>(size)), {}, std::nullopt};
    case Family::SphereHalf:
      return {gen_sphere_half(static_cast<int>(size)), {}, std::nullopt};
    case Family::Pencil: {
      PointSet square({{Rational(1), Rational(0), Rational(0)},
                       {Rational(-1), Rational(0), Rational(0)},
                       {Rational(0), Rational(1), Rational(0)},
                       {Rational(0), Rational(-1), Rational(0)}});
      const Circle3 equator = circle_through(square[0], square[2], square[1]);
      std::vector<Rational> lambdas;
      for (long i = 0; i < size; ++i) lambdas.emplace_back(i);
      return {std::move(square), gen_sphere_pencil(equator, lambdas), SurfacePoly::cylinder()};
    }
    case Family::Cylinder:
    case Family::Torus: {
      auto sample = gen_surface_points(family == Family::Cylinder ? SurfaceKind::Cylinder : SurfaceKind::Torus,
                                       static_cast<std::size_t>(size), 8);
      SphereSet spheres = surface_spheres(sample, size, seed);
      return {std::move(sample.points), std::move(spheres), std::move(sample.variety)};
    }
  }
  throw Error(ErrorKind::InvalidInput, "unknown family");
}

double residual_bound(double m, double n) {
  return std::pow(m, 2.0 / 3.0) * std::pow(n, 2.0 / 3.0) + std::sqrt(m) * std::pow(n, 7.0 / 8.0) + m + n;
}

ScalingReport run_experiment(const ExperimentConfig& cfg, const std::function<void(const ScalingReport&)>& on_row) {
  validate(cfg);
  ScalingReport report;
  report.config = cfg;
  const Reference ref = reference_for(cfg.family, cfg.quantity);
  report.reference_exponent = ref.exponent;
  report.reference_label = ref.label;
  report.notes.push_back("log factors and proportionality constants in bounds are set to 1");

  for (long size : cfg.ladder) {
    const auto start = std::chrono::steady_clock::now();
    const Instance inst = build_instance(cfg.family, size, cfg.seed);
    ScalingRow row;
    row.parameter = size;
    row.m_points = inst.points.size();
    row.n_spheres = inst.spheres.size();
    row.n = cfg.family == Family::Pencil ? row.n_spheres : row.m_points;
    const IncidenceOptions inc_opts{cfg.threads};
    const DistanceOptions dist_opts{cfg.threads, false};

    switch (cfg.quantity) {
      case Quantity::Distinct: {
        row.value = distinct_distances(inst.points, dist_opts).distinct();
        if (cfg.verify)
          row.verified = distinct_distances(inst.points, {cfg.threads, true}).distinct() == row.value;
        break;
      }
      case Quantity::Unit: {
        row.value = unit_distances(inst.points, dist_opts);
        if (cfg.verify) row.verified = unit_incidences(inst.points, inst.points, inc_opts).size() == 2 * row.value;
        break;
      }
      case Quantity::Incidences: {
        const IncidenceGraph g = incidences_bucketed(inst.points, inst.spheres, inc_opts);
        row.value = g.size();
        if (cfg.verify) row.verified = incidences_bruteforce(inst.points, inst.spheres, inc_opts) == g;
        break;
      }
      case Quantity::Residual:
      case Quantity::SumPoints:
      case Quantity::SumSpheres: {
        const SurfacePoly* v = inst.variety ? &*inst.variety : nullptr;
        EnumerationLimits limits;
        limits.threads = cfg.threads;
        const Decomposition d = decompose(inst.points, inst.spheres, v, kDefaultThetaPoints, kDefaultThetaSpheres,
                                          limits);
        row.value = cfg.quantity == Quantity::Residual    ? d.residual.size()
                    : cfg.quantity == Quantity::SumPoints ? d.sum_points()
                                                          : d.sum_spheres();
        row.bound = residual_bound(static_cast<double>(row.m_points), static_cast<double>(row.n_spheres));
        if (static_cast<double>(d.residual.size()) > cfg.bound_constant * *row.bound)
          report.violations.push_back("size " + std::to_string(size) + ": |G_0| = " +
                                      std::to_string(d.residual.size()) + " exceeds C * bound");
        if (cfg.verify) {
          const auto check = verify_decomposition(d, inst.points, inst.spheres, v);
          row.verified = check.ok();
        }
        break;
      }
    }
    if (row.verified && !*row.verified)
      report.violations.push_back("size " + std::to_string(size) + ": oracle disagrees with measured value");
    if (cfg.timing)
      row.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    report.rows.push_back(row);
    if (on_row) on_row(report);
  }

  std::vector<ScalingPoint> pts;
  bool positive = true;
  for (std::size_t i = cfg.burn_in; i < report.rows.size(); ++i) {
    const auto& r = report.rows[i];
    positive = positive && r.value > 0 && r.n > 0;
    pts.push_back({static_cast<double>(r.n), static_cast<double>(r.value)});
  }
  if (pts.size() >= 3 && positive) {
    report.fit = fit_exponent(pts);
  } else {
    report.notes.push_back("exponent fit skipped: needs at least 3 rows after burn-in with positive values");
  }
  return report;
}

}  // namespace sphinc
