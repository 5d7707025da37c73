#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sphinc/decomposition.hpp"
#include "sphinc/incidence.hpp"

namespace sphinc {

struct FitResult {
  double exponent = 0.0;
  double intercept = 0.0;
  double residual = 0.0;  // RMS of log-space fit errors
};

struct ScalingPoint {
  double n;
  double value;
};

/// Ordinary least-squares slope of log(value) against log(n). Throws
/// InvalidInput for fewer than three rows and NonPositiveValue for any
/// non-positive n or value.
FitResult fit_exponent(std::span<const ScalingPoint> rows);

enum class Family { Grid, SphereHalf, Pencil, Cylinder, Torus };
enum class Quantity { Distinct, Unit, Incidences, Residual, SumPoints, SumSpheres };

std::string_view to_string(Family f);
std::string_view to_string(Quantity q);
Family parse_family(std::string_view name);
Quantity parse_quantity(std::string_view name);

struct ExperimentConfig {
  Family family = Family::Grid;
  Quantity quantity = Quantity::Distinct;
  std::vector<long> ladder;  // strictly increasing, at least 3 entries
  std::uint64_t seed = 42;
  unsigned threads = 1;
  bool verify = false;       // re-check each measured value against an oracle
  bool timing = false;       // record wall time per row (makes output run-dependent)
  std::size_t burn_in = 0;   // leading rows excluded from the fit
  double bound_constant = 1.0;  // C in |G_0| <= C * bound
};

/// One generated instance: points, spheres (possibly empty) and the host
/// surface when there is one.
struct Instance {
  PointSet points;
  SphereSet spheres;
  std::optional<SurfacePoly> variety;
};

/// Builds the instance of `family` at ladder parameter `size`.
///
/// Grid: gen_grid(size). SphereHalf: gen_sphere_half(size). Pencil: the four
/// points (±1,0,0), (0,±1,0) and `size` spheres of the equator's pencil.
/// Cylinder/Torus: `size` parallels with 8 points each, three pencil spheres
/// per parallel and `size` seeded spheres through four random points.
Instance build_instance(Family family, long size, std::uint64_t seed);

struct ScalingRow {
  long parameter = 0;
  std::size_t n = 0;       // x-axis size: points (or spheres for Pencil)
  std::size_t m_points = 0;
  std::size_t n_spheres = 0;
  std::uint64_t value = 0;
  std::optional<double> bound;    // decomposition bound m^{2/3}n^{2/3} + m^{1/2}n^{7/8} + m + n
  std::optional<bool> verified;
  std::optional<double> wall_ms;
};

struct ScalingReport {
  ExperimentConfig config;
  std::vector<ScalingRow> rows;
  std::optional<FitResult> fit;
  double reference_exponent = 0.0;
  std::string reference_label;
  std::vector<std::string> violations;
  std::vector<std::string> notes;
};

/// The |G_0| bound shape with log factors and constants set to 1.
double residual_bound(double m, double n);

/// Runs the ladder sequentially. `on_row` (optional) sees the report after
/// every row so callers can flush partial results.
ScalingReport run_experiment(const ExperimentConfig& cfg,
                             const std::function<void(const ScalingReport&)>& on_row = {});

}  // namespace sphinc
