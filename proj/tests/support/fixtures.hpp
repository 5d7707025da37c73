#pragma once

// Named configurations shared by the unit tests and the acceptance runner.

#include <optional>
#include <string>
#include <vector>

#include "sphinc/experiment.hpp"
#include "sphinc/generators.hpp"
#include "sphinc/geometry.hpp"
#include "sphinc/incidence.hpp"
#include "sphinc/polynomial.hpp"

namespace fixtures {

using namespace sphinc;

struct Fixture {
  std::string name;
  PointSet points;
  SphereSet spheres;
  std::optional<SurfacePoly> variety;
};

inline Point3 pt(long x, long y, long z) { return {Rational(x), Rational(y), Rational(z)}; }

inline PointSet square_on_equator() { return PointSet({pt(1, 0, 0), pt(-1, 0, 0), pt(0, 1, 0), pt(0, -1, 0)}); }

inline Circle3 equator() { return circle_through(pt(1, 0, 0), pt(0, 1, 0), pt(-1, 0, 0)); }

inline Sphere unit_at_origin() { return Sphere(pt(0, 0, 0), Rational(1)); }

/// Square on the equator with `count` pencil spheres lambda = 0, 2, 4, ...;
/// count = 2 gives the unit sphere and (center (0,0,-1), r^2 = 2).
inline Fixture pencil(std::size_t count = 2) {
  std::vector<Rational> lambdas;
  for (std::size_t i = 0; i < count; ++i) lambdas.emplace_back(2 * static_cast<long>(i));
  return {"pencil", square_on_equator(), gen_sphere_pencil(equator(), lambdas), SurfacePoly::cylinder()};
}

/// Four points on each of the cylinder parallels z = 0 and z = 1, with two
/// pencil spheres through each parallel.
inline Fixture cylinder() {
  auto sample = gen_surface_points(SurfaceKind::Cylinder, 2, 4);
  std::vector<Sphere> spheres;
  for (const Circle3& c : sample.circles)
    for (const Sphere& s : gen_sphere_pencil(c, {Rational(0), Rational(2)})) spheres.push_back(s);
  return {"cylinder", std::move(sample.points), SphereSet(std::move(spheres)), std::move(sample.variety)};
}

/// Ring torus R = 2, r = 1: parallels with pencil spheres plus seeded spheres
/// through four sample points.
inline Fixture torus(long parallels = 4) {
  Instance inst = build_instance(Family::Torus, parallels, 42);
  return {"torus", std::move(inst.points), std::move(inst.spheres), std::move(inst.variety)};
}

/// Four points on the unit sphere that are not cocircular.
inline PointSet non_degenerate_four() {
  return PointSet({pt(1, 0, 0), pt(-1, 0, 0), pt(0, 1, 0), pt(0, 0, 1)});
}

inline std::vector<Fixture> all() {
  std::vector<Fixture> out;
  out.push_back(pencil());
  out.push_back(pencil(5));
  out.back().name = "pencil5";
  out.push_back(cylinder());
  out.push_back(torus());
  out.push_back({"unit_square", square_on_equator(), SphereSet({unit_at_origin()}), std::nullopt});
  out.push_back({"non_degenerate", non_degenerate_four(), SphereSet({unit_at_origin()}), std::nullopt});
  return out;
}

}  // namespace fixtures
