#pragma once

#include "sphinc/geometry.hpp"

namespace sphinc {

struct Point4 {
  Rational x1, x2, x3, x4;
  friend bool operator==(const Point4&, const Point4&) = default;
};

/// Non-vertical hyperplane {x4 = e1 x1 + e2 x2 + e3 x3 + e0}.
struct Hyperplane4 {
  Rational e1, e2, e3, e0;

  bool contains(const Point4& p) const { return p.x4 == e1 * p.x1 + e2 * p.x2 + e3 * p.x3 + e0; }
  friend bool operator==(const Hyperplane4&, const Hyperplane4&) = default;
};

/// (x, y, z) -> (x, y, z, x^2 + y^2 + z^2), onto the paraboloid.
Point4 lift_point(const Point3& p);

/// (x-a)^2+(y-b)^2+(z-c)^2 = r^2  ->  x4 = 2a x1 + 2b x2 + 2c x3 + (r^2 - a^2 - b^2 - c^2).
Hyperplane4 sphere_to_hyperplane(const Sphere& s);

/// Dual point (a, b, c, r^2 - a^2 - b^2 - c^2) of a sphere.
Point4 sphere_to_dual_point(const Sphere& s);

/// Dual hyperplane {2 a1 x + 2 a2 y + 2 a3 z + a4 = x^2 + y^2 + z^2} of a point,
/// written in non-vertical form.
Hyperplane4 point_to_dual_hyperplane(const Point3& p);

/// Incidence evaluated in lifted space: the lifted point on the sphere's hyperplane.
bool lifted_incidence(const Point3& p, const Sphere& s);

/// Incidence evaluated in dual space: the sphere's dual point on the point's dual hyperplane.
bool dual_incidence(const Point3& p, const Sphere& s);

}  // namespace sphinc
