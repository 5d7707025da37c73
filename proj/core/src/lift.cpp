#include "sphinc/lift.hpp"

namespace sphinc {

Point4 lift_point(const Point3& p) { return {p.x, p.y, p.z, norm_sq(p)}; }

Hyperplane4 sphere_to_hyperplane(const Sphere& s) {
  const Point3& c = s.center();
  return {Rational(2) * c.x, Rational(2) * c.y, Rational(2) * c.z, -s.power_constant()};
}

Point4 sphere_to_dual_point(const Sphere& s) {
  const Point3& c = s.center();
  return {c.x, c.y, c.z, -s.power_constant()};
}

Hyperplane4 point_to_dual_hyperplane(const Point3& p) {
  return {Rational(-2) * p.x, Rational(-2) * p.y, Rational(-2) * p.z, norm_sq(p)};
}

bool lifted_incidence(const Point3& p, const Sphere& s) {
  return sphere_to_hyperplane(s).contains(lift_point(p));
}

bool dual_incidence(const Point3& p, const Sphere& s) {
  return point_to_dual_hyperplane(p).contains(sphere_to_dual_point(s));
}

}  // namespace sphinc
