#include "sphinc/geometry.hpp"

#include <algorithm>

#include "sphinc/error.hpp"

namespace sphinc {

Point3 operator+(const Point3& a, const Point3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
Point3 operator-(const Point3& a, const Point3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
Point3 operator*(const Rational& s, const Point3& a) { return {s * a.x, s * a.y, s * a.z}; }

Rational dot(const Point3& a, const Point3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

Point3 cross(const Point3& a, const Point3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

Rational norm_sq(const Point3& a) { return dot(a, a); }

bool is_zero(const Point3& a) { return a.x.is_zero() && a.y.is_zero() && a.z.is_zero(); }

Sphere::Sphere(Point3 center, Rational radius_sq)
    : center_(std::move(center)), radius_sq_(std::move(radius_sq)) {
  if (radius_sq_.sign() <= 0)
    throw Error(ErrorKind::ImaginarySphere, "radius_sq must be positive, got " + radius_sq_.to_string());
}

Plane::Plane(Point3 normal, Rational offset) {
  std::size_t k = 0;
  while (k < 3 && normal[k].is_zero()) ++k;
  if (k == 3) throw Error(ErrorKind::InvalidInput, "plane normal is zero");
  const Rational scale = Rational(1) / normal[k];
  normal_ = scale * normal;
  offset_ = scale * offset;
  pivot_ = k;
}

Circle3 Circle3::from_plane_sphere(const Plane& plane, const Sphere& sphere) {
  const Rational n2 = norm_sq(plane.normal());
  const Rational signed_dist = plane.evaluate(sphere.center());
  const Rational dist_sq = signed_dist * signed_dist / n2;
  const Rational r2 = sphere.radius_sq() - dist_sq;
  if (r2.sign() <= 0) throw Error(ErrorKind::InvalidInput, "plane does not cut the sphere in a circle");
  Point3 center = sphere.center() - (signed_dist / n2) * plane.normal();
  return Circle3(plane, Sphere(std::move(center), r2));
}

bool Circle3::contains(const Point3& p) const { return plane_.contains(p) && on_sphere(p, sphere_); }

Rational squared_distance(const Point3& p, const Point3& q) { return norm_sq(p - q); }

bool on_sphere(const Point3& p, const Sphere& s) { return squared_distance(p, s.center()) == s.radius_sq(); }

bool collinear(const Point3& p, const Point3& q, const Point3& r) { return is_zero(cross(q - p, r - p)); }

Circle3 circle_through(const Point3& p, const Point3& q, const Point3& r) {
  const Point3 a = p - r;
  const Point3 b = q - r;
  const Point3 axb = cross(a, b);
  if (is_zero(axb)) throw Error(ErrorKind::CollinearInput, "points are collinear or coincide");
  // Circumcenter r + ((|a|^2 b - |b|^2 a) x (a x b)) / (2 |a x b|^2).
  const Point3 u = norm_sq(a) * b - norm_sq(b) * a;
  const Point3 center = r + (Rational(1) / (Rational(2) * norm_sq(axb))) * cross(u, axb);
  const Rational r2 = squared_distance(center, p);
  return Circle3::from_plane_sphere(Plane(axb, dot(axb, p)), Sphere(center, r2));
}

Sphere sphere_through(const Point3& a, const Point3& b, const Point3& c, const Point3& d) {
  // Rows 2(v - a) . X = |v|^2 - |a|^2 for v in {b, c, d}; Cramer's rule.
  const Point3 r1 = Rational(2) * (b - a);
  const Point3 r2 = Rational(2) * (c - a);
  const Point3 r3 = Rational(2) * (d - a);
  const Rational a2 = norm_sq(a);
  const Point3 rhs{norm_sq(b) - a2, norm_sq(c) - a2, norm_sq(d) - a2};
  const Rational det = dot(r1, cross(r2, r3));
  if (det.is_zero()) throw Error(ErrorKind::CollinearInput, "points are coplanar");
  // Columns replaced by rhs: solve via the adjugate (cross products of rows).
  const Point3 c23 = cross(r2, r3);
  const Point3 c31 = cross(r3, r1);
  const Point3 c12 = cross(r1, r2);
  const Point3 center = (Rational(1) / det) * (rhs.x * c23 + rhs.y * c31 + rhs.z * c12);
  return Sphere(center, squared_distance(center, a));
}

namespace {

std::vector<Point3> distinct_points(std::span<const Point3> points) {
  std::vector<Point3> out(points.begin(), points.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::optional<Circle3> common_circle(std::span<const Point3> points) {
  const std::vector<Point3> pts = distinct_points(points);
  if (pts.size() < 3) return std::nullopt;
  std::size_t third = 2;
  while (third < pts.size() && collinear(pts[0], pts[1], pts[third])) ++third;
  if (third == pts.size()) return std::nullopt;
  Circle3 circle = circle_through(pts[0], pts[1], pts[third]);
  for (const Point3& p : pts)
    if (!circle.contains(p)) return std::nullopt;
  return circle;
}

bool cocircular(std::span<const Point3> points) {
  const std::vector<Point3> pts = distinct_points(points);
  if (pts.size() <= 2) return true;
  return common_circle(pts).has_value();
}

SpherePairIntersection sphere_pair_circle(const Sphere& s1, const Sphere& s2) {
  if (s1 == s2) throw Error(ErrorKind::IdenticalSpheres, "spheres coincide");
  if (s1.center() == s2.center()) return NoIntersection{};
  // Q1 - Q2 = 2 (c2 - c1) . x + (pc1 - pc2) = 0.
  const Plane radical(Rational(2) * (s2.center() - s1.center()),
                      s2.power_constant() - s1.power_constant());
  const Rational signed_dist = radical.evaluate(s1.center());
  const Rational n2 = norm_sq(radical.normal());
  const auto cmp = (signed_dist * signed_dist / n2) <=> s1.radius_sq();
  if (cmp > 0) return NoIntersection{};
  if (cmp == 0) return TangentPoint{s1.center() - (signed_dist / n2) * radical.normal()};
  return Circle3::from_plane_sphere(radical, s1);
}

std::optional<Rational> pencil_parameter(const Circle3& c, const Sphere& s) {
  const Point3& n = c.plane().normal();
  // Q_s - Q_c = -2 (c_s - c_c) . x + (pc_s - pc_c), must equal lambda (n . x - d).
  const Point3 linear = Rational(-2) * (s.center() - c.center());
  Rational lambda = linear[c.plane().pivot()];
  for (std::size_t i = 0; i < 3; ++i)
    if (linear[i] != lambda * n[i]) return std::nullopt;
  if (s.power_constant() - c.sphere().power_constant() != -(lambda * c.plane().offset()))
    return std::nullopt;
  return lambda;
}

bool circle_in_sphere(const Circle3& c, const Sphere& s) { return pencil_parameter(c, s).has_value(); }

}  // namespace sphinc
