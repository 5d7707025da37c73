#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "sphinc/rational.hpp"

namespace sphinc {

struct Point3 {
  Rational x, y, z;

  const Rational& operator[](std::size_t i) const { return i == 0 ? x : (i == 1 ? y : z); }
  Rational& operator[](std::size_t i) { return i == 0 ? x : (i == 1 ? y : z); }

  friend bool operator==(const Point3&, const Point3&) = default;
  friend std::strong_ordering operator<=>(const Point3&, const Point3&) = default;
};

Point3 operator+(const Point3& a, const Point3& b);
Point3 operator-(const Point3& a, const Point3& b);
Point3 operator*(const Rational& s, const Point3& a);
Rational dot(const Point3& a, const Point3& b);
Point3 cross(const Point3& a, const Point3& b);
Rational norm_sq(const Point3& a);
bool is_zero(const Point3& a);

/// Sphere with squared radius, so radii such as 1/sqrt(2) stay exact.
class Sphere {
 public:
  /// Throws ImaginarySphere unless radius_sq > 0.
  Sphere(Point3 center, Rational radius_sq);

  const Point3& center() const noexcept { return center_; }
  const Rational& radius_sq() const noexcept { return radius_sq_; }

  /// Constant term of |x|^2 - 2 c.x + (|c|^2 - r^2).
  Rational power_constant() const { return norm_sq(center_) - radius_sq_; }

  friend bool operator==(const Sphere&, const Sphere&) = default;
  friend std::strong_ordering operator<=>(const Sphere&, const Sphere&) = default;

 private:
  Point3 center_;
  Rational radius_sq_;
};

/// Plane {q : normal . q = offset}, scaled so the first nonzero normal
/// coordinate is 1.
class Plane {
 public:
  /// Throws InvalidInput for a zero normal.
  Plane(Point3 normal, Rational offset);

  const Point3& normal() const noexcept { return normal_; }
  const Rational& offset() const noexcept { return offset_; }
  /// Index of the first nonzero normal coordinate (which equals 1).
  std::size_t pivot() const noexcept { return pivot_; }

  /// normal . p - offset
  Rational evaluate(const Point3& p) const { return dot(normal_, p) - offset_; }
  bool contains(const Point3& p) const { return evaluate(p).is_zero(); }

  friend bool operator==(const Plane& a, const Plane& b) {
    return a.normal_ == b.normal_ && a.offset_ == b.offset_;
  }
  friend std::strong_ordering operator<=>(const Plane& a, const Plane& b) {
    if (auto c = a.normal_ <=> b.normal_; c != 0) return c;
    return a.offset_ <=> b.offset_;
  }

 private:
  Point3 normal_;
  Rational offset_;
  std::size_t pivot_ = 0;
};

/// Circle as plane ∩ sphere, stored canonically: the carrier sphere is the
/// smallest sphere through the circle (its center lies on the plane), so two
/// circles are equal iff their fields are equal.
class Circle3 {
 public:
  /// Canonicalizes any (plane, sphere) pair cutting a real circle.
  /// Throws InvalidInput when the plane misses the sphere or is tangent.
  static Circle3 from_plane_sphere(const Plane& plane, const Sphere& sphere);

  const Plane& plane() const noexcept { return plane_; }
  const Sphere& sphere() const noexcept { return sphere_; }
  const Point3& center() const noexcept { return sphere_.center(); }
  const Rational& radius_sq() const noexcept { return sphere_.radius_sq(); }

  bool contains(const Point3& p) const;

  friend bool operator==(const Circle3&, const Circle3&) = default;
  friend std::strong_ordering operator<=>(const Circle3& a, const Circle3& b) {
    if (auto c = a.plane_ <=> b.plane_; c != 0) return c;
    return a.sphere_ <=> b.sphere_;
  }

 private:
  Circle3(Plane plane, Sphere sphere) : plane_(std::move(plane)), sphere_(std::move(sphere)) {}

  Plane plane_;
  Sphere sphere_;
};

Rational squared_distance(const Point3& p, const Point3& q);
bool on_sphere(const Point3& p, const Sphere& s);
inline bool point_on_circle(const Point3& p, const Circle3& c) { return c.contains(p); }
bool collinear(const Point3& p, const Point3& q, const Point3& r);

/// Unique circle through three non-collinear points. Throws CollinearInput.
Circle3 circle_through(const Point3& p, const Point3& q, const Point3& r);

/// Unique sphere through four non-coplanar points. Throws CollinearInput
/// when the points are coplanar (no unique sphere).
Sphere sphere_through(const Point3& a, const Point3& b, const Point3& c, const Point3& d);

/// True iff all points lie on one circle. Duplicates are ignored; two or
/// fewer distinct points are vacuously cocircular; three or more collinear
/// distinct points are not.
bool cocircular(std::span<const Point3> points);

/// The circle through `points` when they are cocircular and at least three
/// are distinct.
std::optional<Circle3> common_circle(std::span<const Point3> points);

struct NoIntersection {
  friend bool operator==(const NoIntersection&, const NoIntersection&) = default;
};
struct TangentPoint {
  Point3 point;
  friend bool operator==(const TangentPoint&, const TangentPoint&) = default;
};
using SpherePairIntersection = std::variant<Circle3, NoIntersection, TangentPoint>;

/// Intersection of two distinct spheres via their radical plane.
/// Throws IdenticalSpheres when s1 == s2.
SpherePairIntersection sphere_pair_circle(const Sphere& s1, const Sphere& s2);

/// Exact pencil membership: s contains c iff Q_s - Q_c = lambda * L_c.
bool circle_in_sphere(const Circle3& c, const Sphere& s);

/// The lambda with Q_s = Q_c + lambda * L_c, if s belongs to c's pencil.
std::optional<Rational> pencil_parameter(const Circle3& c, const Sphere& s);

}  // namespace sphinc
