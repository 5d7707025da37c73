#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "sphinc/geometry.hpp"
#include "sphinc/incidence.hpp"
#include "sphinc/polynomial.hpp"

namespace sphinc {

/// All points of [0, k)^3 ∩ Z^3 in lexicographic order. Throws InvalidInput for k < 1.
PointSet gen_grid(int k);

/// Rational points on the sphere x^2+y^2+z^2 = 1/2, from integer solutions of
/// a^2+b^2+c^2 = 2 s^2 with 1 <= s <= depth, emitted as (a,b,c)/(2s) and
/// sorted. depth = 1 gives the 12 points (±1/2, ±1/2, 0) and permutations.
PointSet gen_sphere_half(int depth);

/// First `count` rational points of the unit circle in a fixed order: the four
/// axis points, then the eight symmetric images of each point
/// ((1-t^2)/(1+t^2), 2t/(1+t^2)) for t = a/b in (0, 1) ordered by (b, a).
/// Throws InfeasibleCircle beyond the denominator budget.
std::vector<std::pair<Rational, Rational>> unit_circle_points(std::size_t count, int max_denominator = 256);

enum class SurfaceKind { Cylinder, Torus };

struct SurfaceSample {
  PointSet points;
  SurfacePoly variety;
  std::vector<Circle3> circles;  // the parallels that carry the points
};

struct TorusShape {
  Rational major = Rational(2);
  Rational minor = Rational(1);
};

/// Points on `circles` horizontal circles of the surface, `per_circle`
/// rational points each. Cylinder x^2+y^2=1 uses heights z = 0, 1, -1, 2, ...;
/// the torus uses parallels at heights minor·h with radius major ± minor·w for
/// rational (h, w) on the unit circle. Throws InfeasibleCircle when the
/// parameter budget cannot supply the request.
SurfaceSample gen_surface_points(SurfaceKind kind, std::size_t circles, std::size_t per_circle,
                                 const TorusShape& torus = {});

/// Spheres Q_c + lambda · L_c of the pencil through c. Throws ImaginarySphere
/// when some lambda gives a non-positive squared radius.
SphereSet gen_sphere_pencil(const Circle3& c, const std::vector<Rational>& lambdas);

enum class RandomKind {
  FreePoints,     // independent random rational points
  ClusteredPoints,  // points near a few random centers
  FreeSpheres,    // random centers and squared radii
  SpheresThrough,  // spheres centered at random points through an existing point
  UnitChain,      // each new point at distance 1 from an earlier one
  OnSurface,      // random rational points on the torus or cylinder parallels
};

/// Seeded random configuration. The PRNG is std::mt19937_64 (its output
/// sequence is fixed by the standard); integers in [lo, hi] are drawn by
/// rejection sampling on the raw 64-bit output, so all platforms agree.
struct GeneratorSpec {
  RandomKind kind = RandomKind::FreePoints;
  std::size_t count = 0;
  std::uint64_t seed = 42;
  long numerator_bound = 20;   // numerators in [-bound, bound]
  long denominator_bound = 4;  // denominators in [1, bound]
  SurfaceKind surface = SurfaceKind::Torus;
};

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform integer in [lo, hi].
  long uniform(long lo, long hi);
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// Random point set for the point kinds; throws InvalidInput for sphere kinds.
PointSet gen_random_points(const GeneratorSpec& spec);
/// Random sphere set for FreeSpheres and SpheresThrough; the latter passes
/// each sphere through a random point of `anchor`.
SphereSet gen_random_spheres(const GeneratorSpec& spec, const PointSet& anchor = {});

/// Rational point (2u, 2v, u^2+v^2-1) / (u^2+v^2+1) on the unit sphere.
Point3 unit_sphere_point(const Rational& u, const Rational& v);

std::string_view to_string(RandomKind kind);
RandomKind parse_random_kind(std::string_view name);

}  // namespace sphinc
