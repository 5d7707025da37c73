#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "sphinc/error.hpp"
#include "sphinc/generators.hpp"
#include "sphinc/io.hpp"

using namespace sphinc;
using fixtures::pt;

namespace {
Rational q(long n, long d = 1) { return Rational(n, d); }
}  // namespace

TEST(GenGrid, Sizes) {
  EXPECT_EQ(gen_grid(1).size(), 1u);
  EXPECT_EQ(gen_grid(2).size(), 8u);
  const PointSet g = gen_grid(3);
  EXPECT_EQ(g.size(), 27u);
  EXPECT_EQ(g[0], pt(0, 0, 0));
  EXPECT_EQ(g[1], pt(0, 0, 1));
  EXPECT_EQ(g[26], pt(2, 2, 2));
  EXPECT_THROW(gen_grid(0), Error);
}

TEST(GenSphereHalf, DepthOne) {
  const PointSet P = gen_sphere_half(1);
  ASSERT_EQ(P.size(), 12u);
  const Sphere half(pt(0, 0, 0), q(1, 2));
  for (const Point3& p : P) {
    EXPECT_TRUE(on_sphere(p, half));
    int zeros = 0;
    for (std::size_t i = 0; i < 3; ++i) {
      zeros += p[i].is_zero();
      if (!p[i].is_zero()) EXPECT_EQ(abs(p[i]), q(1, 2));
    }
    EXPECT_EQ(zeros, 1);
  }
}

TEST(GenSphereHalf, AllDepthsOnSphere) {
  const Sphere half(pt(0, 0, 0), q(1, 2));
  std::size_t last = 0;
  for (int depth = 1; depth <= 6; ++depth) {
    const PointSet P = gen_sphere_half(depth);
    for (const Point3& p : P) EXPECT_TRUE(on_sphere(p, half));
    EXPECT_GE(P.size(), last);
    last = P.size();
  }
  EXPECT_GT(last, 12u);
}

TEST(UnitCirclePoints, OrderAndBudget) {
  const auto pts = unit_circle_points(12);
  ASSERT_EQ(pts.size(), 12u);
  EXPECT_EQ(pts[0], std::make_pair(q(1), q(0)));
  EXPECT_EQ(pts[3], std::make_pair(q(0), q(-1)));
  // t = 1/2 gives (3/5, 4/5).
  EXPECT_EQ(pts[4], std::make_pair(q(3, 5), q(4, 5)));
  for (const auto& [x, y] : pts) EXPECT_EQ(x * x + y * y, q(1));
  EXPECT_THROW(unit_circle_points(1000, 3), Error);
  try {
    unit_circle_points(1000, 3);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InfeasibleCircle);
  }
}

TEST(GenSurfacePoints, Cylinder) {
  const auto s = gen_surface_points(SurfaceKind::Cylinder, 2, 4);
  EXPECT_EQ(s.points.size(), 8u);
  EXPECT_EQ(s.variety.degree(), 2);
  for (const Point3& p : s.points) EXPECT_TRUE(on_variety(p, s.variety));
  for (const Circle3& c : s.circles) EXPECT_TRUE(circle_in_variety(c, s.variety));
  EXPECT_EQ(gen_surface_points(SurfaceKind::Cylinder, 1, 1).points.size(), 1u);
}

TEST(GenSurfacePoints, Torus) {
  const auto s = gen_surface_points(SurfaceKind::Torus, 4, 8);
  EXPECT_EQ(s.variety.degree(), 4);
  EXPECT_EQ(s.points.size(), 32u);
  for (const Point3& p : s.points) EXPECT_TRUE(on_variety(p, s.variety));
  // The outer equator z = 0, rho = 3 carries (3,0,0), (-3,0,0) and (9/5,12/5,0).
  EXPECT_EQ(s.circles[0].radius_sq(), q(9));
  bool found = false;
  for (const Point3& p : s.points) found = found || p == Point3{q(9, 5), q(12, 5), q(0)};
  EXPECT_TRUE(found);
  EXPECT_THROW(gen_surface_points(SurfaceKind::Torus, 2, 2, {q(1), q(1)}), Error);
  EXPECT_THROW(gen_surface_points(SurfaceKind::Torus, 0, 2), Error);
}

TEST(GenSpherePencil, Examples) {
  const SphereSet s = gen_sphere_pencil(fixtures::equator(), {q(0), q(2)});
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0], fixtures::unit_at_origin());
  EXPECT_EQ(s[1], Sphere(pt(0, 0, -1), q(2)));
  const SphereSet huge = gen_sphere_pencil(fixtures::equator(), {q(1000000), q(-77, 3)});
  for (const Sphere& sp : huge) EXPECT_TRUE(circle_in_sphere(fixtures::equator(), sp));
  const Circle3 small = circle_through(pt(0, 0, 5), pt(1, 0, 5), pt(0, 1, 5));
  for (const Sphere& sp : gen_sphere_pencil(small, {q(-3), q(1, 2), q(9)})) EXPECT_TRUE(circle_in_sphere(small, sp));
}

TEST(GenSpherePencil, RadiusGrowsWithLambda) {
  // r^2 = r_c^2 + lambda^2 |n|^2 / 4 for every member, so no real circle has an imaginary member.
  const Circle3 c = circle_through(pt(1, 0, 3), pt(0, 2, 3), pt(-1, 1, 4));
  const Rational n2 = norm_sq(c.plane().normal());
  for (long k = -20; k <= 20; ++k) {
    const Rational lambda(k, 3);
    const Sphere s = gen_sphere_pencil(c, {lambda})[0];
    EXPECT_EQ(s.radius_sq(), c.radius_sq() + lambda * lambda * n2 / Rational(4));
  }
  EXPECT_EQ(gen_sphere_pencil(c, {}).size(), 0u);
}

TEST(Rng, RangeAndDeterminism) {
  Rng a(42), b(42), c(43);
  bool differs = false;
  for (int i = 0; i < 1000; ++i) {
    const long x = a.uniform(-3, 5);
    EXPECT_EQ(x, b.uniform(-3, 5));
    EXPECT_GE(x, -3);
    EXPECT_LE(x, 5);
    differs = differs || c.uniform(-3, 5) != x;
  }
  EXPECT_TRUE(differs);
  // Fixed by the standard: the 10000th output of mt19937_64 seeded 5489.
  std::mt19937_64 ref;
  ref.discard(9999);
  EXPECT_EQ(ref(), 9981545732273789042ull);
}

TEST(GenRandom, Deterministic) {
  for (RandomKind kind : {RandomKind::FreePoints, RandomKind::ClusteredPoints, RandomKind::UnitChain,
                          RandomKind::OnSurface}) {
    GeneratorSpec spec;
    spec.kind = kind;
    spec.count = 100;
    const PointSet a = gen_random_points(spec);
    const PointSet b = gen_random_points(spec);
    EXPECT_EQ(io::to_json(a).dump(), io::to_json(b).dump()) << to_string(kind);
    EXPECT_EQ(a.size(), 100u);
    spec.seed = 43;
    EXPECT_NE(io::to_json(gen_random_points(spec)).dump(), io::to_json(a).dump()) << to_string(kind);
    spec.count = 0;
    EXPECT_TRUE(gen_random_points(spec).empty());
  }
}

TEST(GenRandom, KindContracts) {
  GeneratorSpec spec;
  spec.count = 50;
  spec.kind = RandomKind::UnitChain;
  const PointSet chain = gen_random_points(spec);
  for (std::size_t i = 1; i < chain.size(); ++i) {
    bool linked = false;
    for (std::size_t j = 0; j < i && !linked; ++j) linked = squared_distance(chain[i], chain[j]) == q(1);
    EXPECT_TRUE(linked) << i;
  }
  spec.kind = RandomKind::OnSurface;
  const SurfacePoly torus = SurfacePoly::torus(2, 1);
  for (const Point3& p : gen_random_points(spec)) EXPECT_TRUE(on_variety(p, torus));
  spec.surface = SurfaceKind::Cylinder;
  for (const Point3& p : gen_random_points(spec)) EXPECT_TRUE(on_variety(p, SurfacePoly::cylinder()));
  spec.kind = RandomKind::SpheresThrough;
  const SphereSet through = gen_random_spheres(spec, chain);
  for (const Sphere& s : through) {
    bool hit = false;
    for (const Point3& p : chain) hit = hit || on_sphere(p, s);
    EXPECT_TRUE(hit);
  }
  EXPECT_THROW(gen_random_spheres(spec), Error);
  spec.kind = RandomKind::FreeSpheres;
  EXPECT_THROW(gen_random_points(spec), Error);
  EXPECT_EQ(gen_random_spheres(spec).size(), 50u);
}

TEST(RandomKindNames, RoundTrip) {
  for (RandomKind k : {RandomKind::FreePoints, RandomKind::ClusteredPoints, RandomKind::FreeSpheres,
                       RandomKind::SpheresThrough, RandomKind::UnitChain, RandomKind::OnSurface})
    EXPECT_EQ(parse_random_kind(to_string(k)), k);
  EXPECT_THROW(parse_random_kind("nope"), Error);
}

TEST(UnitSpherePoint, OnUnitSphere) {
  Rng rng(1);
  for (int i = 0; i < 200; ++i) {
    const Point3 p = unit_sphere_point(Rational(rng.uniform(-30, 30), rng.uniform(1, 7)),
                                       Rational(rng.uniform(-30, 30), rng.uniform(1, 7)));
    EXPECT_EQ(norm_sq(p), q(1));
  }
}
