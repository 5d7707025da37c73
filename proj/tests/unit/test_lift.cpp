#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "sphinc/generators.hpp"
#include "sphinc/lift.hpp"

using namespace sphinc;
using fixtures::pt;

namespace {
Rational q(long n, long d = 1) { return Rational(n, d); }
}  // namespace

TEST(LiftPoint, Examples) {
  EXPECT_EQ(lift_point(pt(0, 0, 0)), (Point4{0, 0, 0, 0}));
  EXPECT_EQ(lift_point(pt(1, 2, 3)), (Point4{1, 2, 3, 14}));
  EXPECT_EQ(lift_point({q(1, 2), q(1, 2), q(0)}), (Point4{q(1, 2), q(1, 2), 0, q(1, 2)}));
}

TEST(SphereToHyperplane, Examples) {
  EXPECT_EQ(sphere_to_hyperplane(fixtures::unit_at_origin()), (Hyperplane4{0, 0, 0, 1}));
  EXPECT_EQ(sphere_to_hyperplane(Sphere(pt(1, 0, 0), q(1))), (Hyperplane4{2, 0, 0, 0}));
  EXPECT_EQ(sphere_to_hyperplane(Sphere(pt(0, 0, 0), q(1, 2))), (Hyperplane4{0, 0, 0, q(1, 2)}));
}

TEST(Duality, Examples) {
  const Sphere unit = fixtures::unit_at_origin();
  EXPECT_EQ(sphere_to_dual_point(unit), (Point4{0, 0, 0, 1}));
  // 2 a1 + a4 = 1, written as a4 = -2 a1 + 1.
  EXPECT_EQ(point_to_dual_hyperplane(pt(1, 0, 0)), (Hyperplane4{-2, 0, 0, 1}));
  EXPECT_TRUE(dual_incidence(pt(1, 0, 0), unit));
  EXPECT_FALSE(dual_incidence(pt(0, 0, 0), unit));

  const Sphere s(pt(1, 1, 1), q(3));
  EXPECT_EQ(sphere_to_dual_point(s), (Point4{1, 1, 1, 0}));
  EXPECT_EQ(point_to_dual_hyperplane(pt(0, 0, 0)), (Hyperplane4{0, 0, 0, 0}));
  EXPECT_TRUE(on_sphere(pt(0, 0, 0), s));
  EXPECT_TRUE(dual_incidence(pt(0, 0, 0), s));
}

TEST(DualIncidence, Examples) {
  const Sphere unit = fixtures::unit_at_origin();
  EXPECT_TRUE(dual_incidence(pt(1, 0, 0), unit));
  EXPECT_FALSE(dual_incidence(pt(1, 1, 0), unit));
  EXPECT_TRUE(dual_incidence({q(3, 5), q(4, 5), q(0)}, unit));
}

TEST(Lift, ImageOnParaboloid) {
  Rng rng(9);
  for (int i = 0; i < 1000; ++i) {
    const Point3 p{Rational(rng.uniform(-50, 50), rng.uniform(1, 9)), Rational(rng.uniform(-50, 50), 3),
                   Rational(rng.uniform(-50, 50), 7)};
    const Point4 l = lift_point(p);
    EXPECT_EQ(l.x4, l.x1 * l.x1 + l.x2 * l.x2 + l.x3 * l.x3);
  }
}

TEST(Lift, ThreeRoutesAgreeOnRandomAndIncidentPairs) {
  GeneratorSpec spec;
  spec.seed = 2024;
  spec.count = 400;
  spec.kind = RandomKind::FreePoints;
  const PointSet pts = gen_random_points(spec);
  spec.kind = RandomKind::FreeSpheres;
  spec.count = 50;
  const SphereSet free = gen_random_spheres(spec);
  spec.kind = RandomKind::SpheresThrough;
  spec.count = 200;
  const SphereSet through = gen_random_spheres(spec, pts);

  std::size_t incident = 0;
  for (const SphereSet* set : {&free, &through})
    for (const Sphere& s : *set)
      for (std::size_t i = 0; i < pts.size(); i += 7) {
        const bool direct = on_sphere(pts[i], s);
        EXPECT_EQ(lifted_incidence(pts[i], s), direct);
        EXPECT_EQ(dual_incidence(pts[i], s), direct);
        incident += direct;
      }
  // Constructed incident pairs: rational points of a sphere with square radius.
  Rng rng(77);
  for (int i = 0; i < 500; ++i) {
    const Point3 c{Rational(rng.uniform(-9, 9), 2), Rational(rng.uniform(-9, 9), 3), Rational(rng.uniform(-9, 9))};
    const Rational r(rng.uniform(1, 12), rng.uniform(1, 5));
    const Point3 p = c + r * unit_sphere_point(Rational(rng.uniform(-20, 20), 3), Rational(rng.uniform(-20, 20), 7));
    const Sphere s(c, r * r);
    ASSERT_TRUE(on_sphere(p, s));
    EXPECT_TRUE(lifted_incidence(p, s));
    EXPECT_TRUE(dual_incidence(p, s));
  }
  EXPECT_GT(incident, 0u);
}
