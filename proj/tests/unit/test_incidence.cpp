#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "sphinc/error.hpp"
#include "sphinc/generators.hpp"
#include "sphinc/incidence.hpp"

using namespace sphinc;
using fixtures::pt;

namespace {

Rational q(long n, long d = 1) { return Rational(n, d); }

SphereSet spheres_through(const PointSet& anchor, std::size_t count, std::uint64_t seed, long nb = 20, long db = 4) {
  GeneratorSpec spec;
  spec.kind = RandomKind::SpheresThrough;
  spec.count = count;
  spec.seed = seed;
  spec.numerator_bound = nb;
  spec.denominator_bound = db;
  return gen_random_spheres(spec, anchor);
}

PointSet random_points(RandomKind kind, std::size_t count, std::uint64_t seed, long nb = 20, long db = 4) {
  GeneratorSpec spec;
  spec.kind = kind;
  spec.count = count;
  spec.seed = seed;
  spec.numerator_bound = nb;
  spec.denominator_bound = db;
  return gen_random_points(spec);
}

}  // namespace

TEST(PointSet, RejectsDuplicates) {
  EXPECT_THROW(PointSet({pt(1, 0, 0), pt(0, 1, 0), pt(1, 0, 0)}), Error);
  try {
    SphereSet({fixtures::unit_at_origin(), fixtures::unit_at_origin()});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DuplicateEntry);
  }
}

TEST(IncidenceGraph, SortsAndValidates) {
  const IncidenceGraph g(2, 2, {{1, 0}, {0, 1}, {1, 0}});
  ASSERT_EQ(g.size(), 2u);
  EXPECT_EQ(g.edges()[0], (Edge{0, 1}));
  EXPECT_TRUE(g.contains({1, 0}));
  EXPECT_FALSE(g.contains({0, 0}));
  EXPECT_THROW(IncidenceGraph(1, 1, {{1, 0}}), Error);
}

TEST(Bruteforce, Examples) {
  const PointSet square = fixtures::square_on_equator();
  EXPECT_EQ(incidences_bruteforce(square, SphereSet({fixtures::unit_at_origin()})).size(), 4u);
  EXPECT_EQ(incidences_bruteforce(PointSet({pt(0, 0, 0)}), SphereSet({fixtures::unit_at_origin()})).size(), 0u);
  const auto pencil = fixtures::pencil();
  EXPECT_EQ(pencil.spheres[1], Sphere(pt(0, 0, -1), q(2)));
  EXPECT_EQ(incidences_bruteforce(pencil.points, pencil.spheres).size(), 8u);
}

TEST(Bucketed, EmptyInputs) {
  EXPECT_EQ(incidences_bucketed(PointSet(), SphereSet({fixtures::unit_at_origin()})).size(), 0u);
  EXPECT_EQ(incidences_bucketed(fixtures::square_on_equator(), SphereSet()).size(), 0u);
}

TEST(Bucketed, MatchesBruteforceOnFixtures) {
  for (const auto& f : fixtures::all()) {
    const auto brute = incidences_bruteforce(f.points, f.spheres);
    EXPECT_EQ(incidences_bucketed(f.points, f.spheres), brute) << f.name;
    EXPECT_TRUE(unverified_edges(brute, f.points, f.spheres).empty());
  }
}

TEST(Bucketed, MatchesBruteforceOnThousandBySeed42) {
  const PointSet P = random_points(RandomKind::FreePoints, 1000, 42);
  const SphereSet S = spheres_through(P, 1000, 42);
  const auto brute = incidences_bruteforce(P, S);
  EXPECT_EQ(incidences_bucketed(P, S), brute);
  EXPECT_GE(brute.size(), 1000u);
}

TEST(Bucketed, MatchesBruteforceOnMixedRandomInstances) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto kind = seed % 3 == 0 ? RandomKind::ClusteredPoints
                                    : (seed % 3 == 1 ? RandomKind::FreePoints : RandomKind::UnitChain);
    const PointSet P = random_points(kind, 60 + seed, seed, 6 + static_cast<long>(seed), 1 + seed % 5);
    std::vector<Sphere> spheres;
    for (const Sphere& s : spheres_through(P, 50, seed + 100, 10, 3)) spheres.push_back(s);
    GeneratorSpec free;
    free.kind = RandomKind::FreeSpheres;
    free.count = 30;
    free.seed = seed + 200;
    free.numerator_bound = 4;
    free.denominator_bound = 1;
    for (const Sphere& s : gen_random_spheres(free))
      if (std::find(spheres.begin(), spheres.end(), s) == spheres.end()) spheres.push_back(s);
    // Very small and very large radii stress the dyadic scales.
    spheres.emplace_back(P[0], Rational(1, 1 << 20));
    spheres.emplace_back(P[0], Rational(1L << 40));
    const SphereSet S(std::move(spheres));
    EXPECT_EQ(incidences_bucketed(P, S), incidences_bruteforce(P, S)) << seed;
    EXPECT_EQ(incidences_bucketed(P, S, {3}), incidences_bruteforce(P, S, {2})) << seed;
  }
}

TEST(Bucketed, HugeCoordinatesFallBack) {
  const PointSet P({{Rational(mpz_class("100000000000000000000000"), 1), q(0), q(0)}, pt(1, 0, 0)});
  const SphereSet S({fixtures::unit_at_origin(), Sphere(pt(0, 0, 0), P[0].x * P[0].x)});
  EXPECT_EQ(incidences_bucketed(P, S), incidences_bruteforce(P, S));
  EXPECT_EQ(incidences_bucketed(P, S).size(), 2u);
}

TEST(UnitIncidences, Examples) {
  const PointSet cube = gen_grid(2);
  EXPECT_EQ(unit_incidences(cube, cube).size(), 24u);
  EXPECT_EQ(unit_incidences(PointSet({pt(0, 0, 0)}), PointSet({pt(1, 0, 0)})).size(), 1u);
  const PointSet far({pt(0, 0, 0), pt(3, 0, 0)});
  EXPECT_EQ(unit_incidences(far, far).size(), 0u);
}

TEST(UnitIncidences, EvenCountOnSelfGraph) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const PointSet P = random_points(RandomKind::UnitChain, 40, seed, 3, 2);
    const auto g = unit_incidences(P, P);
    EXPECT_EQ(g.size() % 2, 0u);
    EXPECT_GE(g.size(), 2 * 39u);
    for (const Edge& e : g.edges()) EXPECT_TRUE(g.contains({e.sphere, e.point}));
  }
}

TEST(K33, Examples) {
  const auto f = fixtures::pencil(5);
  const auto g = incidences_bruteforce(f.points, f.spheres);
  const auto w = contains_k33(g);
  ASSERT_TRUE(w);
  for (auto p : w->points)
    for (auto s : w->spheres) EXPECT_TRUE(g.contains({p, s}));
  EXPECT_FALSE(contains_k33(IncidenceGraph()));
  EXPECT_FALSE(contains_k33(incidences_bruteforce(f.points, SphereSet({f.spheres[0], f.spheres[1]}))));
}

TEST(K33, SizeGuard) {
  const PointSet P = gen_grid(3);
  try {
    contains_k33(unit_incidences(P, P), 10);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SizeGuard);
  }
}

TEST(K33, AgreesWithExhaustiveSearch) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const PointSet P = random_points(RandomKind::ClusteredPoints, 30, seed, 3, 1);
    const SphereSet S = spheres_through(P, 25, seed, 3, 1);
    const auto g = incidences_bruteforce(P, S);
    EXPECT_EQ(contains_k33(g).has_value(), oracle::has_k33(g)) << seed;
  }
  const auto pencil = fixtures::pencil(3);
  EXPECT_TRUE(oracle::has_k33(incidences_bruteforce(pencil.points, pencil.spheres)));
}

TEST(K33, UnitGraphsAreFree) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const PointSet P = random_points(RandomKind::UnitChain, 50, seed, 2, 1);
    const auto g = unit_incidences(P, P);
    EXPECT_FALSE(contains_k33(g)) << seed;
    EXPECT_FALSE(oracle::has_k33(g)) << seed;
  }
  const PointSet grid = gen_grid(4);
  EXPECT_FALSE(contains_k33(unit_incidences(grid, grid)));
}
