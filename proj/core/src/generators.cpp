#include "sphinc/generators.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

#include "sphinc/error.hpp"

namespace sphinc {

namespace {

Rational random_rational(Rng& rng, long num_bound, long den_bound) {
  const long num = rng.uniform(-num_bound, num_bound);
  const long den = rng.uniform(1, std::max(1L, den_bound));
  return Rational(num, den);
}

Point3 random_point(Rng& rng, long num_bound, long den_bound) {
  // Braced initializers evaluate left to right, so the draw order is fixed.
  return Point3{random_rational(rng, num_bound, den_bound), random_rational(rng, num_bound, den_bound),
                random_rational(rng, num_bound, den_bound)};
}

/// Calls make() until `count` distinct values are collected, in first-seen order.
template <class T, class Make>
std::vector<T> distinct_draws(std::size_t count, Make&& make) {
  std::vector<T> out;
  std::set<T> seen;
  const std::size_t max_attempts = 100 * count + 1000;
  for (std::size_t attempt = 0; out.size() < count; ++attempt) {
    if (attempt >= max_attempts)
      throw Error(ErrorKind::InvalidInput, "could not draw " + std::to_string(count) +
                                               " distinct values within the coordinate bounds");
    T v = make();
    if (seen.insert(v).second) out.push_back(std::move(v));
  }
  return out;
}

void require_bounds(const GeneratorSpec& spec) {
  if (spec.numerator_bound < 1 || spec.denominator_bound < 1)
    throw Error(ErrorKind::InvalidInput, "numerator and denominator bounds must be positive");
}

}  // namespace

long Rng::uniform(long lo, long hi) {
  if (hi < lo) throw Error(ErrorKind::InvalidInput, "empty integer range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  if (span == 0) return static_cast<long>(next());  // full 64-bit range
  const std::uint64_t threshold = (0 - span) % span;
  std::uint64_t x;
  do x = next();
  while (x < threshold);
  return static_cast<long>(static_cast<std::uint64_t>(lo) + x % span);
}

PointSet gen_grid(int k) {
  if (k < 1) throw Error(ErrorKind::InvalidInput, "grid size must be at least 1");
  std::vector<Point3> pts;
  pts.reserve(static_cast<std::size_t>(k) * k * k);
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y)
      for (int z = 0; z < k; ++z) pts.push_back({Rational(x), Rational(y), Rational(z)});
  return PointSet(std::move(pts));
}

PointSet gen_sphere_half(int depth) {
  if (depth < 1) throw Error(ErrorKind::InvalidInput, "depth must be at least 1");
  std::set<Point3> found;
  for (long s = 1; s <= depth; ++s) {
    const long target = 2 * s * s;
    const long bound = integer_root(mpz_class(target), 2).get_si();
    for (long a = -bound; a <= bound; ++a)
      for (long b = -bound; b <= bound; ++b) {
        const long rest = target - a * a - b * b;
        if (rest < 0) continue;
        const long c = integer_root(mpz_class(rest), 2).get_si();
        if (c * c != rest) continue;
        for (long sc : {c, -c})
          found.insert({Rational(a, 2 * s), Rational(b, 2 * s), Rational(sc, 2 * s)});
      }
  }
  return PointSet(std::vector<Point3>(found.begin(), found.end()));
}

std::vector<std::pair<Rational, Rational>> unit_circle_points(std::size_t count, int max_denominator) {
  std::vector<std::pair<Rational, Rational>> out;
  std::set<std::pair<Rational, Rational>> seen;
  auto push = [&](const Rational& x, const Rational& y) {
    if (out.size() < count && seen.insert({x, y}).second) out.emplace_back(x, y);
  };
  const Rational one(1), zero(0);
  push(one, zero);
  push(zero, one);
  push(-one, zero);
  push(zero, -one);
  for (long b = 2; b <= max_denominator && out.size() < count; ++b)
    for (long a = 1; a < b && out.size() < count; ++a) {
      if (std::gcd(a, b) != 1) continue;
      const Rational t(a, b);
      const Rational denom = one + t * t;
      const Rational x = (one - t * t) / denom;
      const Rational y = Rational(2) * t / denom;
      for (const auto& [u, v] : {std::pair{x, y}, std::pair{y, x}}) {
        push(u, v);
        push(-u, v);
        push(u, -v);
        push(-u, -v);
      }
    }
  if (out.size() < count)
    throw Error(ErrorKind::InfeasibleCircle, "only " + std::to_string(out.size()) +
                                                 " rational circle points within denominator budget " +
                                                 std::to_string(max_denominator));
  return out;
}

SurfaceSample gen_surface_points(SurfaceKind kind, std::size_t circles, std::size_t per_circle,
                                 const TorusShape& torus) {
  if (circles < 1 || per_circle < 1)
    throw Error(ErrorKind::InvalidInput, "circles and per_circle must be at least 1");
  const auto on_unit = unit_circle_points(per_circle);

  // Each parallel: height z and radius rho (both rational).
  std::vector<std::pair<Rational, Rational>> parallels;
  std::optional<SurfacePoly> variety;
  if (kind == SurfaceKind::Cylinder) {
    variety = SurfacePoly::cylinder();
    for (std::size_t i = 0; i < circles; ++i) {
      const long h = static_cast<long>((i + 1) / 2);
      parallels.emplace_back(Rational(i % 2 == 1 ? h : -h), Rational(1));
    }
  } else {
    if (!(torus.minor.sign() > 0 && torus.major > torus.minor))
      throw Error(ErrorKind::InvalidInput, "torus needs major > minor > 0");
    variety = SurfacePoly::torus(torus.major, torus.minor);
    for (const auto& [w, h] : unit_circle_points(circles)) parallels.emplace_back(torus.minor * h, torus.major + torus.minor * w);
  }

  std::vector<Point3> pts;
  std::vector<Circle3> carriers;
  for (const auto& [z, rho] : parallels) {
    carriers.push_back(Circle3::from_plane_sphere(Plane({Rational(0), Rational(0), Rational(1)}, z),
                                                  Sphere({Rational(0), Rational(0), z}, rho * rho)));
    for (const auto& [x, y] : on_unit) pts.push_back({rho * x, rho * y, z});
  }
  return SurfaceSample{PointSet(std::move(pts)), std::move(*variety), std::move(carriers)};
}

SphereSet gen_sphere_pencil(const Circle3& c, const std::vector<Rational>& lambdas) {
  std::vector<Sphere> spheres;
  spheres.reserve(lambdas.size());
  const Point3& n = c.plane().normal();
  for (const Rational& lambda : lambdas) {
    // Q_c + lambda L = |x|^2 - 2 (c - lambda n / 2) . x + (pc - lambda d)
    const Point3 center = c.center() - (lambda / Rational(2)) * n;
    const Rational constant = c.sphere().power_constant() - lambda * c.plane().offset();
    const Rational r2 = norm_sq(center) - constant;
    if (r2.sign() <= 0)
      throw Error(ErrorKind::ImaginarySphere, "pencil parameter " + lambda.to_string() + " gives radius_sq " +
                                                  r2.to_string());
    spheres.emplace_back(center, r2);
  }
  return SphereSet(std::move(spheres));
}

Point3 unit_sphere_point(const Rational& u, const Rational& v) {
  const Rational s = u * u + v * v;
  const Rational inv = Rational(1) / (s + Rational(1));
  return {Rational(2) * u * inv, Rational(2) * v * inv, (s - Rational(1)) * inv};
}

PointSet gen_random_points(const GeneratorSpec& spec) {
  require_bounds(spec);
  Rng rng(spec.seed);
  const long nb = spec.numerator_bound;
  const long db = spec.denominator_bound;
  switch (spec.kind) {
    case RandomKind::FreePoints:
      return PointSet(distinct_draws<Point3>(spec.count, [&] { return random_point(rng, nb, db); }));
    case RandomKind::ClusteredPoints: {
      const std::size_t clusters = std::max<std::size_t>(1, spec.count / 20);
      std::vector<Point3> centers;
      for (std::size_t i = 0; i < clusters; ++i) centers.push_back(random_point(rng, nb, 1));
      return PointSet(distinct_draws<Point3>(spec.count, [&] {
        const Point3& c = centers[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(clusters) - 1))];
        return c + random_point(rng, 2, db);
      }));
    }
    case RandomKind::UnitChain: {
      std::vector<Point3> chain;
      std::set<Point3> seen;
      const std::size_t max_attempts = 100 * spec.count + 1000;
      for (std::size_t attempt = 0; chain.size() < spec.count; ++attempt) {
        if (attempt >= max_attempts) throw Error(ErrorKind::InvalidInput, "unit chain stalled");
        Point3 next;
        if (chain.empty()) {
          next = random_point(rng, nb, db);
        } else {
          const auto from = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(chain.size()) - 1));
          const Rational u = random_rational(rng, nb, db);
          const Rational v = random_rational(rng, nb, db);
          next = chain[from] + unit_sphere_point(u, v);
        }
        if (seen.insert(next).second) chain.push_back(std::move(next));
      }
      return PointSet(std::move(chain));
    }
    case RandomKind::OnSurface: {
      constexpr std::size_t kParallels = 16;
      constexpr std::size_t kPerParallel = 64;
      const auto sample = gen_surface_points(spec.surface, kParallels, kPerParallel);
      return PointSet(distinct_draws<Point3>(spec.count, [&] {
        const auto row = static_cast<std::size_t>(rng.uniform(0, kParallels - 1));
        const auto col = static_cast<std::size_t>(rng.uniform(0, kPerParallel - 1));
        return sample.points[row * kPerParallel + col];
      }));
    }
    case RandomKind::FreeSpheres:
    case RandomKind::SpheresThrough:
      break;
  }
  throw Error(ErrorKind::InvalidInput, "generator kind " + std::string(to_string(spec.kind)) + " yields spheres");
}

SphereSet gen_random_spheres(const GeneratorSpec& spec, const PointSet& anchor) {
  require_bounds(spec);
  Rng rng(spec.seed);
  const long nb = spec.numerator_bound;
  const long db = spec.denominator_bound;
  if (spec.kind == RandomKind::FreeSpheres)
    return SphereSet(distinct_draws<Sphere>(spec.count, [&] {
      Point3 c = random_point(rng, nb, db);
      const long num = rng.uniform(1, nb);
      const long den = rng.uniform(1, db);
      return Sphere(std::move(c), Rational(num, den));
    }));
  if (spec.kind == RandomKind::SpheresThrough) {
    if (anchor.empty() && spec.count > 0)
      throw Error(ErrorKind::InvalidInput, "spheres_through needs a nonempty anchor point set");
    return SphereSet(distinct_draws<Sphere>(spec.count, [&] {
      for (;;) {
        Point3 c = random_point(rng, nb, db);
        const Point3& a = anchor[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(anchor.size()) - 1))];
        const Rational r2 = squared_distance(c, a);
        if (r2.sign() > 0) return Sphere(std::move(c), r2);
      }
    }));
  }
  throw Error(ErrorKind::InvalidInput, "generator kind " + std::string(to_string(spec.kind)) + " yields points");
}

std::string_view to_string(RandomKind kind) {
  switch (kind) {
    case RandomKind::FreePoints: return "free_points";
    case RandomKind::ClusteredPoints: return "clustered_points";
    case RandomKind::FreeSpheres: return "free_spheres";
    case RandomKind::SpheresThrough: return "spheres_through";
    case RandomKind::UnitChain: return "unit_chain";
    case RandomKind::OnSurface: return "on_surface";
  }
  return "unknown";
}

RandomKind parse_random_kind(std::string_view name) {
  for (RandomKind k : {RandomKind::FreePoints, RandomKind::ClusteredPoints, RandomKind::FreeSpheres,
                       RandomKind::SpheresThrough, RandomKind::UnitChain, RandomKind::OnSurface})
    if (to_string(k) == name) return k;
  throw Error(ErrorKind::InvalidInput, "unknown random kind '" + std::string(name) + "'");
}

}  // namespace sphinc
