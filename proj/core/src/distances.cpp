#include "sphinc/distances.hpp"

#include <array>
#include <numeric>
#include <unordered_map>
#include <vector>

#include "sphinc/error.hpp"
#include "sphinc/parallel.hpp"

namespace sphinc {

namespace {

// Coordinates scaled by a common denominator L into int64. Keeping |coord| <
// 2^29 bounds every squared distance by 3 * 2^60.
constexpr long kScaledLimit = 1L << 29;

struct Scaled {
  mpz_class scale;  // L
  std::vector<std::array<std::int64_t, 3>> first, second;
};

std::optional<Scaled> try_scale(const PointSet& a, const PointSet& b) {
  mpz_class l = 1;
  for (const PointSet* set : {&a, &b})
    for (const Point3& p : *set)
      for (std::size_t i = 0; i < 3; ++i) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), p[i].get().get_den_mpz_t());
        if (l >= kScaledLimit) return std::nullopt;
      }
  Scaled s{l, {}, {}};
  auto convert = [&](const PointSet& set, std::vector<std::array<std::int64_t, 3>>& out) {
    out.reserve(set.size());
    for (const Point3& p : set) {
      std::array<std::int64_t, 3> c{};
      for (std::size_t i = 0; i < 3; ++i) {
        const mpz_class v = p[i].num() * (l / p[i].den());
        if (abs(v) >= kScaledLimit) return false;
        c[i] = v.get_si();
      }
      out.push_back(c);
    }
    return true;
  };
  if (!convert(a, s.first) || !convert(b, s.second)) return std::nullopt;
  return s;
}

std::int64_t scaled_sq(const std::array<std::int64_t, 3>& p, const std::array<std::int64_t, 3>& q) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    const std::int64_t d = p[i] - q[i];
    s += d * d;
  }
  return s;
}

/// Runs visit(i, j) over either all unordered pairs i < j of one set, or all
/// ordered cross pairs, striped by i across workers.
template <class Visit>
void for_pairs(std::size_t m, std::size_t n, bool unordered, unsigned threads, Visit&& visit) {
  parallel_stripes(m, threads, [&](std::size_t begin, std::size_t end, unsigned w) {
    for (std::size_t i = begin; i < end; ++i)
      for (std::size_t j = unordered ? i + 1 : 0; j < n; ++j) visit(i, j, w);
  });
}

DistanceCensus census_scaled(const Scaled& s, bool unordered, unsigned threads) {
  const unsigned workers = resolve_threads(threads);
  std::vector<std::unordered_map<std::int64_t, std::uint64_t>> local(workers);
  for_pairs(s.first.size(), s.second.size(), unordered, threads,
            [&](std::size_t i, std::size_t j, unsigned w) { ++local[w][scaled_sq(s.first[i], s.second[j])]; });
  std::map<std::int64_t, std::uint64_t> merged;
  for (const auto& l : local)
    for (const auto& [k, c] : l) merged[k] += c;
  DistanceCensus census;
  const mpz_class l2 = s.scale * s.scale;
  for (const auto& [k, c] : merged) {
    if (k == 0) census.zero_pairs += c;
    else census.histogram.emplace_hint(census.histogram.end(), Rational(mpz_class(static_cast<long>(k)), l2), c);
  }
  return census;
}

DistanceCensus census_rational(const PointSet& a, const PointSet& b, bool unordered, unsigned threads) {
  const unsigned workers = resolve_threads(threads);
  std::vector<std::unordered_map<Rational, std::uint64_t>> local(workers);
  for_pairs(a.size(), b.size(), unordered, threads,
            [&](std::size_t i, std::size_t j, unsigned w) { ++local[w][squared_distance(a[i], b[j])]; });
  DistanceCensus census;
  for (const auto& l : local)
    for (const auto& [k, c] : l) {
      if (k.is_zero()) census.zero_pairs += c;
      else census.histogram[k] += c;
    }
  return census;
}

DistanceCensus census(const PointSet& a, const PointSet& b, bool unordered, const DistanceOptions& opts) {
  if (!opts.force_rational)
    if (auto s = try_scale(a, b)) return census_scaled(*s, unordered, opts.threads);
  return census_rational(a, b, unordered, opts.threads);
}

std::uint64_t count_unit(const PointSet& a, const PointSet& b, bool unordered, const DistanceOptions& opts) {
  const unsigned workers = resolve_threads(opts.threads);
  std::vector<std::uint64_t> local(workers, 0);
  std::optional<Scaled> s;
  if (!opts.force_rational) s = try_scale(a, b);
  if (s) {
    const std::int64_t unit = mpz_class(s->scale * s->scale).get_si();
    for_pairs(a.size(), b.size(), unordered, opts.threads, [&](std::size_t i, std::size_t j, unsigned w) {
      if (scaled_sq(s->first[i], s->second[j]) == unit) ++local[w];
    });
  } else {
    const Rational one(1);
    for_pairs(a.size(), b.size(), unordered, opts.threads, [&](std::size_t i, std::size_t j, unsigned w) {
      if (squared_distance(a[i], b[j]) == one) ++local[w];
    });
  }
  return std::accumulate(local.begin(), local.end(), std::uint64_t{0});
}

}  // namespace

std::uint64_t DistanceCensus::pairs() const {
  std::uint64_t total = zero_pairs;
  for (const auto& [d, c] : histogram) total += c;
  return total;
}

DistanceCensus distinct_distances(const PointSet& points, const DistanceOptions& opts) {
  if (points.size() < 2) throw Error(ErrorKind::TooFewPoints, "distance census needs at least two points");
  return census(points, points, true, opts);
}

DistanceCensus distinct_distances_bipartite(const PointSet& first, const PointSet& second,
                                            const DistanceOptions& opts) {
  if (first.empty() || second.empty()) throw Error(ErrorKind::InvalidInput, "bipartite census needs two nonempty sets");
  return census(first, second, false, opts);
}

std::uint64_t unit_distances(const PointSet& points, const DistanceOptions& opts) {
  return count_unit(points, points, true, opts);
}

std::uint64_t unit_distances_bipartite(const PointSet& first, const PointSet& second, const DistanceOptions& opts) {
  return count_unit(first, second, false, opts);
}

CenterLocus center_locus_circle(const Point3& p, const Point3& q) {
  if (p == q) throw Error(ErrorKind::CoincidentPoints, "center locus needs distinct points");
  const Rational d2 = squared_distance(p, q);
  const Point3 mid = Rational(1, 2) * (p + q);
  const auto cmp = d2 <=> Rational(4);
  if (cmp > 0) return NoIntersection{};
  if (cmp == 0) return SingleCenter{mid};
  const Point3 axis = q - p;
  return Circle3::from_plane_sphere(Plane(axis, dot(axis, mid)), Sphere(mid, Rational(1) - d2 / Rational(4)));
}

SphereSet reduction_spheres_for_distinct(const PointSet& centers, const DistanceCensus& census) {
  if (census.histogram.empty())
    throw Error(ErrorKind::InvalidInput, "census has no nonzero distances");
  std::vector<Sphere> spheres;
  spheres.reserve(centers.size() * census.histogram.size());
  for (const Point3& q : centers)
    for (const auto& [d, count] : census.histogram) spheres.emplace_back(q, d);
  return SphereSet(std::move(spheres));
}

}  // namespace sphinc
