#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <variant>

#include "sphinc/geometry.hpp"
#include "sphinc/incidence.hpp"

namespace sphinc {

/// Histogram of squared distances. Distinct squared distances are distinct
/// distances, so t = histogram.size(). Zero distances (possible only in
/// bipartite censuses) are counted separately and excluded from t.
struct DistanceCensus {
  std::map<Rational, std::uint64_t> histogram;
  std::uint64_t zero_pairs = 0;

  std::size_t distinct() const noexcept { return histogram.size(); }
  std::uint64_t pairs() const;
};

struct DistanceOptions {
  unsigned threads = 1;
  /// Skip the scaled 64-bit integer path and use rational arithmetic only.
  bool force_rational = false;
};

/// Census over all unordered pairs. Throws TooFewPoints for fewer than two points.
DistanceCensus distinct_distances(const PointSet& points, const DistanceOptions& opts = {});

/// Census over all |P1|·|P2| ordered cross pairs.
/// Throws InvalidInput when either side is empty.
DistanceCensus distinct_distances_bipartite(const PointSet& first, const PointSet& second,
                                            const DistanceOptions& opts = {});

/// Unordered pairs at squared distance exactly 1.
std::uint64_t unit_distances(const PointSet& points, const DistanceOptions& opts = {});
/// Ordered cross pairs at squared distance exactly 1.
std::uint64_t unit_distances_bipartite(const PointSet& first, const PointSet& second,
                                       const DistanceOptions& opts = {});

/// The two points are exactly 2 apart: the only unit sphere through both is
/// centered at their midpoint.
struct SingleCenter {
  Point3 center;
  friend bool operator==(const SingleCenter&, const SingleCenter&) = default;
};
using CenterLocus = std::variant<Circle3, NoIntersection, SingleCenter>;

/// Locus of centers of unit spheres through p and q: the circle centered at
/// (p+q)/2 in the bisector plane, of squared radius 1 - |p-q|^2/4.
/// Throws CoincidentPoints when p == q.
CenterLocus center_locus_circle(const Point3& p, const Point3& q);

/// For each q in `centers` and each nonzero squared distance d of the census,
/// the sphere (q, d). Throws InvalidInput for a census without nonzero distances.
SphereSet reduction_spheres_for_distinct(const PointSet& centers, const DistanceCensus& census);

}  // namespace sphinc
