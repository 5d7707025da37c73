#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sphinc/geometry.hpp"

namespace sphinc {

/// Indexed point list; exact duplicates are rejected with DuplicateEntry.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::vector<Point3> points);

  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }
  const Point3& operator[](std::size_t i) const { return points_[i]; }
  std::span<const Point3> span() const noexcept { return points_; }
  auto begin() const noexcept { return points_.begin(); }
  auto end() const noexcept { return points_.end(); }

 private:
  std::vector<Point3> points_;
};

/// Indexed sphere list; exact duplicates are rejected with DuplicateEntry.
class SphereSet {
 public:
  SphereSet() = default;
  explicit SphereSet(std::vector<Sphere> spheres);

  std::size_t size() const noexcept { return spheres_.size(); }
  bool empty() const noexcept { return spheres_.empty(); }
  const Sphere& operator[](std::size_t i) const { return spheres_[i]; }
  std::span<const Sphere> span() const noexcept { return spheres_; }
  auto begin() const noexcept { return spheres_.begin(); }
  auto end() const noexcept { return spheres_.end(); }

 private:
  std::vector<Sphere> spheres_;
};

struct Edge {
  std::uint32_t point;
  std::uint32_t sphere;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Bipartite incidence graph G(P, S). Edges are unique and sorted by
/// (point, sphere).
class IncidenceGraph {
 public:
  IncidenceGraph() = default;
  /// Sorts and deduplicates `edges`.
  IncidenceGraph(std::size_t m, std::size_t n, std::vector<Edge> edges);

  std::size_t num_points() const noexcept { return m_; }
  std::size_t num_spheres() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  bool contains(const Edge& e) const;

  /// Sphere indices incident to each point (ascending).
  std::vector<std::vector<std::uint32_t>> spheres_by_point() const;
  /// Point indices incident to each sphere (ascending).
  std::vector<std::vector<std::uint32_t>> points_by_sphere() const;

  friend bool operator==(const IncidenceGraph&, const IncidenceGraph&) = default;

 private:
  std::size_t m_ = 0;
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
};

struct IncidenceOptions {
  unsigned threads = 1;  // 0 = hardware concurrency
};

/// Checks every (point, sphere) pair.
IncidenceGraph incidences_bruteforce(const PointSet& points, const SphereSet& spheres,
                                     const IncidenceOptions& opts = {});

/// Same edge set as incidences_bruteforce. Spheres are grouped by dyadic
/// radius scale h = 2^k >= radius; points are bucketed in cells of side h so
/// each sphere only tests points in cells that meet its shell.
IncidenceGraph incidences_bucketed(const PointSet& points, const SphereSet& spheres,
                                   const IncidenceOptions& opts = {});

/// Incidences between `points` and unit spheres around `centers`.
IncidenceGraph unit_incidences(const PointSet& points, const PointSet& centers,
                               const IncidenceOptions& opts = {});

/// Edges of `g` that fail on_sphere; empty for a valid graph.
std::vector<Edge> unverified_edges(const IncidenceGraph& g, const PointSet& points,
                                   const SphereSet& spheres);

struct K33Witness {
  std::array<std::uint32_t, 3> points;
  std::array<std::uint32_t, 3> spheres;
};

inline constexpr std::size_t kDefaultK33Limit = 2000;

/// Finds three points and three spheres that are pairwise incident.
/// Throws SizeGuard when either side exceeds `limit`.
std::optional<K33Witness> contains_k33(const IncidenceGraph& g, std::size_t limit = kDefaultK33Limit);

}  // namespace sphinc
