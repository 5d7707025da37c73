#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sphinc/geometry.hpp"
#include "sphinc/incidence.hpp"
#include "sphinc/polynomial.hpp"

namespace sphinc {

/// A rich circle c with P_c = P ∩ c and S_c = {s in S : c ⊆ s}.
///
/// The block contributes P_c × S_c to the decomposition, except for the
/// `excluded` pairs, which an earlier block (in canonical circle order)
/// already owns. Excluded pairs only arise when two admitted circles share
/// both a point and a containing sphere.
struct RichCircleBlock {
  Circle3 circle;
  std::vector<std::uint32_t> points;
  std::vector<std::uint32_t> spheres;
  std::vector<Edge> excluded;

  std::size_t full_size() const noexcept { return points.size() * spheres.size(); }
  std::size_t owned_size() const noexcept { return full_size() - excluded.size(); }
  /// P_c × S_c minus `excluded`, sorted.
  std::vector<Edge> owned_edges() const;
};

struct Decomposition {
  std::vector<Edge> residual;  // G_0, sorted
  std::vector<RichCircleBlock> blocks;  // canonical circle order

  std::size_t sum_points() const;
  std::size_t sum_spheres() const;
  /// Σ |P_c| · |S_c|
  std::size_t sum_products() const;
};

struct EnumerationLimits {
  std::size_t max_sphere_pairs = 5'000'000;
  std::size_t max_point_triples = 5'000'000;
  unsigned threads = 1;
};

/// True iff the points of P on s are cocircular (vacuous for three or fewer).
bool strongly_degenerate(const Sphere& s, const PointSet& points);

/// The circle carrying all points of P on a strongly degenerate sphere.
/// Throws TooFewPoints for fewer than three incident points and NotDegenerate
/// when they are not cocircular.
Circle3 degenerate_replacement_circle(const Sphere& s, const PointSet& points);

/// Indices of three points q, q', q'' of (P \ {p}) ∩ s with p, q, q', q'' not
/// cocircular; nullopt when s is strongly degenerate or holds fewer than four
/// points of P. Throws NotIncident when p is not on s.
std::optional<std::array<std::uint32_t, 3>> quadruple_witness(const Point3& p, const Sphere& s,
                                                              const PointSet& points);

/// Candidate circles that meet P and lie in some sphere of S: circles cut by
/// two spheres sharing a point of P, and circles through three points of P on
/// one sphere. Deduplicated, in canonical order, optionally restricted to
/// circles contained in `variety`. Throws SizeGuard when a budget is exceeded.
std::vector<Circle3> enumerate_rich_circles(const PointSet& points, const SphereSet& spheres,
                                            const SurfacePoly* variety = nullptr,
                                            const EnumerationLimits& limits = {});

inline constexpr std::size_t kDefaultThetaPoints = 2;
inline constexpr std::size_t kDefaultThetaSpheres = 2;

/// G(P,S) = G_0 ∪ ⋃ (P_c × S_c) over rich circles with |P_c| >= theta_points
/// and |S_c| >= theta_spheres. Each incidence covered by an admitted circle
/// belongs to the first such circle in canonical order; the rest form G_0.
Decomposition decompose(const PointSet& points, const SphereSet& spheres, const SurfacePoly* variety = nullptr,
                        std::size_t theta_points = kDefaultThetaPoints,
                        std::size_t theta_spheres = kDefaultThetaSpheres, const EnumerationLimits& limits = {});

struct MultiplicitySplit {
  std::vector<RichCircleBlock> light;  // |S_c| <= mu0
  std::vector<RichCircleBlock> heavy;  // |S_c| > mu0
  std::size_t mu0 = 0;
};

/// floor(n^(1/4)), computed exactly.
std::size_t multiplicity_threshold(std::size_t n);

MultiplicitySplit multiplicity_filter(std::vector<RichCircleBlock> blocks, std::size_t n);

struct Violation {
  std::string kind;
  std::string detail;
};

struct VerificationReport {
  std::vector<Violation> violations;
  std::size_t incidences = 0;  // I(P,S) from the brute-force oracle
  std::size_t residual_size = 0;
  std::size_t sum_points = 0;
  std::size_t sum_spheres = 0;
  std::size_t sum_products = 0;
  std::vector<std::size_t> circles_per_point;
  std::vector<std::size_t> circles_per_sphere;

  bool ok() const noexcept { return violations.empty(); }
};

/// Re-derives G(P,S) by brute force and checks the edge partition, block
/// exactness, circle distinctness and (when given) containment in V.
VerificationReport verify_decomposition(const Decomposition& d, const PointSet& points, const SphereSet& spheres,
                                        const SurfacePoly* variety = nullptr);

/// Surface bounds on a verified report: every sphere holds at most `degree`
/// block circles, and all but `popular_allowance` points lie on at most
/// 44·degree² block circles.
std::vector<Violation> check_circle_bounds(const VerificationReport& report, int degree,
                                           std::size_t popular_allowance = 2);

}  // namespace sphinc
