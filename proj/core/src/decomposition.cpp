#include "sphinc/decomposition.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

#include "sphinc/error.hpp"

namespace sphinc {

namespace {

std::vector<std::uint32_t> incident_points(const Sphere& s, const PointSet& points) {
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < points.size(); ++i)
    if (on_sphere(points[i], s)) out.push_back(static_cast<std::uint32_t>(i));
  return out;
}

std::vector<Point3> gather(const PointSet& points, const std::vector<std::uint32_t>& ids) {
  std::vector<Point3> out;
  out.reserve(ids.size());
  for (std::uint32_t i : ids) out.push_back(points[i]);
  return out;
}

struct EdgeHash {
  std::size_t operator()(const Edge& e) const noexcept {
    return (static_cast<std::size_t>(e.point) << 32) ^ static_cast<std::size_t>(e.sphere);
  }
};

/// Candidate circle -> index of one sphere of S containing it.
using CandidateMap = std::map<Circle3, std::uint32_t>;

CandidateMap collect_candidates(const PointSet& points, const SphereSet& spheres, const IncidenceGraph& g,
                                const SurfacePoly* variety, const EnumerationLimits& limits) {
  CandidateMap found;

  // (a) circles s_i ∩ s_j for sphere pairs sharing a point of P.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  std::size_t budget = 0;
  for (const auto& list : g.spheres_by_point()) {
    budget += list.size() * (list.size() - (list.empty() ? 0 : 1)) / 2;
    if (budget > limits.max_sphere_pairs)
      throw Error(ErrorKind::SizeGuard, "sphere-pair budget of " + std::to_string(limits.max_sphere_pairs) +
                                            " exceeded");
    for (std::size_t a = 0; a < list.size(); ++a)
      for (std::size_t b = a + 1; b < list.size(); ++b) pairs.emplace_back(list[a], list[b]);
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  for (const auto& [a, b] : pairs) {
    auto cut = sphere_pair_circle(spheres[a], spheres[b]);
    if (const auto* c = std::get_if<Circle3>(&cut)) found.try_emplace(*c, a);
  }

  // (b) circles through three points of P on one sphere.
  const auto by_sphere = g.points_by_sphere();
  budget = 0;
  for (const auto& list : by_sphere) {
    const std::size_t k = list.size();
    if (k >= 3) budget += k * (k - 1) * (k - 2) / 6;
    if (budget > limits.max_point_triples)
      throw Error(ErrorKind::SizeGuard, "point-triple budget of " + std::to_string(limits.max_point_triples) +
                                            " exceeded");
  }
  for (std::size_t j = 0; j < by_sphere.size(); ++j) {
    const auto& list = by_sphere[j];
    for (std::size_t a = 0; a < list.size(); ++a)
      for (std::size_t b = a + 1; b < list.size(); ++b) {
        std::vector<Circle3> through_ab;
        for (std::size_t c = b + 1; c < list.size(); ++c) {
          const Point3& r = points[list[c]];
          if (std::any_of(through_ab.begin(), through_ab.end(), [&](const Circle3& k) { return k.contains(r); }))
            continue;
          // Three distinct points on a sphere are never collinear.
          through_ab.push_back(circle_through(points[list[a]], points[list[b]], r));
          found.try_emplace(through_ab.back(), static_cast<std::uint32_t>(j));
        }
      }
  }

  if (variety != nullptr)
    std::erase_if(found, [&](const auto& kv) { return !circle_in_variety(kv.first, *variety); });
  return found;
}

RichCircleBlock assemble_block(const Circle3& c, std::uint32_t witness_sphere, const PointSet& points,
                               const SphereSet& spheres, const std::vector<std::vector<std::uint32_t>>& by_sphere,
                               const std::vector<std::vector<std::uint32_t>>& by_point) {
  RichCircleBlock block{c, {}, {}, {}};
  // Points on c lie on every sphere containing c, in particular the witness.
  for (std::uint32_t i : by_sphere[witness_sphere])
    if (c.contains(points[i])) block.points.push_back(i);
  if (!block.points.empty())
    for (std::uint32_t j : by_point[block.points.front()])
      if (circle_in_sphere(c, spheres[j])) block.spheres.push_back(j);
  return block;
}

}  // namespace

std::vector<Edge> RichCircleBlock::owned_edges() const {
  std::vector<Edge> out;
  out.reserve(owned_size());
  for (std::uint32_t i : points)
    for (std::uint32_t j : spheres) {
      const Edge e{i, j};
      if (!std::binary_search(excluded.begin(), excluded.end(), e)) out.push_back(e);
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t Decomposition::sum_points() const {
  std::size_t s = 0;
  for (const auto& b : blocks) s += b.points.size();
  return s;
}

std::size_t Decomposition::sum_spheres() const {
  std::size_t s = 0;
  for (const auto& b : blocks) s += b.spheres.size();
  return s;
}

std::size_t Decomposition::sum_products() const {
  std::size_t s = 0;
  for (const auto& b : blocks) s += b.full_size();
  return s;
}

bool strongly_degenerate(const Sphere& s, const PointSet& points) {
  const auto on = gather(points, incident_points(s, points));
  return cocircular(on);
}

Circle3 degenerate_replacement_circle(const Sphere& s, const PointSet& points) {
  const auto on = gather(points, incident_points(s, points));
  if (on.size() < 3)
    throw Error(ErrorKind::TooFewPoints, "sphere carries " + std::to_string(on.size()) + " points of P, need 3");
  auto c = common_circle(on);
  if (!c) throw Error(ErrorKind::NotDegenerate, "incident points are not cocircular");
  return *c;
}

std::optional<std::array<std::uint32_t, 3>> quadruple_witness(const Point3& p, const Sphere& s,
                                                              const PointSet& points) {
  if (!on_sphere(p, s)) throw Error(ErrorKind::NotIncident, "point is not on the sphere");
  const auto on = incident_points(s, points);
  if (on.size() < 4) return std::nullopt;
  std::vector<std::uint32_t> others;
  for (std::uint32_t i : on)
    if (points[i] != p) others.push_back(i);
  // For p outside P, the base circle below need not carry P ∩ s.
  if (others.size() == on.size() && cocircular(gather(points, on))) return std::nullopt;
  const Circle3 base = circle_through(p, points[others[0]], points[others[1]]);
  // If every other point is on `base`, all of P ∩ s is cocircular.
  for (std::size_t k = 2; k < others.size(); ++k)
    if (!base.contains(points[others[k]])) return std::array<std::uint32_t, 3>{others[0], others[1], others[k]};
  return std::nullopt;
}

std::vector<Circle3> enumerate_rich_circles(const PointSet& points, const SphereSet& spheres,
                                            const SurfacePoly* variety, const EnumerationLimits& limits) {
  const IncidenceGraph g = incidences_bucketed(points, spheres, {limits.threads});
  std::vector<Circle3> out;
  for (auto& [c, witness] : collect_candidates(points, spheres, g, variety, limits)) out.push_back(c);
  return out;
}

Decomposition decompose(const PointSet& points, const SphereSet& spheres, const SurfacePoly* variety,
                        std::size_t theta_points, std::size_t theta_spheres, const EnumerationLimits& limits) {
  if (theta_points < 1 || theta_spheres < 1)
    throw Error(ErrorKind::InvalidInput, "block thresholds must be at least 1");
  const IncidenceGraph g = incidences_bucketed(points, spheres, {limits.threads});
  const auto by_sphere = g.points_by_sphere();
  const auto by_point = g.spheres_by_point();

  Decomposition d;
  std::unordered_set<Edge, EdgeHash> claimed;
  for (const auto& [c, witness] : collect_candidates(points, spheres, g, variety, limits)) {
    RichCircleBlock block = assemble_block(c, witness, points, spheres, by_sphere, by_point);
    if (block.points.size() < theta_points || block.spheres.size() < theta_spheres) continue;
    for (std::uint32_t i : block.points)
      for (std::uint32_t j : block.spheres)
        if (!claimed.insert({i, j}).second) block.excluded.push_back({i, j});
    std::sort(block.excluded.begin(), block.excluded.end());
    d.blocks.push_back(std::move(block));
  }
  for (const Edge& e : g.edges())
    if (!claimed.contains(e)) d.residual.push_back(e);
  return d;
}

std::size_t multiplicity_threshold(std::size_t n) {
  return integer_root(mpz_class(static_cast<unsigned long>(n)), 4).get_ui();
}

MultiplicitySplit multiplicity_filter(std::vector<RichCircleBlock> blocks, std::size_t n) {
  MultiplicitySplit split;
  split.mu0 = multiplicity_threshold(n);
  for (auto& b : blocks) (b.spheres.size() <= split.mu0 ? split.light : split.heavy).push_back(std::move(b));
  return split;
}

VerificationReport verify_decomposition(const Decomposition& d, const PointSet& points, const SphereSet& spheres,
                                        const SurfacePoly* variety) {
  VerificationReport r;
  auto flag = [&r](std::string kind, std::string detail) { r.violations.push_back({std::move(kind), std::move(detail)}); };
  auto edge_str = [](const Edge& e) { return "(" + std::to_string(e.point) + "," + std::to_string(e.sphere) + ")"; };

  const IncidenceGraph g = incidences_bruteforce(points, spheres);
  r.incidences = g.size();
  r.residual_size = d.residual.size();
  r.sum_points = d.sum_points();
  r.sum_spheres = d.sum_spheres();
  r.sum_products = d.sum_products();
  r.circles_per_point.assign(points.size(), 0);
  r.circles_per_sphere.assign(spheres.size(), 0);

  std::map<Edge, std::size_t> cover;
  for (const Edge& e : d.residual) ++cover[e];

  for (std::size_t b = 0; b < d.blocks.size(); ++b) {
    const RichCircleBlock& block = d.blocks[b];
    const std::string tag = "block " + std::to_string(b);
    if (b > 0 && !(d.blocks[b - 1].circle < block.circle))
      flag("circle_order", tag + " is not strictly after its predecessor in canonical order");

    std::vector<std::uint32_t> expect_points, expect_spheres;
    for (std::size_t i = 0; i < points.size(); ++i)
      if (block.circle.contains(points[i])) expect_points.push_back(static_cast<std::uint32_t>(i));
    for (std::size_t j = 0; j < spheres.size(); ++j)
      if (circle_in_sphere(block.circle, spheres[j])) expect_spheres.push_back(static_cast<std::uint32_t>(j));
    if (block.points != expect_points) flag("block_points", tag + ": P_c differs from P ∩ c");
    if (block.spheres != expect_spheres) flag("block_spheres", tag + ": S_c differs from the spheres containing c");
    if (variety != nullptr && !circle_in_variety(block.circle, *variety))
      flag("block_variety", tag + ": circle is not contained in V");

    for (const Edge& e : block.excluded)
      if (!std::binary_search(block.points.begin(), block.points.end(), e.point) ||
          !std::binary_search(block.spheres.begin(), block.spheres.end(), e.sphere))
        flag("block_exclusion", tag + ": excluded pair " + edge_str(e) + " is outside P_c × S_c");
    for (const Edge& e : block.owned_edges()) ++cover[e];
    for (std::uint32_t i : block.points)
      if (i < points.size()) ++r.circles_per_point[i];
    for (std::uint32_t j : block.spheres)
      if (j < spheres.size()) ++r.circles_per_sphere[j];
  }

  for (const auto& [e, count] : cover) {
    if (!g.contains(e)) flag("edge_not_incident", edge_str(e) + " is not an incidence");
    if (count > 1) flag("edge_duplicated", edge_str(e) + " is covered " + std::to_string(count) + " times");
  }
  for (const Edge& e : g.edges())
    if (!cover.contains(e)) flag("edge_missing", edge_str(e) + " is not covered");
  return r;
}

std::vector<Violation> check_circle_bounds(const VerificationReport& report, int degree,
                                           std::size_t popular_allowance) {
  std::vector<Violation> out;
  const std::size_t per_sphere = static_cast<std::size_t>(degree);
  for (std::size_t j = 0; j < report.circles_per_sphere.size(); ++j)
    if (report.circles_per_sphere[j] > per_sphere)
      out.push_back({"sphere_circle_bound", "sphere " + std::to_string(j) + " holds " +
                                                std::to_string(report.circles_per_sphere[j]) + " block circles > D"});
  const std::size_t per_point = 44 * per_sphere * per_sphere;
  std::size_t over = 0;
  for (std::size_t c : report.circles_per_point)
    if (c > per_point) ++over;
  if (over > popular_allowance)
    out.push_back({"point_circle_bound", std::to_string(over) + " points lie on more than 44 D^2 block circles"});
  return out;
}

}  // namespace sphinc
