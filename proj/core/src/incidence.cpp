#include "sphinc/incidence.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>

#include "sphinc/error.hpp"
#include "sphinc/parallel.hpp"

namespace sphinc {

namespace {

template <class T>
void reject_duplicates(const std::vector<T>& items, const char* what) {
  std::vector<std::size_t> order(items.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return items[a] < items[b]; });
  for (std::size_t i = 1; i < order.size(); ++i)
    if (items[order[i - 1]] == items[order[i]])
      throw Error(ErrorKind::DuplicateEntry, std::string("duplicate ") + what + " at indices " +
                                                 std::to_string(std::min(order[i - 1], order[i])) + " and " +
                                                 std::to_string(std::max(order[i - 1], order[i])));
}

void sort_unique(std::vector<Edge>& edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

struct CellKey {
  long x, y, z;
  friend bool operator==(const CellKey&, const CellKey&) = default;
};

struct CellHash {
  std::size_t operator()(const CellKey& k) const noexcept {
    std::size_t h = static_cast<std::size_t>(k.x) * 0x9E3779B97F4A7C15ull;
    h ^= static_cast<std::size_t>(k.y) + 0x7F4A7C159E3779B9ull + (h << 6) + (h >> 2);
    h ^= static_cast<std::size_t>(k.z) + 0x94D049BB133111EBull + (h << 6) + (h >> 2);
    return h;
  }
};

/// 2^k as a rational (k may be negative).
Rational pow2(int k) {
  mpz_class v = 1;
  mpz_mul_2exp(v.get_mpz_t(), v.get_mpz_t(), static_cast<mp_bitcnt_t>(std::abs(k)));
  return k >= 0 ? Rational(v) : Rational(mpz_class(1), v);
}

/// Smallest k with 4^k >= radius_sq.
int radius_scale(const Rational& radius_sq) {
  const double approx = radius_sq.to_double();
  int k = 0;
  if (std::isfinite(approx) && approx > 0) k = static_cast<int>(std::ceil(std::log2(approx) / 2));
  while (pow2(2 * k) < radius_sq) ++k;
  while (pow2(2 * (k - 1)) >= radius_sq) --k;
  return k;
}

std::optional<long> floor_scaled(const Rational& v, const Rational& inv_side) {
  const mpz_class f = (v * inv_side).floor();
  if (!mpz_fits_slong_p(f.get_mpz_t())) return std::nullopt;
  return f.get_si();
}

std::optional<CellKey> cell_of(const Point3& p, const Rational& inv_side) {
  auto x = floor_scaled(p.x, inv_side);
  auto y = floor_scaled(p.y, inv_side);
  auto z = floor_scaled(p.z, inv_side);
  if (!x || !y || !z) return std::nullopt;
  return CellKey{*x, *y, *z};
}

/// Whether the sphere's shell can meet the closed box of `cell`.
bool shell_meets_cell(const Sphere& s, const CellKey& cell, const Rational& side) {
  const long idx[3] = {cell.x, cell.y, cell.z};
  Rational near_sq, far_sq;
  for (std::size_t i = 0; i < 3; ++i) {
    const Rational lo = Rational(idx[i]) * side;
    const Rational hi = lo + side;
    const Rational& c = s.center()[i];
    Rational near_d;
    if (c < lo) near_d = lo - c;
    else if (c > hi) near_d = c - hi;
    const Rational far_d = std::max(abs(c - lo), abs(c - hi));
    near_sq += near_d * near_d;
    far_sq += far_d * far_d;
  }
  return near_sq <= s.radius_sq() && s.radius_sq() <= far_sq;
}

__extension__ using i128 = __int128;

// Exact incidence test on integers: coordinates multiplied by the common
// denominator L of all points and centers, radii squared by L^2. A sphere whose
// scaled radius is not an integer meets no point.
struct ScaledIncidence {
  std::vector<std::array<std::int64_t, 3>> points, centers;
  std::vector<std::optional<i128>> radius_sq;

  bool incident(std::size_t i, std::size_t j) const {
    if (!radius_sq[j]) return false;
    i128 acc = 0;
    for (std::size_t k = 0; k < 3; ++k) {
      const i128 d = static_cast<i128>(points[i][k]) - centers[j][k];
      acc += d * d;
    }
    return acc == *radius_sq[j];
  }
};

std::optional<ScaledIncidence> try_scale(const PointSet& points, const SphereSet& spheres) {
  constexpr long kLimit = 1L << 60;
  mpz_class l = 1;
  for (const Point3& p : points)
    for (std::size_t k = 0; k < 3; ++k) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), p[k].get().get_den_mpz_t());
  for (const Sphere& s : spheres)
    for (std::size_t k = 0; k < 3; ++k)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), s.center()[k].get().get_den_mpz_t());
  const auto scale = [&](const Point3& p) -> std::optional<std::array<std::int64_t, 3>> {
    std::array<std::int64_t, 3> out{};
    for (std::size_t k = 0; k < 3; ++k) {
      const mpz_class v = p[k].get().get_num() * (l / p[k].get().get_den());
      if (!mpz_fits_slong_p(v.get_mpz_t()) || abs(v) > kLimit) return std::nullopt;
      out[k] = v.get_si();
    }
    return out;
  };
  ScaledIncidence s;
  for (const Point3& p : points) {
    auto v = scale(p);
    if (!v) return std::nullopt;
    s.points.push_back(*v);
  }
  const mpq_class l2 = mpq_class(l * l);
  for (const Sphere& sp : spheres) {
    auto v = scale(sp.center());
    if (!v) return std::nullopt;
    s.centers.push_back(*v);
    const mpq_class r = sp.radius_sq().get() * l2;
    // Any incidence needs r <= 3 (2^61)^2 < 2^124.
    if (r.get_den() != 1 || r.get_num() > (mpz_class(1) << 124)) {
      s.radius_sq.emplace_back();
      continue;
    }
    const mpz_class& n = r.get_num();
    const mpz_class hi = n >> 64;
    const mpz_class lo = n - (hi << 64);
    s.radius_sq.emplace_back((static_cast<i128>(hi.get_ui()) << 64) | static_cast<i128>(lo.get_ui()));
  }
  return s;
}

void probe_bruteforce(const PointSet& points, const SphereSet& spheres, std::span<const std::size_t> sphere_ids,
                      std::vector<Edge>& out) {
  for (std::size_t j : sphere_ids)
    for (std::size_t i = 0; i < points.size(); ++i)
      if (on_sphere(points[i], spheres[j]))
        out.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)});
}

}  // namespace

PointSet::PointSet(std::vector<Point3> points) : points_(std::move(points)) {
  reject_duplicates(points_, "point");
}

SphereSet::SphereSet(std::vector<Sphere> spheres) : spheres_(std::move(spheres)) {
  reject_duplicates(spheres_, "sphere");
}

IncidenceGraph::IncidenceGraph(std::size_t m, std::size_t n, std::vector<Edge> edges)
    : m_(m), n_(n), edges_(std::move(edges)) {
  sort_unique(edges_);
  if (!edges_.empty() && (edges_.back().point >= m_ ||
                          std::any_of(edges_.begin(), edges_.end(), [&](const Edge& e) { return e.sphere >= n_; })))
    throw Error(ErrorKind::InvalidInput, "edge index out of range");
}

bool IncidenceGraph::contains(const Edge& e) const { return std::binary_search(edges_.begin(), edges_.end(), e); }

std::vector<std::vector<std::uint32_t>> IncidenceGraph::spheres_by_point() const {
  std::vector<std::vector<std::uint32_t>> adj(m_);
  for (const Edge& e : edges_) adj[e.point].push_back(e.sphere);
  return adj;
}

std::vector<std::vector<std::uint32_t>> IncidenceGraph::points_by_sphere() const {
  std::vector<std::vector<std::uint32_t>> adj(n_);
  for (const Edge& e : edges_) adj[e.sphere].push_back(e.point);
  return adj;
}

IncidenceGraph incidences_bruteforce(const PointSet& points, const SphereSet& spheres, const IncidenceOptions& opts) {
  const unsigned workers = resolve_threads(opts.threads);
  std::vector<std::vector<Edge>> local(workers);
  parallel_stripes(spheres.size(), opts.threads, [&](std::size_t begin, std::size_t end, unsigned w) {
    for (std::size_t j = begin; j < end; ++j)
      for (std::size_t i = 0; i < points.size(); ++i)
        if (on_sphere(points[i], spheres[j]))
          local[w].push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)});
  });
  std::vector<Edge> edges;
  for (auto& l : local) edges.insert(edges.end(), l.begin(), l.end());
  return IncidenceGraph(points.size(), spheres.size(), std::move(edges));
}

IncidenceGraph incidences_bucketed(const PointSet& points, const SphereSet& spheres, const IncidenceOptions& opts) {
  std::map<int, std::vector<std::size_t>> by_scale;
  for (std::size_t j = 0; j < spheres.size(); ++j) by_scale[radius_scale(spheres[j].radius_sq())].push_back(j);

  std::vector<Edge> edges;
  const unsigned workers = resolve_threads(opts.threads);
  const std::optional<ScaledIncidence> fast = try_scale(points, spheres);
  for (const auto& [scale, ids] : by_scale) {
    const Rational side = pow2(scale);
    const Rational inv_side = pow2(-scale);

    std::unordered_map<CellKey, std::vector<std::uint32_t>, CellHash> grid;
    bool representable = true;
    for (std::size_t i = 0; i < points.size() && representable; ++i) {
      auto cell = cell_of(points[i], inv_side);
      if (!cell) representable = false;
      else grid[*cell].push_back(static_cast<std::uint32_t>(i));
    }
    if (!representable) {
      // Cell indices overflow a machine word at this scale.
      probe_bruteforce(points, spheres, ids, edges);
      continue;
    }

    std::vector<std::vector<Edge>> local(workers);
    parallel_stripes(ids.size(), opts.threads, [&](std::size_t begin, std::size_t end, unsigned w) {
      for (std::size_t t = begin; t < end; ++t) {
        const std::size_t j = ids[t];
        const Sphere& s = spheres[j];
        const auto home = cell_of(s.center(), inv_side);
        if (!home) {
          probe_bruteforce(points, spheres, std::span<const std::size_t>(&ids[t], 1), local[w]);
          continue;
        }
        for (long dx = -1; dx <= 1; ++dx)
          for (long dy = -1; dy <= 1; ++dy)
            for (long dz = -1; dz <= 1; ++dz) {
              const CellKey cell{home->x + dx, home->y + dy, home->z + dz};
              auto it = grid.find(cell);
              if (it == grid.end() || (!fast && !shell_meets_cell(s, cell, side))) continue;
              for (std::uint32_t i : it->second)
                if (fast ? fast->incident(i, j) : on_sphere(points[i], s))
                  local[w].push_back({i, static_cast<std::uint32_t>(j)});
            }
      }
    });
    for (auto& l : local) edges.insert(edges.end(), l.begin(), l.end());
  }
  return IncidenceGraph(points.size(), spheres.size(), std::move(edges));
}

IncidenceGraph unit_incidences(const PointSet& points, const PointSet& centers, const IncidenceOptions& opts) {
  std::vector<Sphere> spheres;
  spheres.reserve(centers.size());
  for (const Point3& c : centers) spheres.emplace_back(c, Rational(1));
  return incidences_bucketed(points, SphereSet(std::move(spheres)), opts);
}

std::vector<Edge> unverified_edges(const IncidenceGraph& g, const PointSet& points, const SphereSet& spheres) {
  std::vector<Edge> bad;
  for (const Edge& e : g.edges())
    if (e.point >= points.size() || e.sphere >= spheres.size() || !on_sphere(points[e.point], spheres[e.sphere]))
      bad.push_back(e);
  return bad;
}

std::optional<K33Witness> contains_k33(const IncidenceGraph& g, std::size_t limit) {
  if (g.num_points() > limit || g.num_spheres() > limit)
    throw Error(ErrorKind::SizeGuard, "contains_k33 limited to " + std::to_string(limit) + " points and spheres");
  const std::size_t words = (g.num_points() + 63) / 64;
  const auto adj = g.points_by_sphere();
  std::vector<std::size_t> rich;
  std::vector<std::vector<std::uint64_t>> bits(g.num_spheres());
  for (std::size_t j = 0; j < adj.size(); ++j) {
    if (adj[j].size() < 3) continue;
    rich.push_back(j);
    bits[j].assign(words, 0);
    for (std::uint32_t i : adj[j]) bits[j][i / 64] |= std::uint64_t{1} << (i % 64);
  }

  std::vector<std::uint64_t> pair(words), triple(words);
  auto count = [](const std::vector<std::uint64_t>& v) {
    std::size_t c = 0;
    for (std::uint64_t w : v) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  };
  for (std::size_t a = 0; a < rich.size(); ++a)
    for (std::size_t b = a + 1; b < rich.size(); ++b) {
      for (std::size_t w = 0; w < words; ++w) pair[w] = bits[rich[a]][w] & bits[rich[b]][w];
      if (count(pair) < 3) continue;
      for (std::size_t c = b + 1; c < rich.size(); ++c) {
        for (std::size_t w = 0; w < words; ++w) triple[w] = pair[w] & bits[rich[c]][w];
        if (count(triple) < 3) continue;
        K33Witness wit{};
        wit.spheres = {static_cast<std::uint32_t>(rich[a]), static_cast<std::uint32_t>(rich[b]),
                       static_cast<std::uint32_t>(rich[c])};
        std::size_t found = 0;
        for (std::size_t w = 0; w < words && found < 3; ++w)
          for (std::uint64_t v = triple[w]; v != 0 && found < 3; v &= v - 1)
            wit.points[found++] = static_cast<std::uint32_t>(w * 64 + static_cast<std::size_t>(std::countr_zero(v)));
        return wit;
      }
    }
  return std::nullopt;
}

}  // namespace sphinc
