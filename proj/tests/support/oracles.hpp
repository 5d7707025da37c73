#pragma once

// Independent reference computations. Each one reaches its answer by a route
// that shares no code with the library routine it checks.

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "sphinc/geometry.hpp"
#include "sphinc/incidence.hpp"

namespace oracle {

using sphinc::Point3;
using sphinc::Rational;

using Mat3 = std::array<std::array<Rational, 3>, 3>;

inline Rational det3(const Mat3& a) {
  return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
         a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

/// Cramer's rule; nullopt for a singular system.
inline std::optional<std::array<Rational, 3>> solve3(const Mat3& a, const std::array<Rational, 3>& b) {
  const Rational d = det3(a);
  if (d.is_zero()) return std::nullopt;
  std::array<Rational, 3> x;
  for (std::size_t col = 0; col < 3; ++col) {
    Mat3 m = a;
    for (std::size_t row = 0; row < 3; ++row) m[row][col] = b[row];
    x[col] = det3(m) / d;
  }
  return x;
}

inline Rational sq(const Rational& v) { return v * v; }

inline Rational dist2(const Point3& p, const Point3& q) { return sq(p.x - q.x) + sq(p.y - q.y) + sq(p.z - q.z); }

/// Center of the circle through p, q, r: the point of their plane equidistant
/// from all three, as the solution of a 3x3 linear system.
inline std::optional<Point3> circumcenter(const Point3& p, const Point3& q, const Point3& r) {
  const Rational ux = q.x - p.x, uy = q.y - p.y, uz = q.z - p.z;
  const Rational vx = r.x - p.x, vy = r.y - p.y, vz = r.z - p.z;
  const Rational nx = uy * vz - uz * vy, ny = uz * vx - ux * vz, nz = ux * vy - uy * vx;
  const auto n2 = [](const Point3& a) { return sq(a.x) + sq(a.y) + sq(a.z); };
  Mat3 a{{{Rational(2) * ux, Rational(2) * uy, Rational(2) * uz},
          {Rational(2) * vx, Rational(2) * vy, Rational(2) * vz},
          {nx, ny, nz}}};
  std::array<Rational, 3> b{n2(q) - n2(p), n2(r) - n2(p), nx * p.x + ny * p.y + nz * p.z};
  auto x = solve3(a, b);
  if (!x) return std::nullopt;
  return Point3{(*x)[0], (*x)[1], (*x)[2]};
}

/// Cocircularity by explicit construction: coplanar with and equidistant from
/// the circumcenter of the first non-collinear triple.
inline bool cocircular(std::vector<Point3> pts) {
  std::set<Point3> uniq(pts.begin(), pts.end());
  pts.assign(uniq.begin(), uniq.end());
  if (pts.size() <= 2) return true;
  for (std::size_t i = 1; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      auto c = circumcenter(pts[0], pts[i], pts[j]);
      if (!c) continue;
      const Rational r2 = dist2(*c, pts[0]);
      Mat3 basis;
      for (const Point3& p : pts) {
        basis = {{{pts[i].x - pts[0].x, pts[i].y - pts[0].y, pts[i].z - pts[0].z},
                  {pts[j].x - pts[0].x, pts[j].y - pts[0].y, pts[j].z - pts[0].z},
                  {p.x - pts[0].x, p.y - pts[0].y, p.z - pts[0].z}}};
        if (!det3(basis).is_zero() || dist2(*c, p) != r2) return false;
      }
      return true;
    }
  return false;  // all collinear
}

/// Number of distinct nonzero squared distances among integer points.
inline std::size_t distinct_sq_distances_int(const std::vector<std::array<long, 3>>& pts) {
  std::set<long> seen;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      long d = 0;
      for (int a = 0; a < 3; ++a) d += (pts[i][a] - pts[j][a]) * (pts[i][a] - pts[j][a]);
      seen.insert(d);
    }
  seen.erase(0);
  return seen.size();
}

inline std::vector<std::array<long, 3>> int_grid(long k) {
  std::vector<std::array<long, 3>> out;
  for (long x = 0; x < k; ++x)
    for (long y = 0; y < k; ++y)
      for (long z = 0; z < k; ++z) out.push_back({x, y, z});
  return out;
}

/// K_{3,3} by exhaustive search over sphere triples.
inline bool has_k33(const sphinc::IncidenceGraph& g) {
  const auto by_sphere = g.points_by_sphere();
  const std::size_t n = by_sphere.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c) {
        std::size_t common = 0;
        for (std::uint32_t p : by_sphere[a]) {
          const auto in = [p](const std::vector<std::uint32_t>& v) {
            for (std::uint32_t q : v)
              if (q == p) return true;
            return false;
          };
          if (in(by_sphere[b]) && in(by_sphere[c])) ++common;
        }
        if (common >= 3) return true;
      }
  return false;
}

/// Least-squares slope of log y against log x, written out in closed form.
inline double loglog_slope(const std::vector<std::pair<double, double>>& rows) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [x, y] : rows) {
    const double lx = std::log(x), ly = std::log(y);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double k = static_cast<double>(rows.size());
  return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

}  // namespace oracle
