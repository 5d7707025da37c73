#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "sphinc/decomposition.hpp"
#include "sphinc/distances.hpp"
#include "sphinc/experiment.hpp"
#include "sphinc/geometry.hpp"
#include "sphinc/incidence.hpp"
#include "sphinc/lift.hpp"
#include "sphinc/polynomial.hpp"

// JSON forms. Rationals are "num/den" strings ("3/4", "-1/2", "5"); integers
// are accepted on input. Points are 3-element arrays, spheres
// {center, radius_sq}, planes {normal, offset}, circles {plane, sphere},
// varieties lists of {exponents: [i,j,k], coeff}. All parse errors throw
// sphinc::Error with kind ParseError.
namespace sphinc::io {

using nlohmann::json;

json to_json(const Rational& r);
json to_json(const Point3& p);
json to_json(const Sphere& s);
json to_json(const Plane& p);
json to_json(const Circle3& c);
json to_json(const SurfacePoly& v);
json to_json(const Point4& p);
json to_json(const Hyperplane4& h);
json to_json(const PointSet& points);
json to_json(const SphereSet& spheres);
json to_json(const Edge& e);
json to_json(const RichCircleBlock& b);
json to_json(const Decomposition& d);
json to_json(const DistanceCensus& c);
json to_json(const VerificationReport& r);
json to_json(const ScalingReport& r);
/// Rows as CSV: parameter,n,m_points,n_spheres,value,bound,verified,wall_ms.
std::string to_csv(const ScalingReport& r);

Rational rational_from_json(const json& j);
Point3 point_from_json(const json& j);
Sphere sphere_from_json(const json& j);
Plane plane_from_json(const json& j);
Circle3 circle_from_json(const json& j);
SurfacePoly variety_from_json(const json& j, int max_degree = kDefaultMaxDegree);
PointSet points_from_json(const json& j);
SphereSet spheres_from_json(const json& j);
Edge edge_from_json(const json& j);
Decomposition decomposition_from_json(const json& j);

json read_json(const std::filesystem::path& path);
/// Writes `j` with two-space indentation and a trailing newline; key order
/// is sorted, so identical values give identical bytes.
void write_json(const std::filesystem::path& path, const json& j);

}  // namespace sphinc::io
