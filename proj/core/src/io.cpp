#include "sphinc/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "sphinc/error.hpp"

namespace sphinc::io {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(std::string("missing field '") + key + "'");
  return j.at(key);
}

const json& array_of(const json& j, std::size_t size, const char* what) {
  if (!j.is_array() || j.size() != size)
    fail(std::string(what) + " must be an array of " + std::to_string(size) + " entries");
  return j;
}

std::uint32_t index_from_json(const json& j) {
  if (!j.is_number_unsigned()) fail("index must be a non-negative integer");
  return j.get<std::uint32_t>();
}

std::vector<std::uint32_t> indices_from_json(const json& j) {
  if (!j.is_array()) fail("index list must be an array");
  std::vector<std::uint32_t> out;
  for (const auto& v : j) out.push_back(index_from_json(v));
  return out;
}

}  // namespace

json to_json(const Rational& r) { return r.to_string(); }
json to_json(const Point3& p) { return json::array({to_json(p.x), to_json(p.y), to_json(p.z)}); }
json to_json(const Sphere& s) { return {{"center", to_json(s.center())}, {"radius_sq", to_json(s.radius_sq())}}; }
json to_json(const Plane& p) { return {{"normal", to_json(p.normal())}, {"offset", to_json(p.offset())}}; }
json to_json(const Circle3& c) { return {{"plane", to_json(c.plane())}, {"sphere", to_json(c.sphere())}}; }

json to_json(const SurfacePoly& v) {
  json out = json::array();
  for (const auto& [e, c] : v.polynomial().terms())
    out.push_back({{"exponents", json::array({e[0], e[1], e[2]})}, {"coeff", to_json(c)}});
  return out;
}

json to_json(const Point4& p) {
  return json::array({to_json(p.x1), to_json(p.x2), to_json(p.x3), to_json(p.x4)});
}

json to_json(const Hyperplane4& h) {
  return {{"coefficients", json::array({to_json(h.e1), to_json(h.e2), to_json(h.e3)})}, {"constant", to_json(h.e0)}};
}

json to_json(const PointSet& points) {
  json out = json::array();
  for (const Point3& p : points) out.push_back(to_json(p));
  return out;
}

json to_json(const SphereSet& spheres) {
  json out = json::array();
  for (const Sphere& s : spheres) out.push_back(to_json(s));
  return out;
}

json to_json(const Edge& e) { return json::array({e.point, e.sphere}); }

json to_json(const RichCircleBlock& b) {
  json excluded = json::array();
  for (const Edge& e : b.excluded) excluded.push_back(to_json(e));
  return {{"circle", to_json(b.circle)}, {"points", b.points}, {"spheres", b.spheres}, {"excluded", excluded}};
}

json to_json(const Decomposition& d) {
  json blocks = json::array();
  for (const auto& b : d.blocks) blocks.push_back(to_json(b));
  json residual = json::array();
  for (const Edge& e : d.residual) residual.push_back(to_json(e));
  return {{"blocks", blocks},
          {"residual", residual},
          {"stats",
           {{"blocks", d.blocks.size()},
            {"residual_size", d.residual.size()},
            {"sum_points", d.sum_points()},
            {"sum_spheres", d.sum_spheres()},
            {"sum_products", d.sum_products()}}}};
}

json to_json(const DistanceCensus& c) {
  json hist = json::object();
  for (const auto& [d, count] : c.histogram) hist[d.to_string()] = count;
  return {{"t", c.distinct()}, {"histogram", hist}, {"zero_pairs", c.zero_pairs}, {"pairs", c.pairs()}};
}

json to_json(const VerificationReport& r) {
  json violations = json::array();
  for (const auto& v : r.violations) violations.push_back({{"kind", v.kind}, {"detail", v.detail}});
  return {{"ok", r.ok()},
          {"violations", violations},
          {"incidences", r.incidences},
          {"residual_size", r.residual_size},
          {"sum_points", r.sum_points},
          {"sum_spheres", r.sum_spheres},
          {"sum_products", r.sum_products},
          {"circles_per_point", r.circles_per_point},
          {"circles_per_sphere", r.circles_per_sphere}};
}

json to_json(const ScalingReport& r) {
  const ExperimentConfig& c = r.config;
  json config = {{"family", to_string(c.family)}, {"quantity", to_string(c.quantity)}, {"ladder", c.ladder},
                 {"seed", c.seed}, {"threads", c.threads}, {"verify", c.verify},
                 {"burn_in", c.burn_in}, {"bound_constant", c.bound_constant}};
  json rows = json::array();
  for (const ScalingRow& row : r.rows) {
    json j = {{"parameter", row.parameter}, {"n", row.n}, {"m_points", row.m_points},
              {"n_spheres", row.n_spheres}, {"value", row.value}};
    if (row.bound) j["bound"] = *row.bound;
    if (row.verified) j["verified"] = *row.verified;
    if (row.wall_ms) j["wall_ms"] = *row.wall_ms;
    rows.push_back(std::move(j));
  }
  json fit = nullptr;
  if (r.fit) fit = {{"exponent", r.fit->exponent}, {"intercept", r.fit->intercept}, {"residual", r.fit->residual}};
  return {{"config", config},
          {"rows", rows},
          {"fit", fit},
          {"reference", {{"exponent", r.reference_exponent}, {"label", r.reference_label}}},
          {"violations", r.violations},
          {"notes", r.notes}};
}

std::string to_csv(const ScalingReport& r) {
  std::ostringstream out;
  out << "parameter,n,m_points,n_spheres,value,bound,verified,wall_ms\n";
  for (const ScalingRow& row : r.rows) {
    out << row.parameter << ',' << row.n << ',' << row.m_points << ',' << row.n_spheres << ',' << row.value << ',';
    if (row.bound) out << json(*row.bound).dump();
    out << ',';
    if (row.verified) out << (*row.verified ? "true" : "false");
    out << ',';
    if (row.wall_ms) out << json(*row.wall_ms).dump();
    out << '\n';
  }
  return out.str();
}

Rational rational_from_json(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  fail("rational must be a \"num/den\" string or an integer, got " + j.dump());
}

Point3 point_from_json(const json& j) {
  const json& a = array_of(j, 3, "point");
  return {rational_from_json(a[0]), rational_from_json(a[1]), rational_from_json(a[2])};
}

Sphere sphere_from_json(const json& j) {
  return Sphere(point_from_json(field(j, "center")), rational_from_json(field(j, "radius_sq")));
}

Plane plane_from_json(const json& j) {
  return Plane(point_from_json(field(j, "normal")), rational_from_json(field(j, "offset")));
}

Circle3 circle_from_json(const json& j) {
  return Circle3::from_plane_sphere(plane_from_json(field(j, "plane")), sphere_from_json(field(j, "sphere")));
}

SurfacePoly variety_from_json(const json& j, int max_degree) {
  if (!j.is_array()) fail("variety must be an array of terms");
  Polynomial poly;
  for (const auto& term : j) {
    const json& e = array_of(field(term, "exponents"), 3, "exponents");
    Exponents ex{};
    for (std::size_t i = 0; i < 3; ++i) {
      if (!e[i].is_number_unsigned()) fail("exponents must be non-negative integers");
      ex[i] = e[i].get<unsigned>();
    }
    poly += Polynomial::monomial(ex, rational_from_json(field(term, "coeff")));
  }
  return SurfacePoly(std::move(poly), max_degree);
}

PointSet points_from_json(const json& j) {
  if (!j.is_array()) fail("point set must be an array of points");
  std::vector<Point3> pts;
  for (const auto& p : j) pts.push_back(point_from_json(p));
  return PointSet(std::move(pts));
}

SphereSet spheres_from_json(const json& j) {
  if (!j.is_array()) fail("sphere set must be an array of spheres");
  std::vector<Sphere> out;
  for (const auto& s : j) out.push_back(sphere_from_json(s));
  return SphereSet(std::move(out));
}

Edge edge_from_json(const json& j) {
  const json& a = array_of(j, 2, "edge");
  return {index_from_json(a[0]), index_from_json(a[1])};
}

Decomposition decomposition_from_json(const json& j) {
  Decomposition d;
  for (const auto& e : field(j, "residual")) d.residual.push_back(edge_from_json(e));
  for (const auto& b : field(j, "blocks")) {
    RichCircleBlock block{circle_from_json(field(b, "circle")), indices_from_json(field(b, "points")),
                          indices_from_json(field(b, "spheres")), {}};
    if (b.contains("excluded"))
      for (const auto& e : b.at("excluded")) block.excluded.push_back(edge_from_json(e));
    std::sort(block.excluded.begin(), block.excluded.end());
    d.blocks.push_back(std::move(block));
  }
  return d;
}

json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    fail(path.string() + ": " + e.what());
  }
}

void write_json(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::InvalidInput, "cannot write " + path.string());
  out << j.dump(2) << '\n';
}

}  // namespace sphinc::io
