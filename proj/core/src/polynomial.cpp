#include "sphinc/polynomial.hpp"

#include <algorithm>
#include <string>

#include "sphinc/error.hpp"

namespace sphinc {

Polynomial::Polynomial(const Rational& constant) { add_term({0, 0, 0}, constant); }

Polynomial Polynomial::variable(std::size_t index) {
  Exponents e{0, 0, 0};
  e.at(index) = 1;
  return monomial(e, Rational(1));
}

Polynomial Polynomial::monomial(Exponents e, const Rational& coeff) {
  Polynomial p;
  p.add_term(e, coeff);
  return p;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[0] + e[1] + e[2]));
  return d;
}

int Polynomial::degree_in(std::size_t var) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[var]));
  return d;
}

Rational Polynomial::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::evaluate(const Point3& p) const {
  Rational sum;
  for (const auto& [e, c] : terms_) sum += c * pow(p.x, e[0]) * pow(p.y, e[1]) * pow(p.z, e[2]);
  return sum;
}

Polynomial Polynomial::substitute(std::size_t var, const Polynomial& value) const {
  std::vector<Polynomial> powers{Polynomial(Rational(1))};
  Polynomial out;
  for (const auto& [e, c] : terms_) {
    while (powers.size() <= e[var]) powers.push_back(powers.back() * value);
    Exponents rest = e;
    rest[var] = 0;
    out += monomial(rest, c) * powers[e[var]];
  }
  return out;
}

Polynomial Polynomial::remainder(const Polynomial& divisor, std::size_t var) const {
  const int dd = divisor.degree_in(var);
  if (dd < 0) throw Error(ErrorKind::InvalidInput, "division by the zero polynomial");
  Rational lead;
  for (const auto& [e, c] : divisor.terms_) {
    if (static_cast<int>(e[var]) != dd) continue;
    if (e[0] + e[1] + e[2] != e[var])
      throw Error(ErrorKind::InvalidInput, "divisor leading coefficient is not constant");
    lead = c;
  }
  Polynomial r = *this;
  while (r.degree_in(var) >= dd) {
    // Cancel the last (largest) term whose degree in var is at least dd.
    auto it = std::find_if(r.terms_.rbegin(), r.terms_.rend(),
                           [&](const auto& t) { return static_cast<int>(t.first[var]) >= dd; });
    Exponents shift = it->first;
    shift[var] -= static_cast<unsigned>(dd);
    r -= monomial(shift, it->second / lead) * divisor;
  }
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      out.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
  return out;
}

Polynomial pow(const Polynomial& base, unsigned exponent) {
  Polynomial out(Rational(1));
  for (unsigned i = 0; i < exponent; ++i) out = out * base;
  return out;
}

SurfacePoly::SurfacePoly(Polynomial poly, int max_degree) : poly_(std::move(poly)) {
  degree_ = poly_.total_degree();
  if (degree_ < 1) throw Error(ErrorKind::InvalidInput, "surface polynomial must have degree >= 1");
  if (degree_ > max_degree)
    throw Error(ErrorKind::DegreeTooHigh,
                "degree " + std::to_string(degree_) + " exceeds cap " + std::to_string(max_degree));
}

SurfacePoly SurfacePoly::cylinder(const Rational& radius_sq) {
  const Polynomial x = Polynomial::variable(0);
  const Polynomial y = Polynomial::variable(1);
  return SurfacePoly(x * x + y * y - Polynomial(radius_sq));
}

SurfacePoly SurfacePoly::torus(const Rational& major, const Rational& minor) {
  const Polynomial x = Polynomial::variable(0);
  const Polynomial y = Polynomial::variable(1);
  const Polynomial z = Polynomial::variable(2);
  const Polynomial rho2 = x * x + y * y;
  const Polynomial inner = rho2 + z * z + Polynomial(major * major - minor * minor);
  return SurfacePoly(inner * inner - rho2 * (Rational(4) * major * major));
}

bool on_variety(const Point3& p, const SurfacePoly& v) { return v.polynomial().evaluate(p).is_zero(); }

Polynomial sphere_polynomial(const Sphere& s) {
  Polynomial q(-s.radius_sq());
  for (std::size_t i = 0; i < 3; ++i) {
    const Polynomial d = Polynomial::variable(i) - Polynomial(s.center()[i]);
    q += d * d;
  }
  return q;
}

bool circle_in_variety(const Circle3& c, const SurfacePoly& v) {
  const Plane& plane = c.plane();
  const std::size_t k = plane.pivot();
  // x_k = offset - sum_{j != k} n_j x_j
  Polynomial elim(plane.offset());
  for (std::size_t j = 0; j < 3; ++j)
    if (j != k) elim -= Polynomial::variable(j) * plane.normal()[j];

  const Polynomial f = v.polynomial().substitute(k, elim);
  const Polynomial q = sphere_polynomial(c.sphere()).substitute(k, elim);
  // The coefficient of x_var^2 in q is 1 + n_var^2, a nonzero constant.
  const std::size_t var = k == 2 ? 1 : 2;
  return f.remainder(q, var).is_zero();
}

}  // namespace sphinc
