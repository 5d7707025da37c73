#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <vector>

#include "sphinc/geometry.hpp"
#include "sphinc/rational.hpp"

namespace sphinc {

using Exponents = std::array<unsigned, 3>;

/// Sparse trivariate polynomial in x, y, z with rational coefficients.
/// Zero coefficients are never stored.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(const Rational& constant);
  static Polynomial variable(std::size_t index);
  static Polynomial monomial(Exponents e, const Rational& coeff);

  const std::map<Exponents, Rational>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  int total_degree() const;  // -1 for the zero polynomial
  int degree_in(std::size_t var) const;
  Rational coefficient(const Exponents& e) const;

  Rational evaluate(const Point3& p) const;

  /// Replaces variable `var` by `value` everywhere.
  Polynomial substitute(std::size_t var, const Polynomial& value) const;

  /// Remainder of division by `divisor` with respect to variable `var`.
  /// The leading coefficient of `divisor` in `var` must be a nonzero
  /// constant, so the division is exact over the rationals.
  Polynomial remainder(const Polynomial& divisor, std::size_t var) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& s);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial pow(const Polynomial& base, unsigned exponent);

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void add_term(const Exponents& e, const Rational& c);

  std::map<Exponents, Rational> terms_;
};

inline constexpr int kDefaultMaxDegree = 8;

/// The host surface V = {f = 0} of degree D.
class SurfacePoly {
 public:
  /// Throws InvalidInput for the zero polynomial or a constant, and
  /// DegreeTooHigh when the degree exceeds `max_degree`.
  explicit SurfacePoly(Polynomial poly, int max_degree = kDefaultMaxDegree);

  const Polynomial& polynomial() const noexcept { return poly_; }
  int degree() const noexcept { return degree_; }

  /// x^2 + y^2 - radius_sq
  static SurfacePoly cylinder(const Rational& radius_sq = Rational(1));
  /// (x^2+y^2+z^2+R^2-r^2)^2 - 4 R^2 (x^2+y^2), ring torus around the z-axis.
  static SurfacePoly torus(const Rational& major, const Rational& minor);

 private:
  Polynomial poly_;
  int degree_ = 0;
};

bool on_variety(const Point3& p, const SurfacePoly& v);

/// True iff V's polynomial vanishes identically on the circle. Decided by
/// eliminating the plane's pivot variable and reducing modulo the circle's
/// (irreducible) quadratic.
bool circle_in_variety(const Circle3& c, const SurfacePoly& v);

/// The quadratic |x - center|^2 - radius_sq of a sphere as a polynomial.
Polynomial sphere_polynomial(const Sphere& s);

}  // namespace sphinc
