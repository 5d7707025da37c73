#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>

namespace sphinc {

/// Exact rational number backed by GMP.
///
/// The stored value is always canonical (lowest terms, positive
/// denominator), so equality and hashing are structural.
class Rational {
 public:
  Rational() = default;
  Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(int v) : q_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(const mpz_class& v) : q_(v) {}
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  /// Parses "n", "n/d" or "-n/d" (decimal integers). Throws ParseError.
  static Rational parse(std::string_view text);

  const mpq_class& get() const noexcept { return q_; }
  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }

  int sign() const noexcept { return sgn(q_); }
  bool is_zero() const noexcept { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  /// floor(value) as a GMP integer.
  mpz_class floor() const;
  double to_double() const { return q_.get_d(); }
  std::string to_string() const;

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  std::size_t hash() const noexcept;

 private:
  mpq_class q_;
};

Rational abs(const Rational& r);
Rational pow(const Rational& base, unsigned exponent);

/// Largest integer s with s^k <= v, for v >= 0.
mpz_class integer_root(const mpz_class& v, unsigned k);

}  // namespace sphinc

template <>
struct std::hash<sphinc::Rational> {
  std::size_t operator()(const sphinc::Rational& r) const noexcept { return r.hash(); }
};
