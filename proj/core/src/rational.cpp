#include "sphinc/rational.hpp"

#include <cctype>

#include "sphinc/error.hpp"

namespace sphinc {

namespace {

bool is_decimal_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational::Rational(long num, long den) : q_(num, den) {
  if (den == 0) throw Error(ErrorKind::InvalidInput, "zero denominator");
  q_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) : q_(num, den) {
  if (den == 0) throw Error(ErrorKind::InvalidInput, "zero denominator");
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                                : text.substr(slash + 1);
  if (!is_decimal_integer(num) || !is_decimal_integer(den) || den.front() == '-' ||
      den.front() == '+')
    throw Error(ErrorKind::ParseError, "not a rational: '" + std::string(text) + "'");
  const mpz_class d = parse_integer(den);
  if (d == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
  return Rational(parse_integer(num), d);
}

mpz_class Rational::floor() const {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

std::string Rational::to_string() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorKind::InvalidInput, "division by zero");
  q_ /= o.q_;
  return *this;
}

std::size_t Rational::hash() const noexcept {
  // FNV-style mix over the limbs of numerator and denominator.
  std::size_t h = 1469598103934665603ull;
  auto mix = [&h](mpz_srcptr z) {
    const std::size_t n = mpz_size(z);
    for (std::size_t i = 0; i < n; ++i) {
      h ^= static_cast<std::size_t>(mpz_getlimbn(z, static_cast<mp_size_t>(i)));
      h *= 1099511628211ull;
    }
    h ^= static_cast<std::size_t>(mpz_sgn(z) + 2);
    h *= 1099511628211ull;
  };
  mix(q_.get_num_mpz_t());
  mix(q_.get_den_mpz_t());
  return h;
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational pow(const Rational& base, unsigned exponent) {
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), base.get().get_num_mpz_t(), exponent);
  mpz_pow_ui(d.get_mpz_t(), base.get().get_den_mpz_t(), exponent);
  return Rational(n, d);
}

mpz_class integer_root(const mpz_class& v, unsigned k) {
  if (v < 0) throw Error(ErrorKind::InvalidInput, "integer_root of a negative value");
  mpz_class r;
  mpz_root(r.get_mpz_t(), v.get_mpz_t(), k);
  return r;
}

}  // namespace sphinc
