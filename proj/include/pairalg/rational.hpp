#pragma once

// Exact rational scalars. Thin value wrapper over GMP's mpq_class: keeps the
// canonical reduced form (gcd(|num|,den)=1, den >= 1) and gives the uniform
// scalar interface the templated layers expect (zero()/one()/inv()/...).
// Wrapping also keeps gmpxx expression templates out of generic code.

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace pairalg {

struct Rational {
  mpq_class v;

  Rational() : v(0) {}
  Rational(long n) : v(n) {}
  Rational(const mpz_class& n) : v(n) {}
  Rational(const mpz_class& num, const mpz_class& den) : v(num, den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v.canonicalize();
  }
  explicit Rational(const mpq_class& q) : v(q) { v.canonicalize(); }

  static Rational parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(mpz_class(s));
    return Rational(mpz_class(s.substr(0, slash)), mpz_class(s.substr(slash + 1)));
  }

  mpz_class num() const { return v.get_num(); }
  mpz_class den() const { return v.get_den(); }

  Rational zero() const { return Rational(); }
  Rational one() const { return Rational(1); }
  bool is_zero() const { return v == 0; }

  Rational operator-() const { return Rational(mpq_class(-v)); }
  Rational operator+(const Rational& o) const { return Rational(mpq_class(v + o.v)); }
  Rational operator-(const Rational& o) const { return Rational(mpq_class(v - o.v)); }
  Rational operator*(const Rational& o) const { return Rational(mpq_class(v * o.v)); }
  Rational operator/(const Rational& o) const {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(mpq_class(v / o.v));
  }
  Rational& operator+=(const Rational& o) { v += o.v; return *this; }
  Rational& operator-=(const Rational& o) { v -= o.v; return *this; }
  Rational& operator*=(const Rational& o) { v *= o.v; return *this; }

  Rational inv() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    return Rational(mpq_class(1 / v));
  }

  bool operator==(const Rational& o) const { return v == o.v; }
  bool operator!=(const Rational& o) const { return v != o.v; }
  bool operator<(const Rational& o) const { return v < o.v; }

  int sign() const { return sgn(v); }
  bool is_integer() const { return v.get_den() == 1; }
  double to_double() const { return v.get_d(); }

  // "p/q" in lowest terms, "p" when q=1.
  std::string to_string() const {
    if (v.get_den() == 1) return v.get_num().get_str();
    return v.get_num().get_str() + "/" + v.get_den().get_str();
  }
};

}  // namespace pairalg
