#pragma once

// Dense univariate polynomials over a commutative ring R (Rational, Fp,
// extension elements, or nested Poly for bivariate work). Coefficients are
// stored low-to-high and kept normalized: no zero leading coefficient.
//
// Ring ops only need +,-,*; divmod/gcd additionally require inverses of the
// divisor's leading coefficient, so they are usable over fields (or with
// monic divisors).

#include <stdexcept>
#include <string>
#include <vector>

namespace pairalg {

template <class R>
struct Poly {
  std::vector<R> c;  // c[i] multiplies v^i; empty means the zero polynomial

  Poly() = default;
  explicit Poly(std::vector<R> coeffs) : c(std::move(coeffs)) { normalize(); }
  explicit Poly(const R& constant) {
    if (!constant.is_zero()) c.push_back(constant);
  }

  void normalize() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
  }

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  bool is_constant() const { return c.size() <= 1; }

  // ring-element interface so Poly<R> can itself be a coefficient ring
  Poly zero() const { return Poly(); }
  Poly one() const {
    if (!c.empty()) return Poly(c[0].one());
    return Poly(R().one());  // usable when R carries no runtime context
  }

  const R& leading() const {
    if (c.empty()) throw std::domain_error("Poly: leading of zero");
    return c.back();
  }

  R coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c.size()))
      throw std::domain_error("Poly::coeff: needs in-range index (zero poly has none)");
    return c[static_cast<size_t>(i)];
  }

  // coeff with an explicit zero fallback; callers supply the ring context
  R coeff_or(int i, const R& zero) const {
    if (i < 0 || i >= static_cast<int>(c.size())) return zero;
    return c[static_cast<size_t>(i)];
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& a : r.c) a = -a;
    return r;
  }

  Poly operator+(const Poly& o) const {
    Poly r;
    const size_t n = std::max(c.size(), o.c.size());
    r.c.reserve(n);
    for (size_t i = 0; i < n; ++i) {
      if (i < c.size() && i < o.c.size()) r.c.push_back(c[i] + o.c[i]);
      else if (i < c.size()) r.c.push_back(c[i]);
      else r.c.push_back(o.c[i]);
    }
    r.normalize();
    return r;
  }

  Poly operator-(const Poly& o) const { return *this + (-o); }
  Poly& operator+=(const Poly& o) { *this = *this + o; return *this; }
  Poly& operator-=(const Poly& o) { *this = *this - o; return *this; }
  Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }

  Poly operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    Poly r;
    r.c.assign(c.size() + o.c.size() - 1, c[0].zero());
    for (size_t i = 0; i < c.size(); ++i)
      for (size_t j = 0; j < o.c.size(); ++j) r.c[i + j] += c[i] * o.c[j];
    r.normalize();
    return r;
  }

  Poly scaled(const R& s) const {
    Poly r = *this;
    for (auto& a : r.c) a = a * s;
    r.normalize();
    return r;
  }

  bool operator==(const Poly& o) const {
    if (c.size() != o.c.size()) return false;
    for (size_t i = 0; i < c.size(); ++i)
      if (!(c[i] == o.c[i])) return false;
    return true;
  }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  R eval(const R& x) const {
    R acc = x.zero();
    for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
  }

  Poly derivative() const {
    Poly r;
    for (size_t i = 1; i < c.size(); ++i) {
      R a = c[i];
      for (size_t k = 1; k < i; ++k) a += c[i];  // i * c[i] without an int ctor
      r.c.push_back(a);
    }
    r.normalize();
    return r;
  }

  // Substitute v -> v + t.
  Poly shifted(const R& t) const {
    if (is_zero()) return Poly();
    Poly acc;  // Horner on (v + t)
    Poly vt;
    vt.c = {t, t.one()};
    for (size_t i = c.size(); i-- > 0;) acc = acc * vt + Poly(c[i]);
    return acc;
  }

  std::string to_string() const {
    if (c.empty()) return "0";
    std::string s;
    for (size_t i = 0; i < c.size(); ++i) {
      if (i) s += ",";
      s += c[i].to_string();
    }
    return s;  // comma-separated coefficients, low-to-high
  }
};

template <class R>
Poly<R> poly_from(std::initializer_list<R> lo_to_hi) {
  return Poly<R>(std::vector<R>(lo_to_hi));
}

// Monomial v^k over the ring of `one`.
template <class R>
Poly<R> poly_monomial(int k, const R& one_elem) {
  std::vector<R> c(static_cast<size_t>(k) + 1, one_elem.zero());
  c.back() = one_elem.one();
  return Poly<R>(std::move(c));
}

// Quotient/remainder; requires the divisor's leading coefficient invertible.
template <class K>
std::pair<Poly<K>, Poly<K>> poly_divmod(const Poly<K>& a, const Poly<K>& b) {
  if (b.is_zero()) throw std::domain_error("poly_divmod: division by zero polynomial");
  Poly<K> q, r = a;
  const K lead_inv = b.leading().inv();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    int k = r.degree() - b.degree();
    K f = r.leading() * lead_inv;
    // q += f v^k ; r -= f v^k b
    if (q.degree() < k) q.c.resize(static_cast<size_t>(k) + 1, f.zero());
    q.c[static_cast<size_t>(k)] += f;
    for (size_t i = 0; i < b.c.size(); ++i)
      r.c[static_cast<size_t>(k) + i] -= f * b.c[i];
    r.normalize();
  }
  q.normalize();
  return {q, r};
}

template <class K>
Poly<K> poly_mod(const Poly<K>& a, const Poly<K>& b) { return poly_divmod(a, b).second; }

template <class K>
Poly<K> poly_monic(const Poly<K>& a) {
  if (a.is_zero()) return a;
  return a.scaled(a.leading().inv());
}

// Monic gcd over a field.
template <class K>
Poly<K> poly_gcd(Poly<K> a, Poly<K> b) {
  while (!b.is_zero()) {
    Poly<K> r = poly_mod(a, b);
    a = b;
    b = r;
  }
  return a.is_zero() ? a : poly_monic(a);
}

// Extended gcd: returns (g, s, t) with s*a + t*b = g, g monic (or zero).
template <class K>
std::tuple<Poly<K>, Poly<K>, Poly<K>> poly_ext_gcd(const Poly<K>& a, const Poly<K>& b) {
  Poly<K> r0 = a, r1 = b;
  Poly<K> s0, s1, t0, t1;
  if (!a.is_zero()) s0 = Poly<K>(a.c[0].one());
  else if (!b.is_zero()) s0 = Poly<K>(b.c[0].zero());
  if (!b.is_zero()) t1 = Poly<K>(b.c[0].one());
  else if (!a.is_zero()) t1 = Poly<K>(a.c[0].zero());
  while (!r1.is_zero()) {
    auto [q, r2] = poly_divmod(r0, r1);
    Poly<K> s2 = s0 - q * s1, t2 = t0 - q * t1;
    r0 = r1; r1 = r2;
    s0 = s1; s1 = s2;
    t0 = t1; t1 = t2;
  }
  if (!r0.is_zero()) {
    K l = r0.leading().inv();
    r0 = r0.scaled(l);
    s0 = s0.scaled(l);
    t0 = t0.scaled(l);
  }
  return {r0, s0, t0};
}

template <class K>
bool poly_is_squarefree(const Poly<K>& f) {
  if (f.degree() <= 0) return !f.is_zero();
  return poly_gcd(f, f.derivative()).degree() == 0;
}

// Standard discriminant for degrees 2 and 3 (the homogeneous/product-formula
// normalization: deg 2 gives b^2-4ac, deg 3 gives 18abcd-4b^3d+b^2c^2-4ac^3-27a^2d^2).
template <class K>
K poly_discriminant(const Poly<K>& f) {
  if (f.degree() == 2) {
    const K &c0 = f.c[0], &c1 = f.c[1], &c2 = f.c[2];
    K four = c0.one() + c0.one() + c0.one() + c0.one();
    return c1 * c1 - four * c2 * c0;
  }
  if (f.degree() == 3) {
    const K &d = f.c[0], &cc = f.c[1], &b = f.c[2], &a = f.c[3];
    K one = a.one();
    auto n = [&](int k) {
      K s = one.zero();
      for (int i = 0; i < k; ++i) s += one;
      return s;
    };
    return n(18) * a * b * cc * d - n(4) * b * b * b * d + b * b * cc * cc -
           n(4) * a * cc * cc * cc - n(27) * a * a * d * d;
  }
  throw std::domain_error("poly_discriminant: unsupported degree (need 2 or 3)");
}

}  // namespace pairalg
