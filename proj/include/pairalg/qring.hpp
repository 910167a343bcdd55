#pragma once

// Quotient rings K[v]/(f) with f monic: quadratic/cubic number fields over
// Rational, and F_q = F_p[v]/(f) when K = Fp. Elements share their ring
// through a shared_ptr and reduce mod f eagerly.

#include <memory>
#include <stdexcept>
#include <string>

#include "linalg.hpp"
#include "poly.hpp"

namespace pairalg {

template <class K>
struct QuotRing {
  Poly<K> modulus;  // monic, degree >= 1

  explicit QuotRing(Poly<K> f) : modulus(std::move(f)) {
    if (modulus.degree() < 1) throw std::domain_error("QuotRing: modulus must have degree >= 1");
    if (!(modulus.leading() == modulus.leading().one()))
      throw std::domain_error("QuotRing: modulus must be monic");
  }
  int degree() const { return modulus.degree(); }
};

template <class K>
using QuotRingPtr = std::shared_ptr<const QuotRing<K>>;

template <class K>
QuotRingPtr<K> make_quot_ring(Poly<K> f) {
  return std::make_shared<const QuotRing<K>>(std::move(f));
}

template <class K>
struct QRElem {
  QuotRingPtr<K> ring;
  Poly<K> rep;  // degree < ring->degree()

  QRElem() = default;
  QRElem(QuotRingPtr<K> r, Poly<K> p) : ring(std::move(r)), rep(poly_mod(std::move(p), ring->modulus)) {}

  static QRElem from_base(const QuotRingPtr<K>& r, const K& a) { return QRElem(r, Poly<K>(a)); }
  static QRElem generator(const QuotRingPtr<K>& r) {
    return QRElem(r, poly_monomial(1, r->modulus.leading()));
  }

  const K& base_one() const { return ring->modulus.leading(); }

  void check(const QRElem& o) const {
    if (ring.get() != o.ring.get() && !(ring->modulus == o.ring->modulus))
      throw std::domain_error("QRElem: ring mismatch");
  }

  QRElem zero() const { return from_base(ring, base_one().zero()); }
  QRElem one() const { return from_base(ring, base_one().one()); }
  bool is_zero() const { return rep.is_zero(); }

  // coordinate in the power basis 1, v, .., v^{d-1}
  K coord(int i) const { return rep.coeff_or(i, base_one().zero()); }
  bool is_base() const { return rep.degree() <= 0; }

  QRElem operator-() const { return QRElem(ring, -rep); }
  QRElem operator+(const QRElem& o) const { check(o); return QRElem(ring, rep + o.rep); }
  QRElem operator-(const QRElem& o) const { check(o); return QRElem(ring, rep - o.rep); }
  QRElem operator*(const QRElem& o) const { check(o); return QRElem(ring, rep * o.rep); }
  QRElem& operator+=(const QRElem& o) { *this = *this + o; return *this; }
  QRElem& operator-=(const QRElem& o) { *this = *this - o; return *this; }
  QRElem& operator*=(const QRElem& o) { *this = *this * o; return *this; }

  // Inverse via extended gcd; throws on zero divisors (reducible modulus).
  QRElem inv() const {
    auto [g, s, t] = poly_ext_gcd(rep, ring->modulus);
    if (g.degree() != 0) throw std::domain_error("QRElem: not invertible");
    return QRElem(ring, s);
  }
  QRElem operator/(const QRElem& o) const { return *this * o.inv(); }

  bool operator==(const QRElem& o) const {
    return (ring.get() == o.ring.get() || ring->modulus == o.ring->modulus) && rep == o.rep;
  }
  bool operator!=(const QRElem& o) const { return !(*this == o); }

  std::string to_string() const { return rep.is_zero() ? "0" : rep.to_string(); }
};

template <class K>
QRElem<K> qr_pow(QRElem<K> base, unsigned long long e) {
  QRElem<K> r = base.one();
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

// Matrix of multiplication by x on the power basis.
template <class K>
Matrix<K> mult_matrix(const QRElem<K>& x) {
  const int d = x.ring->degree();
  const K zero = x.base_one().zero();
  Matrix<K> m(static_cast<size_t>(d), std::vector<K>(static_cast<size_t>(d), zero));
  QRElem<K> col = x;
  const QRElem<K> gen = QRElem<K>::generator(x.ring);
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < d; ++i) m[static_cast<size_t>(i)][static_cast<size_t>(j)] = col.coord(i);
    col = col * gen;
  }
  return m;
}

template <class K>
K field_trace(const QRElem<K>& x) {
  auto m = mult_matrix(x);
  K t = m[0][0];
  for (size_t i = 1; i < m.size(); ++i) t += m[i][i];
  return t;
}

template <class K>
K field_norm(const QRElem<K>& x) {
  return det_small(mult_matrix(x));
}

// Characteristic polynomial of multiplication by x (monic, degree d <= 3).
template <class K>
Poly<K> field_charpoly(const QRElem<K>& x) {
  auto m = mult_matrix(x);
  const size_t d = m.size();
  const K one = x.base_one();
  Matrix<Poly<K>> vm(d, std::vector<Poly<K>>(d));
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) {
      Poly<K> e(-m[i][j]);
      if (i == j) e = e + poly_monomial(1, one);
      vm[i][j] = e;
    }
  return det_small(vm);
}

}  // namespace pairalg
