#pragma once

// Simple algebras D of degree n in {2,3} over Q or F_p, presented as
//   - split matrix algebras M_n(K), coordinates row-major,
//   - quaternion algebras (a,b | K): basis 1,i,j,ij with i^2=a, j^2=b, ji=-ij,
//   - cyclic cubic algebras (L/K, sigma, gamma): x = l0 + l1 u + l2 u^2 with
//     li in L = K[th]/(f_L), u^3 = gamma, u l = sigma(l) u; coordinates are
//     the th-power coordinates of l0,l1,l2 in order.
//
// Reduced trace/norm and the characteristic polynomial are computed through
// the splitting representation; for cyclic algebras the 3x3 matrix over L is
//
//        [ l0        g*l2       g*l1      ]
//        [ s2(l1)    s2(l0)     g*s2(l2)  ]      s = sigma, g = gamma,
//        [ s(l2)     s(l1)      s(l0)     ]
//
// whose determinant and trace land in the base field (checked, not assumed).

#include <array>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "linalg.hpp"
#include "poly.hpp"
#include "qring.hpp"
#include "roots.hpp"

namespace pairalg {

enum class AlgKind { SplitMatrix, Quaternion, CyclicCubic };

template <class K>
struct AlgebraDescriptor {
  AlgKind kind;
  int n = 0;  // degree: 2 or 3
  int m = 0;  // dimension n^2
  K one;      // base-field context

  // Quaternion parameters
  K qa, qb;

  // Cyclic cubic parameters
  QuotRingPtr<K> L;        // K[th]/(f_L), f_L monic cubic irreducible
  QRElem<K> sigma_image;   // sigma(th), a root of f_L distinct from th
  K gamma;                 // u^3, nonzero
};

template <class K>
using DescPtr = std::shared_ptr<const AlgebraDescriptor<K>>;

template <class K>
bool desc_equal(const AlgebraDescriptor<K>& a, const AlgebraDescriptor<K>& b) {
  if (a.kind != b.kind || a.n != b.n) return false;
  switch (a.kind) {
    case AlgKind::SplitMatrix:
      return true;
    case AlgKind::Quaternion:
      return a.qa == b.qa && a.qb == b.qb;
    case AlgKind::CyclicCubic:
      return a.L->modulus == b.L->modulus && a.sigma_image == b.sigma_image && a.gamma == b.gamma;
  }
  return false;
}

template <class K>
DescPtr<K> make_split_matrix(int n, const K& one_elem) {
  if (n != 2 && n != 3) throw std::domain_error("make_split_matrix: n must be 2 or 3");
  auto d = std::make_shared<AlgebraDescriptor<K>>();
  d->kind = AlgKind::SplitMatrix;
  d->n = n;
  d->m = n * n;
  d->one = one_elem.one();
  return d;
}

template <class K>
DescPtr<K> make_quaternion(const K& a, const K& b) {
  if (a.is_zero() || b.is_zero()) throw std::domain_error("make_quaternion: a,b must be nonzero");
  if ((a.one() + a.one()).is_zero())
    throw std::domain_error("make_quaternion: characteristic 2 base field not supported");
  auto d = std::make_shared<AlgebraDescriptor<K>>();
  d->kind = AlgKind::Quaternion;
  d->n = 2;
  d->m = 4;
  d->one = a.one();
  d->qa = a;
  d->qb = b;
  return d;
}

namespace detail {

template <class K>
QRElem<K> sigma_apply(const AlgebraDescriptor<K>& d, const QRElem<K>& l) {
  // substitute th -> sigma(th) inside L
  QRElem<K> acc = QRElem<K>::from_base(d.L, d.one.zero());
  for (size_t i = l.rep.c.size(); i-- > 0;)
    acc = acc * d.sigma_image + QRElem<K>::from_base(d.L, l.rep.c[i]);
  return acc;
}

template <class K>
Poly<QRElem<K>> sigma_apply(const AlgebraDescriptor<K>& d, const Poly<QRElem<K>>& l) {
  Poly<QRElem<K>> r = l;
  for (auto& cc : r.c) cc = sigma_apply(d, cc);
  return r;
}

// The splitting-representation matrix over L (entries of type E, which is
// QRElem<K> for scalars and Poly<QRElem<K>> for forms in one variable).
template <class K, class E>
Matrix<E> cyclic_splitting_matrix(const AlgebraDescriptor<K>& d, const std::array<E, 3>& l,
                                  const E& gamma) {
  auto s = [&](const E& e) { return sigma_apply(d, e); };
  auto s2 = [&](const E& e) { return sigma_apply(d, sigma_apply(d, e)); };
  return Matrix<E>{{l[0], gamma * l[2], gamma * l[1]},
                   {s2(l[1]), s2(l[0]), gamma * s2(l[2])},
                   {s(l[2]), s(l[1]), s(l[0])}};
}

}  // namespace detail

template <class K>
DescPtr<K> make_cyclic_cubic(const Poly<K>& f_L, const Poly<K>& sigma_rep, const K& gamma);

template <class K>
struct AlgebraElement {
  DescPtr<K> desc;
  std::vector<K> c;  // length m in the structural basis

  AlgebraElement() = default;
  AlgebraElement(DescPtr<K> d, std::vector<K> coords) : desc(std::move(d)), c(std::move(coords)) {
    if (static_cast<int>(c.size()) != desc->m)
      throw std::domain_error("AlgebraElement: coordinate length must equal the dimension");
  }

  bool is_zero() const {
    for (auto& x : c)
      if (!x.is_zero()) return false;
    return true;
  }

  bool operator==(const AlgebraElement& o) const {
    if (!desc_equal(*desc, *o.desc)) return false;
    for (size_t i = 0; i < c.size(); ++i)
      if (!(c[i] == o.c[i])) return false;
    return true;
  }
  bool operator!=(const AlgebraElement& o) const { return !(*this == o); }
};

template <class K>
void check_same_algebra(const AlgebraElement<K>& x, const AlgebraElement<K>& y) {
  if (x.desc.get() != y.desc.get() && !desc_equal(*x.desc, *y.desc))
    throw std::domain_error("algebra elements from different descriptors");
}

template <class K>
AlgebraElement<K> from_scalar(const DescPtr<K>& d, const K& s) {
  std::vector<K> c(static_cast<size_t>(d->m), d->one.zero());
  switch (d->kind) {
    case AlgKind::SplitMatrix:
      for (int i = 0; i < d->n; ++i) c[static_cast<size_t>(i * d->n + i)] = s;
      break;
    case AlgKind::Quaternion:
    case AlgKind::CyclicCubic:
      c[0] = s;
      break;
  }
  return AlgebraElement<K>(d, std::move(c));
}

template <class K>
AlgebraElement<K> identity(const DescPtr<K>& d) {
  return from_scalar(d, d->one);
}

template <class K>
AlgebraElement<K> basis_element(const DescPtr<K>& d, int i) {
  std::vector<K> c(static_cast<size_t>(d->m), d->one.zero());
  c[static_cast<size_t>(i)] = d->one;
  return AlgebraElement<K>(d, std::move(c));
}

template <class K>
AlgebraElement<K> operator+(const AlgebraElement<K>& x, const AlgebraElement<K>& y) {
  check_same_algebra(x, y);
  auto c = x.c;
  for (size_t i = 0; i < c.size(); ++i) c[i] += y.c[i];
  return AlgebraElement<K>(x.desc, std::move(c));
}

template <class K>
AlgebraElement<K> operator-(const AlgebraElement<K>& x, const AlgebraElement<K>& y) {
  check_same_algebra(x, y);
  auto c = x.c;
  for (size_t i = 0; i < c.size(); ++i) c[i] -= y.c[i];
  return AlgebraElement<K>(x.desc, std::move(c));
}

template <class K>
AlgebraElement<K> scale(const K& s, const AlgebraElement<K>& x) {
  auto c = x.c;
  for (auto& e : c) e = s * e;
  return AlgebraElement<K>(x.desc, std::move(c));
}

namespace detail {

template <class K>
std::array<QRElem<K>, 3> cyclic_parts(const AlgebraElement<K>& x) {
  const auto& d = *x.desc;
  std::array<QRElem<K>, 3> l{QRElem<K>::from_base(d.L, d.one.zero()),
                             QRElem<K>::from_base(d.L, d.one.zero()),
                             QRElem<K>::from_base(d.L, d.one.zero())};
  for (int i = 0; i < 3; ++i) {
    std::vector<K> coords(3);
    for (int j = 0; j < 3; ++j) coords[static_cast<size_t>(j)] = x.c[static_cast<size_t>(3 * i + j)];
    l[static_cast<size_t>(i)] = QRElem<K>(d.L, Poly<K>(coords));
  }
  return l;
}

template <class K>
AlgebraElement<K> cyclic_from_parts(const DescPtr<K>& d, const std::array<QRElem<K>, 3>& l) {
  std::vector<K> c(9, d->one.zero());
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) c[static_cast<size_t>(3 * i + j)] = l[static_cast<size_t>(i)].coord(j);
  return AlgebraElement<K>(d, std::move(c));
}

}  // namespace detail

template <class K>
AlgebraElement<K> mul(const AlgebraElement<K>& x, const AlgebraElement<K>& y) {
  check_same_algebra(x, y);
  const auto& d = *x.desc;
  const K zero = d.one.zero();
  switch (d.kind) {
    case AlgKind::SplitMatrix: {
      const int n = d.n;
      std::vector<K> c(static_cast<size_t>(d.m), zero);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          K s = zero;
          for (int k = 0; k < n; ++k)
            s += x.c[static_cast<size_t>(i * n + k)] * y.c[static_cast<size_t>(k * n + j)];
          c[static_cast<size_t>(i * n + j)] = s;
        }
      return AlgebraElement<K>(x.desc, std::move(c));
    }
    case AlgKind::Quaternion: {
      const K &a = d.qa, &b = d.qb;
      const K &x0 = x.c[0], &x1 = x.c[1], &x2 = x.c[2], &x3 = x.c[3];
      const K &y0 = y.c[0], &y1 = y.c[1], &y2 = y.c[2], &y3 = y.c[3];
      std::vector<K> c(4, zero);
      c[0] = x0 * y0 + a * x1 * y1 + b * x2 * y2 - a * b * x3 * y3;
      c[1] = x0 * y1 + x1 * y0 - b * x2 * y3 + b * x3 * y2;
      c[2] = x0 * y2 + x2 * y0 + a * x1 * y3 - a * x3 * y1;
      c[3] = x0 * y3 + x3 * y0 + x1 * y2 - x2 * y1;
      return AlgebraElement<K>(x.desc, std::move(c));
    }
    case AlgKind::CyclicCubic: {
      // (li u^i)(mj u^j) = li sigma^i(mj) u^{i+j},  u^3 = gamma
      auto lx = detail::cyclic_parts(x), ly = detail::cyclic_parts(y);
      const QRElem<K> gl = QRElem<K>::from_base(d.L, d.gamma);
      std::array<QRElem<K>, 3> out{lx[0].zero(), lx[0].zero(), lx[0].zero()};
      for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
          QRElem<K> t = ly[static_cast<size_t>(j)];
          for (int k = 0; k < i; ++k) t = detail::sigma_apply(d, t);
          QRElem<K> term = lx[static_cast<size_t>(i)] * t;
          if (i + j >= 3) term = term * gl;
          out[static_cast<size_t>((i + j) % 3)] += term;
        }
      }
      return detail::cyclic_from_parts(x.desc, out);
    }
  }
  throw std::logic_error("mul: unreachable");
}

template <class K>
K reduced_trace(const AlgebraElement<K>& x) {
  const auto& d = *x.desc;
  switch (d.kind) {
    case AlgKind::SplitMatrix: {
      K t = x.c[0];
      for (int i = 1; i < d.n; ++i) t += x.c[static_cast<size_t>(i * d.n + i)];
      return t;
    }
    case AlgKind::Quaternion:
      return x.c[0] + x.c[0];
    case AlgKind::CyclicCubic: {
      auto l = detail::cyclic_parts(x);
      QRElem<K> t = l[0] + detail::sigma_apply(d, l[0]) + detail::sigma_apply(d, detail::sigma_apply(d, l[0]));
      if (!t.is_base()) throw std::runtime_error("reduced_trace: value escaped the base field");
      return t.coord(0);
    }
  }
  throw std::logic_error("reduced_trace: unreachable");
}

template <class K>
K reduced_norm(const AlgebraElement<K>& x) {
  const auto& d = *x.desc;
  switch (d.kind) {
    case AlgKind::SplitMatrix: {
      Matrix<K> m(static_cast<size_t>(d.n), std::vector<K>(static_cast<size_t>(d.n)));
      for (int i = 0; i < d.n; ++i)
        for (int j = 0; j < d.n; ++j) m[static_cast<size_t>(i)][static_cast<size_t>(j)] = x.c[static_cast<size_t>(i * d.n + j)];
      return det_small(m);
    }
    case AlgKind::Quaternion: {
      const K &a = d.qa, &b = d.qb;
      return x.c[0] * x.c[0] - a * x.c[1] * x.c[1] - b * x.c[2] * x.c[2] + a * b * x.c[3] * x.c[3];
    }
    case AlgKind::CyclicCubic: {
      auto l = detail::cyclic_parts(x);
      auto M = detail::cyclic_splitting_matrix(d, l, QRElem<K>::from_base(d.L, d.gamma));
      QRElem<K> det = det_small(M);
      if (!det.is_base()) throw std::runtime_error("reduced_norm: value escaped the base field");
      return det.coord(0);
    }
  }
  throw std::logic_error("reduced_norm: unreachable");
}

// Reduced characteristic polynomial of x: the monic degree-n polynomial
// N(v - x) in v. For n=2 this is v^2 - T(x) v + N(x).
template <class K>
Poly<K> char_poly(const AlgebraElement<K>& x) {
  const auto& d = *x.desc;
  const K one = d.one;
  if (d.n == 2) {
    K t = reduced_trace(x), nn = reduced_norm(x);
    return Poly<K>(std::vector<K>{nn, -t, one});
  }
  switch (d.kind) {
    case AlgKind::SplitMatrix: {
      Matrix<Poly<K>> m(3, std::vector<Poly<K>>(3));
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          Poly<K> e(-x.c[static_cast<size_t>(i * 3 + j)]);
          if (i == j) e = e + poly_monomial(1, one);
          m[static_cast<size_t>(i)][static_cast<size_t>(j)] = e;
        }
      return det_small(m);
    }
    case AlgKind::CyclicCubic: {
      auto l = detail::cyclic_parts(x);
      auto M = detail::cyclic_splitting_matrix(d, l, QRElem<K>::from_base(d.L, d.gamma));
      const QRElem<K> lone = QRElem<K>::from_base(d.L, one);
      Matrix<Poly<QRElem<K>>> m(3, std::vector<Poly<QRElem<K>>>(3));
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          Poly<QRElem<K>> e(-M[static_cast<size_t>(i)][static_cast<size_t>(j)]);
          if (i == j) e = e + poly_monomial(1, lone);
          m[static_cast<size_t>(i)][static_cast<size_t>(j)] = e;
        }
      Poly<QRElem<K>> cp = det_small(m);
      std::vector<K> coeffs;
      for (auto& cc : cp.c) {
        if (!cc.is_base()) throw std::runtime_error("char_poly: coefficient escaped the base field");
        coeffs.push_back(cc.coord(0));
      }
      return Poly<K>(coeffs);
    }
    default:
      throw std::logic_error("char_poly: unreachable");
  }
}

// Two-sided inverse via the characteristic polynomial (Cayley-Hamilton).
template <class K>
AlgebraElement<K> invert(const AlgebraElement<K>& x) {
  const auto& d = *x.desc;
  K nrm = reduced_norm(x);
  if (nrm.is_zero()) throw std::domain_error("invert: reduced norm is zero");
  if (d.n == 2) {
    // x^{-1} = (T(x) 1 - x) / N(x)
    K t = reduced_trace(x);
    auto num = from_scalar(x.desc, t) - x;
    return scale(nrm.inv(), num);
  }
  // v^3 + a2 v^2 + a1 v + a0: x^{-1} = -(x^2 + a2 x + a1) / a0
  Poly<K> cp = char_poly(x);
  K a2 = cp.coeff(2), a1 = cp.coeff(1), a0 = cp.coeff(0);
  auto x2 = mul(x, x);
  auto num = x2 + scale(a2, x) + from_scalar(x.desc, a1);
  return scale(-(a0.inv()), num);
}

template <class K>
bool is_invertible(const AlgebraElement<K>& x) {
  return !reduced_norm(x).is_zero();
}

// matrix view of split-presentation elements, and small scalar helpers
namespace detail {

template <class K>
Matrix<K> as_matrix(const AlgebraElement<K>& x) {
  const int n = x.desc->n;
  Matrix<K> m(static_cast<size_t>(n), std::vector<K>(static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[static_cast<size_t>(i)][static_cast<size_t>(j)] = x.c[static_cast<size_t>(i * n + j)];
  return m;
}

template <class K>
AlgebraElement<K> from_matrix(const DescPtr<K>& d, const Matrix<K>& m) {
  std::vector<K> c;
  c.reserve(static_cast<size_t>(d->m));
  for (auto& row : m)
    for (auto& e : row) c.push_back(e);
  return AlgebraElement<K>(d, std::move(c));
}

template <class K>
K int_to_field(const K& one, long v) {
  K s = one.zero();
  K step = v >= 0 ? one : -one;
  for (long i = 0; i < (v >= 0 ? v : -v); ++i) s += step;
  return s;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// G1 = D^x x (D^op)^x with the twisted multiplication
// (g11,g12)(h11,h12) = (g11 h11, h12 g12).

template <class K>
struct G1Element {
  AlgebraElement<K> g11, g12;
};

template <class K>
G1Element<K> g1_identity(const DescPtr<K>& d) {
  return {identity(d), identity(d)};
}

template <class K>
G1Element<K> g1_mul(const G1Element<K>& g, const G1Element<K>& h) {
  return {mul(g.g11, h.g11), mul(h.g12, g.g12)};
}

template <class K>
G1Element<K> g1_inverse(const G1Element<K>& g) {
  return {invert(g.g11), invert(g.g12)};
}

// ---------------------------------------------------------------------------
// cyclic cubic construction (needs the ops above for validation)

template <class K>
DescPtr<K> make_cyclic_cubic_unchecked(const Poly<K>& f_L, const Poly<K>& sigma_rep, const K& gamma) {
  auto d = std::make_shared<AlgebraDescriptor<K>>();
  d->kind = AlgKind::CyclicCubic;
  d->n = 3;
  d->m = 9;
  d->one = gamma.one();
  d->L = make_quot_ring(f_L);
  d->sigma_image = QRElem<K>(d->L, sigma_rep);
  d->gamma = gamma;
  return d;
}

template <class K>
DescPtr<K> make_cyclic_cubic(const Poly<K>& f_L, const Poly<K>& sigma_rep, const K& gamma) {
  if (f_L.degree() != 3 || !(f_L.leading() == f_L.leading().one()))
    throw std::domain_error("make_cyclic_cubic: f_L must be a monic cubic");
  if (gamma.is_zero()) throw std::domain_error("make_cyclic_cubic: gamma must be nonzero");
  auto d = make_cyclic_cubic_unchecked(f_L, sigma_rep, gamma);

  // a cubic is reducible exactly when it has a base-field root
  if (!poly_roots_in_field(f_L, gamma.one()).empty())
    throw std::domain_error("make_cyclic_cubic: f_L must be irreducible");
  // square discriminant (cyclic Galois group)
  K disc = poly_discriminant(f_L);
  Poly<K> sq(std::vector<K>{-disc, disc.zero(), disc.one()});
  if (poly_roots_in_field(sq, gamma.one()).empty())
    throw std::domain_error("make_cyclic_cubic: f_L must have square discriminant");
  const auto& L = d->L;
  auto th = QRElem<K>::generator(L);
  if (!(d->sigma_image != th)) throw std::domain_error("make_cyclic_cubic: sigma must move th");
  // sigma(th) is a root of f_L
  QRElem<K> val = QRElem<K>::from_base(L, f_L.coeff(3));
  for (int k = 2; k >= 0; --k) val = val * d->sigma_image + QRElem<K>::from_base(L, f_L.coeff(k));
  if (!val.is_zero()) throw std::domain_error("make_cyclic_cubic: sigma(th) is not a root of f_L");
  // sigma has order 3
  auto s1 = d->sigma_image;
  auto s2 = detail::sigma_apply(*d, s1);
  auto s3 = detail::sigma_apply(*d, s2);
  if (!(s2 != th) || !(s3 == th)) throw std::domain_error("make_cyclic_cubic: sigma must have order 3");
  return d;
}

// ---------------------------------------------------------------------------
// shipped defaults

// The smallest cyclic cubic field: L = Q[th]/(th^3+th^2-2th-1), discriminant
// 49, sigma(th) = th^2-2. gamma=2 is not a norm from L (2 is not a cube mod
// the ramified prime 7), so the algebra is division, ramified at {2, 7}.
inline DescPtr<Rational> default_cyclic_division() {
  Poly<Rational> f(std::vector<Rational>{Rational(-1), Rational(-2), Rational(1), Rational(1)});
  Poly<Rational> sig(std::vector<Rational>{Rational(-2), Rational(0), Rational(1)});
  return make_cyclic_cubic(f, sig, Rational(2));
}

inline DescPtr<Rational> hamilton_quaternions() {
  return make_quaternion(Rational(-1), Rational(-1));
}

// A cyclic cubic descriptor over F_p (necessarily split): the first monic
// irreducible cubic by coefficient scan, sigma = Frobenius.
inline DescPtr<Fp> cyclic_cubic_over_fp(long long p, long long gamma_value = 1) {
  for (long long a = 0; a < p; ++a)
    for (long long b = 0; b < p; ++b)
      for (long long c = 1; c < p; ++c) {
        Poly<Fp> f(std::vector<Fp>{Fp(c, p), Fp(b, p), Fp(a, p), Fp(1, p)});
        if (!poly_roots_in_field(f, Fp(0, p)).empty()) continue;
        auto L = make_quot_ring(f);
        auto frob = qr_pow(QRElem<Fp>::generator(L), static_cast<unsigned long long>(p));
        return make_cyclic_cubic(f, frob.rep, Fp(gamma_value, p));
      }
  throw std::logic_error("cyclic_cubic_over_fp: no irreducible cubic found");
}

}  // namespace pairalg
