#pragma once

// The representation (G, V): V = W + W for W = D viewed as a vector space,
// G = D^x x (D^op)^x x GL(2) acting by (gx)(v) = g11 x(v g2) g12 where
// x(v) = v1 x1 + v2 x2. Provides the binary form F_x = N(x(v)), the relative
// invariant P (the discriminant of F_x), the characters, semistability, the
// pairing [x,y] = T(x1 y2) + T(x2 y1) and the involution g -> g^iota.

#include <stdexcept>
#include <string>
#include <vector>

#include "algebra.hpp"

namespace pairalg {

template <class K>
struct PairPoint {
  AlgebraElement<K> x1, x2;

  PairPoint() = default;
  PairPoint(AlgebraElement<K> a, AlgebraElement<K> b) : x1(std::move(a)), x2(std::move(b)) {
    check_same_algebra(x1, x2);
  }

  const DescPtr<K>& desc() const { return x1.desc; }

  bool operator==(const PairPoint& o) const { return x1 == o.x1 && x2 == o.x2; }
  bool operator!=(const PairPoint& o) const { return !(*this == o); }
  bool is_zero() const { return x1.is_zero() && x2.is_zero(); }
};

template <class K>
struct GroupElement {
  G1Element<K> g1;
  Matrix<K> g2;  // 2x2, invertible
};

template <class K>
GroupElement<K> group_element(AlgebraElement<K> g11, AlgebraElement<K> g12, Matrix<K> g2) {
  if (!is_invertible(g11) || !is_invertible(g12))
    throw std::domain_error("group_element: g11, g12 must be invertible");
  if (g2.size() != 2 || g2[0].size() != 2) throw std::domain_error("group_element: g2 must be 2x2");
  if (det_small(g2).is_zero()) throw std::domain_error("group_element: g2 must be invertible");
  return GroupElement<K>{{std::move(g11), std::move(g12)}, std::move(g2)};
}

template <class K>
GroupElement<K> ge_identity(const DescPtr<K>& d) {
  return {g1_identity(d), mat_identity(2, d->one)};
}

template <class K>
GroupElement<K> ge_mul(const GroupElement<K>& g, const GroupElement<K>& h) {
  return {g1_mul(g.g1, h.g1), mat_mul(g.g2, h.g2)};
}

template <class K>
GroupElement<K> ge_inverse(const GroupElement<K>& g) {
  return {g1_inverse(g.g1), mat_inverse(g.g2)};
}

// (gx)(v) = g11 x(v g2) g12; with v a row vector, coordinate j of the result
// is g11 (g2[j][0] x1 + g2[j][1] x2) g12.
template <class K>
PairPoint<K> act(const GroupElement<K>& g, const PairPoint<K>& x) {
  if (!is_invertible(g.g1.g11) || !is_invertible(g.g1.g12) || det_small(g.g2).is_zero())
    throw std::domain_error("act: group element is not invertible");
  auto comp = [&](size_t j) {
    auto lin = scale(g.g2[j][0], x.x1) + scale(g.g2[j][1], x.x2);
    return mul(g.g1.g11, mul(lin, g.g1.g12));
  };
  return PairPoint<K>(comp(0), comp(1));
}

// F(v1,v2) = sum_i c[i] v1^{n-i} v2^i
template <class K>
struct BinaryForm {
  int n = 0;
  std::vector<K> c;  // length n+1, leading v1 coefficient first

  bool operator==(const BinaryForm& o) const { return n == o.n && c == o.c; }

  // high-to-low in v1
  std::string to_string() const {
    std::string s;
    for (size_t i = 0; i < c.size(); ++i) {
      if (i) s += ",";
      s += c[i].to_string();
    }
    return s;
  }
};

// F_x(v) = N(v1 x1 + v2 x2), computed exactly by evaluating the reduced norm
// over the polynomial ring K[t] at t*x1 + x2 (the norm is polynomial in the
// coordinates, so this works over every base field, including F_2 and F_3).
template <class K>
BinaryForm<K> form_of(const PairPoint<K>& x) {
  const auto& d = *x.desc();
  const int n = d.n;
  const K zero = d.one.zero();
  Poly<K> nrm;
  switch (d.kind) {
    case AlgKind::SplitMatrix: {
      Matrix<Poly<K>> m(static_cast<size_t>(n), std::vector<Poly<K>>(static_cast<size_t>(n)));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          size_t idx = static_cast<size_t>(i * n + j);
          m[static_cast<size_t>(i)][static_cast<size_t>(j)] =
              Poly<K>(std::vector<K>{x.x2.c[idx], x.x1.c[idx]});
        }
      nrm = det_small(m);
      break;
    }
    case AlgKind::Quaternion: {
      auto lin = [&](size_t i) { return Poly<K>(std::vector<K>{x.x2.c[i], x.x1.c[i]}); };
      Poly<K> c0 = lin(0), c1 = lin(1), c2 = lin(2), c3 = lin(3);
      Poly<K> a(d.qa), b(d.qb);
      nrm = c0 * c0 - a * c1 * c1 - b * c2 * c2 + a * b * c3 * c3;
      break;
    }
    case AlgKind::CyclicCubic: {
      using E = Poly<QRElem<K>>;
      auto l1 = detail::cyclic_parts(x.x1), l2 = detail::cyclic_parts(x.x2);
      std::array<E, 3> l;
      for (int i = 0; i < 3; ++i)
        l[static_cast<size_t>(i)] =
            E(std::vector<QRElem<K>>{l2[static_cast<size_t>(i)], l1[static_cast<size_t>(i)]});
      E gamma(QRElem<K>::from_base(d.L, d.gamma));
      auto M = detail::cyclic_splitting_matrix(d, l, gamma);
      E det = det_small(M);
      std::vector<K> coeffs;
      for (auto& cc : det.c) {
        if (!cc.is_base()) throw std::runtime_error("form_of: coefficient escaped the base field");
        coeffs.push_back(cc.coord(0));
      }
      nrm = Poly<K>(coeffs);
      break;
    }
  }
  BinaryForm<K> f;
  f.n = n;
  f.c.assign(static_cast<size_t>(n) + 1, zero);
  for (int i = 0; i <= n; ++i) f.c[static_cast<size_t>(i)] = nrm.coeff_or(n - i, zero);
  return f;
}

// Homogeneous discriminant of the binary form, normalized so that
// P = prod_{i<j} (alpha_i beta_j - alpha_j beta_i)^2 over the projective
// roots (roots at infinity, c0 = 0, included uniformly).
template <class K>
K binary_disc(const BinaryForm<K>& f) {
  const K zero = f.c[0].zero(), one = f.c[0].one();
  auto n = [&](int k) {
    K s = zero;
    for (int i = 0; i < k; ++i) s += one;
    return s;
  };
  if (f.n == 2) {
    const K &a = f.c[0], &b = f.c[1], &cc = f.c[2];
    return b * b - n(4) * a * cc;
  }
  if (f.n == 3) {
    const K &a = f.c[0], &b = f.c[1], &cc = f.c[2], &dd = f.c[3];
    return n(18) * a * b * cc * dd - n(4) * b * b * b * dd + b * b * cc * cc -
           n(4) * a * cc * cc * cc - n(27) * a * a * dd * dd;
  }
  throw std::domain_error("binary_disc: degree must be 2 or 3");
}

template <class K>
K invariant_P(const PairPoint<K>& x) {
  return binary_disc(form_of(x));
}

template <class K>
bool is_semistable(const PairPoint<K>& x) {
  return !invariant_P(x).is_zero();
}

template <class K>
struct Characters {
  K chi1, chi2, chi;
};

// chi1 = N(g11) N(g12), chi2 = det g2; chi = chi1^2 chi2^2 (n=2),
// chi1^4 chi2^6 (n=3).
template <class K>
Characters<K> characters(const GroupElement<K>& g) {
  K chi1 = reduced_norm(g.g1.g11) * reduced_norm(g.g1.g12);
  K chi2 = det_small(g.g2);
  const int n = g.g1.g11.desc->n;
  K chi = chi1 * chi1 * chi2 * chi2;
  if (n == 3) chi = chi * chi * chi2 * chi2;  // chi1^4 chi2^6
  return {chi1, chi2, chi};
}

template <class K>
K pairing(const PairPoint<K>& x, const PairPoint<K>& y) {
  check_same_algebra(x.x1, y.x1);
  return reduced_trace(mul(x.x1, y.x2)) + reduced_trace(mul(x.x2, y.x1));
}

// g^iota = (g12^{-1}, g11^{-1}, nu ^t(g2)^{-1} nu); [gx, g^iota y] = [x, y].
template <class K>
GroupElement<K> involution(const GroupElement<K>& g) {
  auto g2i = mat_inverse(g.g2);
  Matrix<K> m(2, std::vector<K>(2));
  // nu ^t A nu swaps both indices: m[i][j] = A[1-j][1-i]
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      m[static_cast<size_t>(i)][static_cast<size_t>(j)] = g2i[static_cast<size_t>(1 - j)][static_cast<size_t>(1 - i)];
  return {{invert(g.g1.g12), invert(g.g1.g11)}, std::move(m)};
}

// Substitution F(v g2) for covariance checks.
template <class K>
BinaryForm<K> form_compose_right(const BinaryForm<K>& f, const Matrix<K>& g2) {
  // v g2 = (v1 g2[0][0] + v2 g2[1][0], v1 g2[0][1] + v2 g2[1][1])
  const K zero = f.c[0].zero();
  Poly<K> u1(std::vector<K>{g2[1][0], g2[0][0]});  // in t = v1/v2... dehomogenize by v2
  Poly<K> u2(std::vector<K>{g2[1][1], g2[0][1]});
  Poly<K> acc;
  // sum_i c[i] u1^{n-i} u2^i as polynomials in t, then rehomogenize
  for (int i = 0; i <= f.n; ++i) {
    Poly<K> term(f.c[static_cast<size_t>(i)]);
    for (int k = 0; k < f.n - i; ++k) term = term * u1;
    for (int k = 0; k < i; ++k) term = term * u2;
    acc = acc + term;
  }
  BinaryForm<K> out;
  out.n = f.n;
  out.c.assign(static_cast<size_t>(f.n) + 1, zero);
  for (int i = 0; i <= f.n; ++i) out.c[static_cast<size_t>(i)] = acc.coeff_or(f.n - i, zero);
  return out;
}

}  // namespace pairalg
