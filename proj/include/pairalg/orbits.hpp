#pragma once

// Rational-orbit machinery: reduction to (1,w), constructive orbit
// equivalence through a conjugator (the effective Skolem-Noether step),
// stabilizer witnesses, and the unstable-stratum normalization. Every
// returned group element is verified against its defining equation before it
// leaves this header; a failed verification is a logic error, never a wrong
// answer.

#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "errors.hpp"
#include "etale.hpp"
#include "pvs.hpp"

namespace pairalg {

template <class K>
struct OrbitWitness {
  GroupElement<K> g;
  PairPoint<K> source, target;
};

template <class K>
OrbitWitness<K> make_orbit_witness(const GroupElement<K>& g, const PairPoint<K>& source,
                                   const PairPoint<K>& target) {
  if (!(act(g, source) == target)) throw std::logic_error("orbit witness failed verification");
  return {g, source, target};
}

// ---------------------------------------------------------------------------
// reduction to (1, w)

template <class K>
struct MonicReduction {
  GroupElement<K> g;
  AlgebraElement<K> w;  // act(g, x) = (1, w)
};

namespace detail {

// invertible P, Q with P X Q = diag(1,...,1,0,...): returns (P, Q, rank)
template <class K>
std::tuple<Matrix<K>, Matrix<K>, int> rank_normal_form(Matrix<K> m, const K& one) {
  const size_t n = m.size();
  Matrix<K> P = mat_identity(n, one), Q = mat_identity(n, one);
  size_t r = 0;
  for (size_t col = 0; r < n && col < n; ++col) {
    // pivot search over the remaining block
    size_t pi = n, pj = n;
    for (size_t i = r; i < n && pi == n; ++i)
      for (size_t j = r; j < n; ++j)
        if (!m[i][j].is_zero()) { pi = i; pj = j; break; }
    if (pi == n) break;
    std::swap(m[pi], m[r]);
    std::swap(P[pi], P[r]);
    if (pj != r) {
      for (size_t i = 0; i < n; ++i) {
        std::swap(m[i][pj], m[i][r]);
        std::swap(Q[i][pj], Q[i][r]);
      }
    }
    K piv_inv = m[r][r].inv();
    for (size_t j = 0; j < n; ++j) m[r][j] = m[r][j] * piv_inv;
    for (size_t j = 0; j < n; ++j) P[r][j] = P[r][j] * piv_inv;
    for (size_t i = 0; i < n; ++i) {
      if (i == r || m[i][r].is_zero()) continue;
      K f = m[i][r];
      for (size_t j = 0; j < n; ++j) {
        m[i][j] -= f * m[r][j];
        P[i][j] -= f * P[r][j];
      }
    }
    for (size_t j = 0; j < n; ++j) {
      if (j == r || m[r][j].is_zero()) continue;
      K f = m[r][j];
      for (size_t i = 0; i < n; ++i) {
        m[i][j] -= m[i][r] * f;
        Q[i][j] -= Q[i][r] * f;
      }
    }
    ++r;
  }
  return {P, Q, static_cast<int>(r)};
}

}  // namespace detail

// g with act(g, x) = (1, w). Division presentations normalize directly; the
// split case follows the rank-normalization procedure with a bounded search
// for the invertible combination. Exhaustion (possible over tiny fields) is
// reported as inconclusive, never silently absorbed.
template <class K>
MonicReduction<K> reduce_to_monic(const PairPoint<K>& x, int height_bound = 10) {
  if (!is_semistable(x)) throw std::domain_error("reduce_to_monic: point must be semistable");
  const auto& d = x.desc();
  const K one = d->one;
  auto nu = Matrix<K>{{one.zero(), one}, {one, one.zero()}};

  GroupElement<K> acc = ge_identity(d);
  PairPoint<K> cur = x;

  auto apply = [&](const GroupElement<K>& step) {
    cur = act(step, cur);
    acc = ge_mul(step, acc);
  };

  if (d->kind != AlgKind::SplitMatrix) {
    if (!is_invertible(cur.x1)) {
      if (!is_invertible(cur.x2))
        throw std::domain_error("reduce_to_monic: no invertible coordinate in a division presentation");
      apply(GroupElement<K>{{identity(d), identity(d)}, nu});
    }
    apply(GroupElement<K>{{invert(cur.x1), identity(d)}, mat_identity(2, one)});
  } else {
    auto m1 = detail::as_matrix(cur.x1), m2 = detail::as_matrix(cur.x2);
    int r1 = static_cast<int>(mat_rank(m1)), r2 = static_cast<int>(mat_rank(m2));
    if (r2 > r1) {
      apply(GroupElement<K>{{identity(d), identity(d)}, nu});
      std::swap(r1, r2);
    }
    const int n = d->n;
    if (r1 < n) {
      if (r1 != n - 1)
        throw std::logic_error("reduce_to_monic: semistable split point with too small rank");
      // P x1 Q = e = diag(1,..,1,0)
      auto [P, Q, rr] = detail::rank_normal_form(detail::as_matrix(cur.x1), one);
      apply(GroupElement<K>{{detail::from_matrix(d, P), detail::from_matrix(d, Q)}, mat_identity(2, one)});
      auto y = detail::as_matrix(cur.x2);
      const size_t last = static_cast<size_t>(n - 1);
      if (y[last][last].is_zero())
        throw std::logic_error("reduce_to_monic: corner entry vanished on a semistable point");
      // clear the last row/column of x2 while fixing e, then scale the corner
      Matrix<K> p = mat_identity(static_cast<size_t>(n), one), q = mat_identity(static_cast<size_t>(n), one);
      K corner_inv = y[last][last].inv();
      for (size_t i = 0; i + 1 < static_cast<size_t>(n); ++i) p[i][last] = -(y[i][last] * corner_inv);
      for (size_t j = 0; j + 1 < static_cast<size_t>(n); ++j) q[last][j] = -(corner_inv * y[last][j]);
      p[last][last] = corner_inv;
      apply(GroupElement<K>{{detail::from_matrix(d, p), detail::from_matrix(d, q)}, mat_identity(2, one)});

      // bounded search for alpha, beta with alpha x1 + beta x2 invertible
      bool found = false;
      for (long a = 0; a <= height_bound && !found; ++a) {
        for (long bsign : {1, -1}) {
          for (long b = (a == 0 ? 1 : 0); b <= height_bound && !found; ++b) {
            for (long asign : {1, -1}) {
              if (a == 0 && asign < 0) continue;
              if (b == 0 && bsign < 0) continue;
              K alpha = detail::int_to_field(one, asign * a), beta = detail::int_to_field(one, bsign * b);
              auto cand = scale(alpha, cur.x1) + scale(beta, cur.x2);
              if (!is_invertible(cand)) continue;
              Matrix<K> g2 = beta.is_zero() ? Matrix<K>{{alpha, beta}, {one.zero(), one}}
                                            : Matrix<K>{{alpha, beta}, {one, one.zero()}};
              apply(GroupElement<K>{{identity(d), identity(d)}, g2});
              found = true;
              break;
            }
          }
        }
      }
      if (!found)
        throw inconclusive_error("reduce_to_monic: exhausted the height bound searching for an invertible combination");
    }
    apply(GroupElement<K>{{invert(cur.x1), identity(d)}, mat_identity(2, one)});
  }

  if (!(cur.x1 == identity(d))) throw std::logic_error("reduce_to_monic: normalization failed");
  if (!(act(acc, x) == cur)) throw std::logic_error("reduce_to_monic: accumulated witness failed");
  return {acc, cur.x2};
}

// ---------------------------------------------------------------------------
// stabilizer witnesses

// For x = (1,w): n=2 maps a pair s,t of invertible elements of K[w] to
// (s, t, g_st) with g_st t(st, st w) = t(1, w); n=3 maps (s, t) to
// (s, s^{-1} t^{-1}, t I). Every sample is verified to fix x exactly.
template <class K>
std::vector<GroupElement<K>> stabilizer_witnesses(const PairPoint<K>& x, int samples,
                                                  unsigned long long seed = 1) {
  const auto& d = x.desc();
  const K one = d->one;
  if (!(x.x1 == identity(d))) throw std::domain_error("stabilizer_witnesses: point must be (1, w)");
  if (!is_semistable(x)) throw std::domain_error("stabilizer_witnesses: point must be semistable");
  const auto& w = x.x2;
  const int n = d->n;

  std::mt19937_64 rng(seed);
  auto rand_subalgebra_elem = [&]() {
    // random invertible element of K[w]
    while (true) {
      AlgebraElement<K> s = from_scalar(d, detail::int_to_field(one, static_cast<long>(rng() % 7) - 3));
      AlgebraElement<K> wp = identity(d);
      for (int k = 1; k < n; ++k) {
        wp = mul(wp, w);
        s = s + scale(detail::int_to_field(one, static_cast<long>(rng() % 7) - 3), wp);
      }
      if (is_invertible(s)) return s;
    }
  };

  std::vector<GroupElement<K>> out;
  while (static_cast<int>(out.size()) < samples) {
    if (n == 2) {
      auto s = rand_subalgebra_elem(), t = rand_subalgebra_elem();
      auto st = mul(s, t), stw = mul(st, w);
      // solve g * t(st, st w) = t(1, w) coordinatewise over the algebra
      Matrix<K> A(static_cast<size_t>(d->m), std::vector<K>(2));
      for (int i = 0; i < d->m; ++i) {
        A[static_cast<size_t>(i)][0] = st.c[static_cast<size_t>(i)];
        A[static_cast<size_t>(i)][1] = stw.c[static_cast<size_t>(i)];
      }
      auto row0 = solve_linear(A, identity(d).c);
      auto row1 = solve_linear(A, w.c);
      if (!row0 || !row1) throw std::logic_error("stabilizer_witnesses: {st, st w} failed to span");
      Matrix<K> g2{{(*row0)[0], (*row0)[1]}, {(*row1)[0], (*row1)[1]}};
      if (det_small(g2).is_zero()) continue;
      GroupElement<K> g{{s, t}, g2};
      if (!(act(g, x) == x)) throw std::logic_error("stabilizer_witnesses: candidate does not fix x");
      out.push_back(g);
    } else {
      auto s = rand_subalgebra_elem();
      K t = one.zero();
      while (t.is_zero()) t = detail::int_to_field(one, static_cast<long>(rng() % 9) - 4);
      auto g12 = invert(scale(t, s));
      Matrix<K> g2{{t, one.zero()}, {one.zero(), t}};
      GroupElement<K> g{{s, g12}, g2};
      if (!(act(g, x) == x)) throw std::logic_error("stabilizer_witnesses: candidate does not fix x");
      out.push_back(g);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// unstable stratification

template <class K>
struct Destabilization {
  GroupElement<K> g;
  PairPoint<K> y;  // act(g, x) = y = (0, y2), y2 != 0
};

// For nonzero non-semistable x in a division presentation: normalize to
// (1, c) with c scalar (the division dichotomy), then shear into Y1^ss.
template <class K>
Destabilization<K> destabilize(const PairPoint<K>& x) {
  const auto& d = x.desc();
  const K one = d->one;
  if (x.is_zero()) throw std::domain_error("destabilize: point must be nonzero");
  if (is_semistable(x)) throw std::domain_error("destabilize: point must be unstable");
  if (d->kind == AlgKind::SplitMatrix)
    throw unsupported_error("destabilize: split presentations are out of scope (division dichotomy)");

  if (x.x1.is_zero()) {
    auto g = ge_identity(d);
    return {g, x};
  }
  if (!is_invertible(x.x1))
    throw unsupported_error("destabilize: presentation contains zero divisors (not a division algebra)");
  auto w = mul(invert(x.x1), x.x2);
  // division dichotomy: unstable (1,w) forces w scalar
  K c = w.c[0];
  if (!(w == from_scalar(d, c)))
    throw unsupported_error("destabilize: nonscalar unstable normal form (not a division algebra)");
  Matrix<K> g2{{-c, one}, {one, one.zero()}};
  GroupElement<K> g{{invert(x.x1), identity(d)}, g2};
  auto y = act(g, x);
  if (!y.x1.is_zero() || y.x2.is_zero()) throw std::logic_error("destabilize: target not in Y1^ss");
  return {g, y};
}

// ---------------------------------------------------------------------------
// orbit equivalence

enum class EquivStatus { Equivalent, Distinct, Inconclusive };

template <class K>
struct EquivResult {
  EquivStatus status = EquivStatus::Inconclusive;
  std::optional<OrbitWitness<K>> witness;
  std::string note;
};

namespace detail {

// solve theta u1 = p theta for invertible theta; division algebras find one
// in the kernel basis immediately, otherwise small combinations are scanned
template <class K>
std::optional<AlgebraElement<K>> conjugator(const AlgebraElement<K>& u1, const AlgebraElement<K>& p,
                                            int height_bound) {
  const auto& d = u1.desc;
  const int m = d->m;
  Matrix<K> M(static_cast<size_t>(m), std::vector<K>(static_cast<size_t>(m)));
  for (int j = 0; j < m; ++j) {
    auto e = basis_element(d, j);
    auto col = mul(e, u1) - mul(p, e);
    for (int i = 0; i < m; ++i) M[static_cast<size_t>(i)][static_cast<size_t>(j)] = col.c[static_cast<size_t>(i)];
  }
  auto kb = kernel_basis(M);
  if (kb.empty()) return std::nullopt;
  std::vector<AlgebraElement<K>> basis;
  for (auto& v : kb) basis.emplace_back(d, v);
  for (auto& th : basis)
    if (is_invertible(th)) return th;
  // bounded scan over small integer combinations, capped so high-dimensional
  // kernels (split presentations) cannot blow the search up
  const size_t kdim = basis.size();
  const long reach = kdim <= 2 ? height_bound : (kdim <= 4 ? std::min(height_bound, 3) : 1);
  long long combos_left = 2'000'000;
  std::vector<long> coef(kdim, 0);
  std::function<std::optional<AlgebraElement<K>>(size_t)> rec = [&](size_t idx) -> std::optional<AlgebraElement<K>> {
    if (combos_left <= 0) return std::nullopt;
    if (idx == kdim) {
      --combos_left;
      AlgebraElement<K> th = from_scalar(d, d->one.zero());
      bool all_zero = true;
      for (size_t i = 0; i < kdim; ++i) {
        if (coef[i] == 0) continue;
        all_zero = false;
        th = th + scale(detail::int_to_field(d->one, coef[i]), basis[i]);
      }
      if (!all_zero && is_invertible(th)) return th;
      return std::nullopt;
    }
    for (long v = -reach; v <= reach; ++v) {
      coef[idx] = v;
      if (auto r = rec(idx + 1)) return r;
    }
    return std::nullopt;
  };
  return rec(0);
}

}  // namespace detail

// Decide whether x and y lie in the same rational orbit. Three-valued:
// a verified witness, a certified distinction through the invariant, or an
// honest inconclusive when a bounded search ran out.
inline EquivResult<Rational> orbit_equivalent(const PairPoint<Rational>& x, const PairPoint<Rational>& y,
                                              int height_bound = 10) {
  using K = Rational;
  EquivResult<K> res;
  if (!desc_equal(*x.desc(), *y.desc())) throw std::domain_error("orbit_equivalent: descriptor mismatch");
  if (!is_semistable(x) || !is_semistable(y))
    throw std::domain_error("orbit_equivalent: both points must be semistable");

  auto cx = etale_class(x), cy = etale_class(y);
  Tri same = same_etale_class(cx, cy);
  if (same == Tri::False) {
    res.status = EquivStatus::Distinct;
    res.note = "etale classes differ: " + cx.to_string() + " vs " + cy.to_string();
    return res;
  }
  if (x.desc()->kind == AlgKind::SplitMatrix) {
    res.status = EquivStatus::Inconclusive;
    res.note = "witness search requires a division presentation";
    return res;
  }

  auto rx = reduce_to_monic(x, height_bound), ry = reduce_to_monic(y, height_bound);
  const auto& d = x.desc();
  const auto& u1 = rx.w;
  const auto& u2 = ry.w;
  const int n = d->n;

  Poly<K> m1 = char_poly(u1), m2 = char_poly(u2);
  std::vector<AlgebraElement<K>> conjugate_targets;  // roots of m1 inside Q[u2], as elements of D

  if (n == 2) {
    K t1 = reduced_trace(u1), t2 = reduced_trace(u2);
    K disc1 = poly_discriminant(m1), disc2 = poly_discriminant(m2);
    auto r2 = field_sqrt(disc1 / disc2);
    if (!r2) {
      // the invariant agreed yet the discriminant classes differ: only
      // possible when the class comparison was inconclusive
      res.status = EquivStatus::Inconclusive;
      res.note = "discriminant square classes could not be matched";
      return res;
    }
    const K half = K(1) / K(2);
    for (int sgn : {1, -1}) {
      K r = (sgn > 0) ? *r2 : -*r2;
      // p' = (t1 + r (2 u2 - t2)) / 2
      auto p = scale(half, from_scalar(d, t1) + scale(r, scale(K(2), u2) - from_scalar(d, t2)));
      conjugate_targets.push_back(p);
    }
  } else {
    auto ring = make_quot_ring(m2);  // Q[u2] abstractly
    auto fr = cubic_roots_in_cubic_field(m1, ring);
    if (fr.roots.empty()) {
      res.status = fr.complete ? EquivStatus::Distinct : EquivStatus::Inconclusive;
      res.note = fr.complete ? "defining cubics share no root: fields are not isomorphic"
                             : "root search exceeded the exact bounds";
      if (res.status == EquivStatus::Distinct) return res;
      return res;
    }
    for (auto& rho : fr.roots) {
      auto p = from_scalar(d, rho.coord(0)) + scale(rho.coord(1), u2) + scale(rho.coord(2), mul(u2, u2));
      conjugate_targets.push_back(p);
    }
  }

  for (const auto& p : conjugate_targets) {
    auto th = detail::conjugator(u1, p, height_bound);
    if (!th) continue;
    GroupElement<K> g_mid;
    if (n == 2) {
      // p = alpha + beta u2 with beta != 0; u2 = theta (a + b u1) theta^{-1}
      // for a = -alpha/beta, b = 1/beta
      Matrix<K> A(static_cast<size_t>(d->m), std::vector<K>(2));
      for (int i = 0; i < d->m; ++i) {
        A[static_cast<size_t>(i)][0] = identity(d).c[static_cast<size_t>(i)];
        A[static_cast<size_t>(i)][1] = u2.c[static_cast<size_t>(i)];
      }
      auto sol = solve_linear(A, p.c);
      if (!sol) throw std::logic_error("orbit_equivalent: p escaped Q[u2]");
      K alpha = (*sol)[0], beta = (*sol)[1];
      if (beta.is_zero()) continue;
      K a = -(alpha / beta), b = beta.inv();
      Matrix<K> g2{{K(1), K(0)}, {a, b}};
      g_mid = GroupElement<K>{{*th, invert(*th)}, g2};
    } else {
      // express p' = theta u1 theta^{-1} in Q[u2], then p = phi^{-1}(u2)
      Matrix<K> A(static_cast<size_t>(d->m), std::vector<K>(3));
      auto pp2 = mul(p, p);
      for (int i = 0; i < d->m; ++i) {
        A[static_cast<size_t>(i)][0] = identity(d).c[static_cast<size_t>(i)];
        A[static_cast<size_t>(i)][1] = p.c[static_cast<size_t>(i)];
        A[static_cast<size_t>(i)][2] = pp2.c[static_cast<size_t>(i)];
      }
      auto sol = solve_linear(A, u2.c);
      if (!sol) throw std::logic_error("orbit_equivalent: u2 escaped Q[p']");
      // u2 = w0 + w1 p' + w2 p'^2 = phi(w0 + w1 u1 + w2 u1^2)
      auto pelem = from_scalar(d, (*sol)[0]) + scale((*sol)[1], u1) + scale((*sol)[2], mul(u1, u1));
      // kernel of (a + b u1) p - (c + d u1)
      Matrix<K> Psi(static_cast<size_t>(d->m), std::vector<K>(4));
      auto u1p = mul(u1, pelem);
      for (int i = 0; i < d->m; ++i) {
        Psi[static_cast<size_t>(i)][0] = pelem.c[static_cast<size_t>(i)];
        Psi[static_cast<size_t>(i)][1] = u1p.c[static_cast<size_t>(i)];
        Psi[static_cast<size_t>(i)][2] = -identity(d).c[static_cast<size_t>(i)];
        Psi[static_cast<size_t>(i)][3] = -u1.c[static_cast<size_t>(i)];
      }
      auto kb = kernel_basis(Psi);
      if (kb.empty()) throw std::logic_error("orbit_equivalent: psi kernel is trivial");
      std::optional<GroupElement<K>> gm;
      for (auto& v : kb) {
        K a = v[0], b = v[1], c = v[2], dd = v[3];
        if ((a * dd - b * c).is_zero()) continue;
        auto lin = from_scalar(d, a) + scale(b, u1);
        if (!is_invertible(lin)) continue;
        Matrix<K> g2{{a, b}, {c, dd}};
        gm = GroupElement<K>{{mul(*th, invert(lin)), invert(*th)}, g2};
        break;
      }
      if (!gm) continue;
      g_mid = *gm;
    }
    auto g_total = ge_mul(ge_inverse(ry.g), ge_mul(g_mid, rx.g));
    if (act(g_total, x) == y) {
      res.status = EquivStatus::Equivalent;
      res.witness = make_orbit_witness(g_total, x, y);
      res.note = "verified witness";
      return res;
    }
  }

  res.status = EquivStatus::Inconclusive;
  res.note = "no verified conjugator within the height bound";
  return res;
}

}  // namespace pairalg
