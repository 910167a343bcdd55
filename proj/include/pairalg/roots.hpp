#pragma once

// Exact root extraction:
//   - rational roots of integer/rational polynomials (divisor enumeration at
//     desk scale, two-prime residue scan + CRT + rational reconstruction for
//     large coefficients, every candidate verified exactly),
//   - square roots inside Q, F_p and quadratic number fields (closed forms),
//   - roots of degree <= 3 polynomials inside the supported scalar fields,
//     including the trace/norm matching elimination that locates the roots of
//     a rational cubic inside a cubic number field.

#include <algorithm>
#include <optional>
#include <vector>

#include "errors.hpp"
#include "fp.hpp"
#include "intutil.hpp"
#include "poly.hpp"
#include "qring.hpp"
#include "rational.hpp"

namespace pairalg {

// ---------------------------------------------------------------------------
// square roots

inline std::optional<Rational> field_sqrt(const Rational& z) {
  if (z.sign() < 0) return std::nullopt;
  mpz_class n = z.num(), d = z.den();
  if (!is_square(n) || !is_square(d)) return std::nullopt;
  return Rational(isqrt(n), isqrt(d));
}

inline std::optional<Fp> field_sqrt(const Fp& z) {
  if (z.p > 2'000'000) throw unsupported_error("field_sqrt(Fp): modulus too large for scan");
  for (long long t = 0; t <= z.p / 2; ++t)
    if (mulmod_ll(t, t, z.p) == z.x) return Fp(t, z.p);
  return std::nullopt;
}

// Quadratic field: closed form. (a+b*th)^2 = z reduces to a rational
// quadratic in u = b^2. Cubic fields only support rational radicands; square
// roots of proper cubic-field elements are outside this library's scope.
inline std::optional<QRElem<Rational>> field_sqrt(const QRElem<Rational>& z) {
  const auto& ring = z.ring;
  const int d = ring->degree();
  if (z.is_base()) {
    if (auto r = field_sqrt(z.coord(0))) return QRElem<Rational>::from_base(ring, *r);
    // an odd-degree field adds no new rational squares
    if (d != 2) return std::nullopt;
  } else if (d == 3) {
    throw unsupported_error("field_sqrt: non-rational radicand in a cubic field");
  }
  if (d != 2) return std::nullopt;
  const Rational f1 = ring->modulus.coeff_or(1, Rational()), f0 = ring->modulus.coeff_or(0, Rational());
  const Rational z0 = z.coord(0), z1 = z.coord(1);
  const Rational two(2), four(4);
  const Rational A = f1 * f1 - four * f0;  // disc of the modulus, nonzero
  const Rational B = two * z1 * f1 - four * z0;
  const Rational C = z1 * z1;
  // rational roots u of A u^2 + B u + C, then beta = sqrt(u)
  auto du = field_sqrt(B * B - four * A * C);
  if (!du) return std::nullopt;
  for (int sgn : {1, -1}) {
    Rational u = (-B + (sgn > 0 ? *du : -*du)) / (two * A);
    if (u.is_zero()) continue;  // beta = 0 is the rational branch, handled above
    auto beta = field_sqrt(u);
    if (!beta || beta->is_zero()) continue;
    Rational alpha = (z1 + f1 * u) / (two * *beta);
    QRElem<Rational> cand(ring, poly_from<Rational>({alpha, *beta}));
    if (cand * cand == z) return cand;
  }
  return std::nullopt;
}

inline std::optional<QRElem<Fp>> field_sqrt(const QRElem<Fp>& z) {
  const long long p = z.base_one().p;
  const int d = z.ring->degree();
  double size = 1;
  for (int i = 0; i < d; ++i) size *= static_cast<double>(p);
  if (size > 2'000'000) throw unsupported_error("field_sqrt(F_q): field too large for scan");
  std::vector<long long> cur(static_cast<size_t>(d), 0);
  while (true) {
    std::vector<Fp> coeffs;
    for (long long v : cur) coeffs.emplace_back(v, p);
    QRElem<Fp> cand(z.ring, Poly<Fp>(coeffs));
    if (cand * cand == z) return cand;
    int i = 0;
    while (i < d && ++cur[static_cast<size_t>(i)] == p) cur[static_cast<size_t>(i++)] = 0;
    if (i == d) return std::nullopt;
  }
}

// ---------------------------------------------------------------------------
// rational roots

struct RationalRoots {
  std::vector<Rational> roots;  // with multiplicity
  bool complete = true;         // false when the search was height-bounded
};

namespace detail {

inline std::vector<mpz_class> divisors_of(const mpz_class& n) {
  std::vector<mpz_class> ds;
  for (auto& [p, e] : factor(n)) {
    size_t base = ds.size();
    if (ds.empty()) ds.push_back(1);
    base = ds.size();
    mpz_class pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (size_t i = 0; i < base; ++i) ds.push_back(ds[i] * pk);
    }
  }
  if (ds.empty()) ds.push_back(1);
  return ds;
}

// All roots mod p of the reduction of an integer polynomial (p ~ 10^6 scan).
inline std::vector<long long> roots_mod_p(const std::vector<mpz_class>& coef, long long p) {
  std::vector<long long> c(coef.size());
  bool all_zero = true;
  for (size_t i = 0; i < coef.size(); ++i) {
    c[i] = static_cast<long long>(mpz_fdiv_ui(coef[i].get_mpz_t(), static_cast<unsigned long>(p)));
    if (c[i]) all_zero = false;
  }
  std::vector<long long> out;
  if (all_zero) return out;  // caller treats as "no information"
  for (long long r = 0; r < p; ++r) {
    long long acc = 0;
    for (size_t i = c.size(); i-- > 0;) acc = (mulmod_ll(acc, r, p) + c[i]) % p;
    if (acc == 0) out.push_back(r);
  }
  return out;
}

}  // namespace detail

// Rational roots with multiplicity of f != 0 over Q.
inline RationalRoots rational_roots(const Poly<Rational>& f_in) {
  if (f_in.is_zero()) throw std::domain_error("rational_roots: zero polynomial");
  RationalRoots out;
  Poly<Rational> f = f_in;

  // strip roots at 0
  size_t z = 0;
  while (z < f.c.size() && f.c[z].is_zero()) ++z;
  for (size_t i = 0; i < z; ++i) out.roots.emplace_back(0);
  if (z) f.c.erase(f.c.begin(), f.c.begin() + static_cast<long>(z));

  while (f.degree() >= 1) {
    std::optional<Rational> root;
    if (f.degree() == 1) {
      root = -f.c[0] / f.c[1];
    } else if (f.degree() == 2) {
      auto s = field_sqrt(poly_discriminant(f));
      if (!s) break;
      root = (-f.c[1] + *s) / (Rational(2) * f.c[2]);
    } else {
      // primitive integer model
      mpz_class den = 1;
      for (auto& a : f.c) den = den / gcd(den, a.den()) * a.den();
      std::vector<mpz_class> ic(f.c.size());
      mpz_class content = 0;
      for (size_t i = 0; i < f.c.size(); ++i) {
        ic[i] = f.c[i].num() * (den / f.c[i].den());
        content = gcd(content, ic[i]);
      }
      for (auto& a : ic) a /= content;
      const mpz_class a0 = abs(ic.front()), al = abs(ic.back());
      const mpz_class small_bound = 1'000'000'000;
      if (a0 <= small_bound && al <= small_bound) {
        // divisor enumeration: complete by p | a0, q | a_lead
        auto ps = detail::divisors_of(a0), qs = detail::divisors_of(al);
        for (auto& p : ps) {
          for (auto& q : qs) {
            for (int s : {1, -1}) {
              Rational cand(s > 0 ? p : mpz_class(-p), q);
              if (f.eval(cand).is_zero()) { root = cand; break; }
            }
            if (root) break;
          }
          if (root) break;
        }
      } else {
        // multi-prime residue scan + CRT + rational reconstruction
        const std::vector<long> primes = {1'000'003, 1'000'033, 1'000'037};
        std::vector<std::vector<long long>> residues;
        for (long P : primes) residues.push_back(detail::roots_mod_p(ic, P));
        mpz_class M = 1;
        for (long P : primes) M *= P;
        const mpz_class B = isqrt(M / 2);
        std::vector<std::array<size_t, 3>> combos;
        for (size_t i = 0; i < residues[0].size() && !root; ++i)
          for (size_t j = 0; j < residues[1].size() && !root; ++j)
            for (size_t k = 0; k < residues[2].size() && !root; ++k) {
              mpz_class v = 0, mod = 1;
              std::array<long long, 3> rs{residues[0][i], residues[1][j], residues[2][k]};
              for (size_t t = 0; t < primes.size(); ++t) {
                // v := v + mod * ((rs[t] - v) / mod mod P_t)
                mpz_class diff = (mpz_class(static_cast<long>(rs[t])) - v) % primes[t];
                mpz_class step = diff * mod_inverse(mod % primes[t], mpz_class(primes[t])) % primes[t];
                if (step < 0) step += primes[t];
                v += mod * step;
                mod *= primes[t];
              }
              if (auto pq = rational_reconstruct(v, M, B)) {
                Rational cand(pq->first, pq->second);
                if (f.eval(cand).is_zero()) root = cand;
              }
            }
        if (!root) {
          // the divisor bound certifies completeness only when no root
          // denominator can be hidden by a scan prime (q | a_lead)
          bool denom_visible = true;
          for (long P : primes)
            if (al % P == 0) denom_visible = false;
          if (a0 > B || al > B || !denom_visible) out.complete = false;
        }
      }
    }
    if (!root) break;
    out.roots.push_back(*root);
    Poly<Rational> lin = poly_from<Rational>({-*root, Rational(1)});
    auto [q, r] = poly_divmod(f, lin);
    if (!r.is_zero()) throw std::logic_error("rational_roots: verified root fails to divide");
    f = q;
  }
  return out;
}

// ---------------------------------------------------------------------------
// number-field construction

// Q[v]/(f) with f monic irreducible of degree 2 or 3.
inline QuotRingPtr<Rational> make_number_field(const Poly<Rational>& f) {
  const int d = f.degree();
  if (d != 2 && d != 3) throw std::domain_error("make_number_field: degree must be 2 or 3");
  if (!(f.leading() == Rational(1))) throw std::domain_error("make_number_field: modulus must be monic");
  if (d == 2) {
    if (field_sqrt(poly_discriminant(f))) throw std::domain_error("make_number_field: reducible quadratic");
  } else {
    auto rr = rational_roots(f);
    if (!rr.complete) throw unsupported_error("make_number_field: irreducibility check exceeded bounds");
    if (!rr.roots.empty()) throw std::domain_error("make_number_field: reducible cubic");
  }
  return make_quot_ring(f);
}

// ---------------------------------------------------------------------------
// roots of a rational cubic inside a cubic number field
//
// x = a + b*th + c*th^2 is a root of the monic irreducible cubic g exactly
// when the characteristic polynomial of multiplication-by-x equals g. The
// trace condition eliminates a; the remaining two conditions are a quadratic
// and a cubic in (b,c), eliminated by a Sylvester resultant. All candidate
// coordinates are rational roots of univariate polynomials and every
// candidate is verified exactly in the field before being returned.

namespace detail {

using BPoly = Poly<Poly<Rational>>;  // outer variable b, inner variable c

inline BPoly bp_const(const Rational& r) { return BPoly(Poly<Rational>(r)); }

inline BPoly bp_b() { return poly_monomial(1, Poly<Rational>(Rational(1))); }

inline BPoly bp_c() { return BPoly(poly_monomial(1, Rational(1))); }

template <class R>
R det_ring(const Matrix<R>& m, const R& zero) {
  const size_t n = m.size();
  if (n == 0) throw std::domain_error("det_ring: empty");
  if (n <= 3) return det_small(m);
  R acc = zero;
  for (size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    Matrix<R> minor(n - 1, std::vector<R>(n - 1, zero));
    for (size_t r = 1; r < n; ++r) {
      size_t cc = 0;
      for (size_t col = 0; col < n; ++col) {
        if (col == j) continue;
        minor[r - 1][cc++] = m[r][col];
      }
    }
    R term = m[0][j] * det_ring(minor, zero);
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

// Resultant of p, q in the outer variable b; entries live in Q[c].
inline Poly<Rational> resultant_outer(const BPoly& p, const BPoly& q) {
  const int dp = p.degree(), dq = q.degree();
  if (dp < 0 || dq < 0) return Poly<Rational>();
  const size_t n = static_cast<size_t>(dp + dq);
  if (n == 0) return Poly<Rational>(Rational(1));
  const Poly<Rational> zero;
  Matrix<Poly<Rational>> syl(n, std::vector<Poly<Rational>>(n, zero));
  for (int i = 0; i < dq; ++i)
    for (int j = 0; j <= dp; ++j) syl[static_cast<size_t>(i)][static_cast<size_t>(i + j)] = p.coeff_or(dp - j, zero);
  for (int i = 0; i < dp; ++i)
    for (int j = 0; j <= dq; ++j)
      syl[static_cast<size_t>(dq + i)][static_cast<size_t>(i + j)] = q.coeff_or(dq - j, zero);
  return det_ring(syl, zero);
}

inline BPoly bp_subst_b(const BPoly& p, const BPoly& new_b) {
  BPoly acc;
  for (size_t i = p.c.size(); i-- > 0;) acc = acc * new_b + BPoly(p.c[i]);
  return acc;
}

inline Poly<Rational> bp_eval_inner(const BPoly& p, const Rational& cval) {
  std::vector<Rational> coeffs;
  for (auto& inner : p.c) coeffs.push_back(inner.eval(cval));
  return Poly<Rational>(coeffs);
}

}  // namespace detail

struct FieldRoots {
  std::vector<QRElem<Rational>> roots;
  bool complete = true;
};

inline FieldRoots cubic_roots_in_cubic_field(const Poly<Rational>& g_in, const QuotRingPtr<Rational>& ring) {
  if (ring->degree() != 3 || g_in.degree() != 3)
    throw std::domain_error("cubic_roots_in_cubic_field: need cubic over cubic");
  const Poly<Rational> g = poly_monic(g_in);
  const Rational g2 = g.coeff(2), g1 = g.coeff(1), g0 = g.coeff(0);

  const auto th = QRElem<Rational>::generator(ring);
  const auto mth = mult_matrix(th);
  const auto mth2 = mat_mul(mth, mth);
  const Rational t1 = mth[0][0] + mth[1][1] + mth[2][2];
  const Rational t2 = mth2[0][0] + mth2[1][1] + mth2[2][2];

  using detail::BPoly;
  const Rational third = Rational(1) / Rational(3);
  // a(b,c) from the trace condition  3a + b tr(th) + c tr(th^2) = -g2
  const BPoly a = detail::bp_const(-g2 * third) - detail::bp_b() * detail::bp_const(t1 * third) -
                  detail::bp_c() * detail::bp_const(t2 * third);

  FieldRoots out;
  for (int shear = 0; shear <= 3; ++shear) {
    // optional substitution b -> b + shear*c to dodge degenerate eliminations
    BPoly bvar = detail::bp_b() + detail::bp_c() * detail::bp_const(Rational(shear));
    Matrix<BPoly> mx(3, std::vector<BPoly>(3));
    BPoly asub = detail::bp_subst_b(a, bvar);
    for (size_t i = 0; i < 3; ++i)
      for (size_t j = 0; j < 3; ++j) {
        BPoly e = bvar * detail::bp_const(mth[i][j]) + detail::bp_c() * detail::bp_const(mth2[i][j]);
        if (i == j) e = e + asub;
        mx[i][j] = e;
      }
    BPoly trsq;
    {
      auto sq = mat_mul(mx, mx);
      trsq = sq[0][0] + sq[1][1] + sq[2][2];
    }
    const Rational half = Rational(1) / Rational(2);
    BPoly e2 = (detail::bp_const(g2 * g2) - trsq) * detail::bp_const(half);
    BPoly e3 = det_small(mx);
    BPoly E2 = e2 - detail::bp_const(g1);
    BPoly E3 = e3 + detail::bp_const(g0);

    Poly<Rational> res = detail::resultant_outer(E2, E3);
    if (res.is_zero()) continue;  // try the next shear

    auto cr = rational_roots(res);
    bool inner_complete = cr.complete;
    std::vector<QRElem<Rational>> found;
    std::sort(cr.roots.begin(), cr.roots.end());
    cr.roots.erase(std::unique(cr.roots.begin(), cr.roots.end()), cr.roots.end());
    for (const Rational& cv : cr.roots) {
      Poly<Rational> p2 = detail::bp_eval_inner(E2, cv), p3 = detail::bp_eval_inner(E3, cv);
      Poly<Rational> h = p2.is_zero() ? p3 : (p3.is_zero() ? p2 : poly_gcd(p2, p3));
      if (h.is_zero() || h.degree() < 1) continue;
      auto br = rational_roots(h);
      inner_complete = inner_complete && br.complete;
      for (const Rational& bv : br.roots) {
        Rational breal = bv + Rational(shear) * cv;  // undo the shear
        Rational av = (-g2 - t1 * breal - t2 * cv) * third;
        QRElem<Rational> x(ring, poly_from<Rational>({av, breal, cv}));
        // verify g(x) = 0 inside the field before accepting the candidate
        QRElem<Rational> gx = QRElem<Rational>::from_base(ring, g.coeff(3));
        for (int k = 2; k >= 0; --k) gx = gx * x + QRElem<Rational>::from_base(ring, g.coeff(k));
        if (gx.is_zero()) found.push_back(x);
      }
    }
    std::sort(found.begin(), found.end(), [](const auto& x, const auto& y) {
      for (int i = 0; i < 3; ++i) {
        if (x.coord(i) < y.coord(i)) return true;
        if (y.coord(i) < x.coord(i)) return false;
      }
      return false;
    });
    found.erase(std::unique(found.begin(), found.end()), found.end());
    out.roots = std::move(found);
    out.complete = inner_complete;
    return out;
  }
  out.complete = false;  // every elimination degenerated; report honestly
  return out;
}

// ---------------------------------------------------------------------------
// poly_roots_in_field

// Roots (with multiplicity) of f, deg f in {1,2,3}, lying in the field of
// `ctx`. The context argument supplies the field (modulus for F_p, the ring
// for extensions).

inline std::vector<Rational> poly_roots_in_field(const Poly<Rational>& f, const Rational&) {
  if (f.degree() < 1 || f.degree() > 3) throw unsupported_error("poly_roots_in_field: degree must be 1..3");
  auto rr = rational_roots(f);
  if (!rr.complete) throw unsupported_error("poly_roots_in_field: coefficients exceed the exact search bound");
  return rr.roots;
}

inline std::vector<Fp> poly_roots_in_field(const Poly<Fp>& f, const Fp& ctx) {
  if (f.degree() < 1 || f.degree() > 3) throw unsupported_error("poly_roots_in_field: degree must be 1..3");
  const long long p = ctx.p;
  if (p > 2'000'000) throw unsupported_error("poly_roots_in_field(Fp): modulus too large for scan");
  std::vector<Fp> out;
  Poly<Fp> g = f;
  for (long long r = 0; r < p && g.degree() >= 1; ++r) {
    Fp x(r, p);
    while (g.degree() >= 1 && g.eval(x).is_zero()) {
      out.push_back(x);
      g = poly_divmod(g, poly_from<Fp>({-x, ctx.one()})).first;
    }
  }
  return out;
}

inline std::vector<QRElem<Rational>> poly_roots_in_field(const Poly<QRElem<Rational>>& f,
                                                         const QRElem<Rational>& ctx) {
  if (f.degree() < 1 || f.degree() > 3) throw unsupported_error("poly_roots_in_field: degree must be 1..3");
  const auto& ring = ctx.ring;
  std::vector<QRElem<Rational>> out;
  Poly<QRElem<Rational>> g = f;

  auto peel = [&](const QRElem<Rational>& r) {
    out.push_back(r);
    g = poly_divmod(g, poly_from<QRElem<Rational>>({-r, ctx.one()})).first;
  };

  while (g.degree() >= 1) {
    if (g.degree() == 1) {
      peel(-g.coeff(0) / g.coeff(1));
      continue;
    }
    if (g.degree() == 2) {
      auto s = field_sqrt(poly_discriminant(g));
      if (!s) break;
      auto two = ctx.one() + ctx.one();
      peel((-g.coeff(1) + *s) / (two * g.coeff(2)));
      continue;
    }
    // degree 3: supported for rational-coefficient polynomials
    bool rational_coeffs = true;
    for (auto& a : g.c) rational_coeffs = rational_coeffs && a.is_base();
    if (!rational_coeffs)
      throw unsupported_error("poly_roots_in_field: cubic with non-rational coefficients over a number field");
    std::vector<Rational> qc;
    for (auto& a : g.c) qc.push_back(a.coord(0));
    Poly<Rational> gq(qc);
    auto rr = rational_roots(gq);
    if (!rr.complete) throw unsupported_error("poly_roots_in_field: coefficients exceed the exact search bound");
    if (!rr.roots.empty()) {
      peel(QRElem<Rational>::from_base(ring, rr.roots.front()));
      continue;
    }
    // irreducible rational cubic: roots exist only in a cubic field
    if (ring->degree() != 3) break;
    auto fr = cubic_roots_in_cubic_field(gq, ring);
    if (!fr.complete && fr.roots.empty())
      throw unsupported_error("poly_roots_in_field: elimination left the search incomplete");
    for (auto& r : fr.roots) out.push_back(r);
    break;  // irreducible and separable: multiplicity one, all roots found
  }
  return out;
}

inline std::vector<QRElem<Fp>> poly_roots_in_field(const Poly<QRElem<Fp>>& f, const QRElem<Fp>& ctx) {
  if (f.degree() < 1 || f.degree() > 3) throw unsupported_error("poly_roots_in_field: degree must be 1..3");
  const long long p = ctx.base_one().p;
  const int d = ctx.ring->degree();
  double size = 1;
  for (int i = 0; i < d; ++i) size *= static_cast<double>(p);
  if (size > 2'000'000) throw unsupported_error("poly_roots_in_field(F_q): field too large for scan");
  std::vector<QRElem<Fp>> out;
  Poly<QRElem<Fp>> g = f;
  std::vector<long long> cur(static_cast<size_t>(d), 0);
  while (g.degree() >= 1) {
    std::vector<Fp> coeffs;
    for (long long v : cur) coeffs.emplace_back(v, p);
    QRElem<Fp> x(ctx.ring, Poly<Fp>(coeffs));
    while (g.degree() >= 1 && g.eval(x).is_zero()) {
      out.push_back(x);
      g = poly_divmod(g, poly_from<QRElem<Fp>>({-x, ctx.one()})).first;
    }
    int i = 0;
    while (i < d && ++cur[static_cast<size_t>(i)] == p) cur[static_cast<size_t>(i++)] = 0;
    if (i == d) break;
  }
  return out;
}

}  // namespace pairalg
