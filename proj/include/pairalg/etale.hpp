#pragma once

// The orbit invariant: the isomorphism class of the etale algebra
// k~(x) = k[v]/(F_x(v,1)), normalized per base field:
//   - n=2 over Q: the unique squarefree integer d with class Q(sqrt d)
//     (d=1 meaning QxQ), read off the squarefree part of P(x);
//   - n=3 over Q: the factorization type, with the squarefree d of the
//     quadratic factor, or a shift-reduced monic integer cubic for the
//     field case;
//   - over F_q: the splitting type {q x q, q^2} or {q x q x q, q x q^2, q^3}
//     from the projective root count.
//
// Shift reduction is not a complete isomorphism invariant for cubic fields,
// so label comparison is three-valued: equality and inequality are only
// reported when certified (verified root match inside the other field, a
// non-square discriminant product, or differing factorization shapes at a
// good prime); otherwise the comparison is inconclusive.

#include <algorithm>
#include <string>
#include <vector>

#include "errors.hpp"
#include "pvs.hpp"
#include "roots.hpp"

namespace pairalg {

enum class Tri { False = 0, True = 1, Unknown = 2 };

struct EtaleClass {
  int degree = 0;               // 2 or 3
  std::vector<int> split_type;  // sorted local degrees: {1,1},{2},{1,1,1},{1,2},{3}
  mpz_class d = 1;              // squarefree disc of the (unique) quadratic factor, 1 if none
  Poly<Rational> cubic;         // reduced defining cubic for the field case over Q
  bool over_q = true;

  bool is_field() const { return split_type.size() == 1; }

  std::string to_string() const {
    if (!over_q) {
      if (degree == 2) return split_type == std::vector<int>{1, 1} ? "qxq" : "q2";
      if (split_type == std::vector<int>{1, 1, 1}) return "qxqxq";
      if (split_type == std::vector<int>{1, 2}) return "qxq2";
      return "q3";
    }
    if (degree == 2) return d == 1 ? "QxQ" : "Q(sqrt " + d.get_str() + ")";
    if (split_type == std::vector<int>{1, 1, 1}) return "QxQxQ";
    if (split_type == std::vector<int>{1, 2}) return "QxQ(sqrt " + d.get_str() + ")";
    return "cubic:" + cubic.to_string();
  }
};

namespace detail {

inline mpz_class squarefree_of_rational(const Rational& r) {
  // p/q and p*q agree modulo squares
  return squarefree_part(r.num() * r.den());
}

// Greedy GL_2(Z) reduction of a binary cubic: repeatedly apply unit shears
// and the swap while they shrink the largest primitive-integer coefficient.
// Group translates of small forms collapse back to small models this way.
inline BinaryForm<Rational> reduce_binary_cubic(BinaryForm<Rational> F) {
  auto key = [](const BinaryForm<Rational>& f) {
    mpz_class den = 1, best = 0;
    for (auto& cc : f.c) den = den / gcd(den, cc.den()) * cc.den();
    mpz_class content = 0;
    std::vector<mpz_class> ic;
    for (auto& cc : f.c) {
      ic.push_back(cc.num() * (den / cc.den()));
      content = gcd(content, ic.back());
    }
    for (auto& v : ic) {
      mpz_class a = abs(v / content);
      if (a > best) best = a;
    }
    return best;
  };
  const std::vector<Matrix<Rational>> moves = {
      {{Rational(1), Rational(0)}, {Rational(1), Rational(1)}},
      {{Rational(1), Rational(0)}, {Rational(-1), Rational(1)}},
      {{Rational(1), Rational(1)}, {Rational(0), Rational(1)}},
      {{Rational(1), Rational(-1)}, {Rational(0), Rational(1)}},
      {{Rational(0), Rational(1)}, {Rational(1), Rational(0)}}};
  mpz_class cur = key(F);
  for (int iter = 0; iter < 200; ++iter) {
    bool improved = false;
    for (auto& mv : moves) {
      auto cand = form_compose_right(F, mv);
      mpz_class k = key(cand);
      if (k < cur) {
        F = cand;
        cur = k;
        improved = true;
        break;
      }
    }
    if (!improved) break;
  }
  return F;
}

// undo v -> s v inflation: the largest s with s | B, s^2 | C, s^3 | D
inline Poly<Rational> descale_monic_cubic(const Poly<Rational>& h) {
  mpz_class B = h.coeff(2).num(), C = h.coeff(1).num(), D = h.coeff(0).num();
  mpz_class s = 1;
  mpz_class g = abs(gcd(gcd(B, C), D));
  // bounded prime extraction; an incomplete descale only costs label size
  for (mpz_class p = 2; p * p <= g && p <= 100000; p += (p == 2 ? 1 : 2)) {
    while (g % p == 0) {
      mpz_class ps = p * s;
      if (B % ps == 0 && C % (ps * ps) == 0 && D % (ps * ps * ps) == 0) {
        s = ps;
        g /= p;
      } else {
        while (g % p == 0) g /= p;
        break;
      }
    }
  }
  if (s == 1) return h;
  return Poly<Rational>(std::vector<Rational>{Rational(mpz_class(D / (s * s * s))),
                                              Rational(mpz_class(C / (s * s))),
                                              Rational(mpz_class(B / s)), Rational(1)});
}

// monic integer model of an irreducible rational cubic, then the
// coefficient-minimal integer shift v -> v + t
inline Poly<Rational> canonical_cubic(const Poly<Rational>& g) {
  mpz_class den = 1;
  for (auto& cc : g.c) den = den / gcd(den, cc.den()) * cc.den();
  std::vector<mpz_class> ic(4);
  for (int i = 0; i <= 3; ++i) {
    Rational c = g.coeff(i);
    ic[static_cast<size_t>(i)] = c.num() * (den / c.den());
  }
  mpz_class content = 0;
  for (auto& v : ic) content = gcd(content, v);
  for (auto& v : ic) v /= content;
  if (ic[3] < 0)
    for (auto& v : ic) v = -v;
  // v^3 + b v^2 + (ac) v + a^2 d
  mpz_class a = ic[3], b = ic[2], c = ic[1], dd = ic[0];
  Poly<Rational> h(std::vector<Rational>{Rational(mpz_class(a * a * dd)), Rational(mpz_class(a * c)),
                                         Rational(b), Rational(1)});
  h = descale_monic_cubic(h);

  // center the quadratic coefficient, then take the lexicographic minimum
  mpz_class t0 = -h.coeff(2).num() / 3;
  Poly<Rational> best;
  auto key = [](const Poly<Rational>& f) {
    mpz_class b2 = abs(f.coeff(2).num()), c1 = abs(f.coeff(1).num()), d0 = abs(f.coeff(0).num());
    return std::array<mpz_class, 6>{b2, c1, d0, f.coeff(2).num(), f.coeff(1).num(), f.coeff(0).num()};
  };
  for (mpz_class t = t0 - 2; t <= t0 + 2; ++t) {
    Poly<Rational> cand = descale_monic_cubic(h.shifted(Rational(t)));
    if (best.is_zero() || key(cand) < key(best)) best = cand;
  }
  return best;
}

}  // namespace detail

// n=3 cubic-field isomorphism test, three-valued and certificate-based.
inline Tri cubic_fields_isomorphic(const Poly<Rational>& f1, const Poly<Rational>& f2) {
  if (f1 == f2) return Tri::True;
  Rational d1 = poly_discriminant(f1), d2 = poly_discriminant(f2);
  if (!field_sqrt(d1 * d2)) return Tri::False;  // disc product must be square

  // factorization shapes at good primes must agree
  auto root_count_mod = [](const Poly<Rational>& f, long p) {
    int cnt = 0;
    for (long r = 0; r < p; ++r) {
      mpz_class v = 0;
      for (size_t i = f.c.size(); i-- > 0;) v = v * r + f.c[i].num();
      if (v % p == 0) ++cnt;
    }
    return cnt;
  };
  mpz_class bad = d1.num() * d1.den() * d2.num() * d2.den();
  for (long p : {5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L, 41L, 43L, 47L, 53L, 59L, 61L,
                 67L, 71L, 73L, 79L, 83L, 89L, 97L, 101L, 103L, 107L, 109L, 113L}) {
    if (bad % p == 0) continue;
    if (root_count_mod(f1, p) != root_count_mod(f2, p)) return Tri::False;
  }

  // certify isomorphism by an exact root match
  auto ring = make_quot_ring(f2);
  auto fr = cubic_roots_in_cubic_field(f1, ring);
  if (!fr.roots.empty()) return Tri::True;
  if (fr.complete) return Tri::False;
  return Tri::Unknown;
}

inline Tri same_etale_class(const EtaleClass& a, const EtaleClass& b) {
  if (a.degree != b.degree || a.over_q != b.over_q) return Tri::False;
  if (a.split_type != b.split_type) return Tri::False;
  if (!a.over_q) return Tri::True;  // over F_q the type is the class
  if (a.degree == 2 || !a.is_field()) return a.d == b.d ? Tri::True : Tri::False;
  return cubic_fields_isomorphic(a.cubic, b.cubic);
}

// ---------------------------------------------------------------------------
// the invariant itself

inline EtaleClass etale_class(const PairPoint<Rational>& x) {
  if (!is_semistable(x)) throw std::domain_error("etale_class: point must be semistable");
  auto F = form_of(x);
  EtaleClass out;
  out.degree = F.n;
  out.over_q = true;
  if (F.n == 2) {
    out.d = detail::squarefree_of_rational(binary_disc(F));
    out.split_type = (out.d == 1) ? std::vector<int>{1, 1} : std::vector<int>{2};
    return out;
  }
  // reduce the form first: group translates otherwise inflate the integer
  // models beyond the exact root-search bounds
  F = detail::reduce_binary_cubic(F);
  // dehomogenize: F(v,1) with a root at infinity when F.c[0] = 0
  Poly<Rational> f(std::vector<Rational>{F.c[3], F.c[2], F.c[1], F.c[0]});
  int inf_roots = 3 - (f.is_zero() ? 0 : f.degree());
  auto rr = rational_roots(f);
  if (!rr.complete) throw unsupported_error("etale_class: rational-root search exceeded bounds");
  int nrat = static_cast<int>(rr.roots.size()) + inf_roots;
  if (nrat == 3) {
    out.split_type = {1, 1, 1};
    return out;
  }
  if (nrat == 1) {
    out.split_type = {1, 2};
    Poly<Rational> quad = f;
    if (inf_roots == 0) {
      Poly<Rational> lin(std::vector<Rational>{-rr.roots[0], Rational(1)});
      quad = poly_divmod(f, lin).first;
    }
    out.d = detail::squarefree_of_rational(poly_discriminant(quad));
    return out;
  }
  out.split_type = {3};
  out.cubic = detail::canonical_cubic(f);
  return out;
}

inline EtaleClass etale_class(const PairPoint<Fp>& x) {
  if (!is_semistable(x)) throw std::domain_error("etale_class: point must be semistable");
  auto F = form_of(x);
  const long long q = x.desc()->one.p;
  int zeros = F.c[0].is_zero() ? 1 : 0;  // the point at infinity (1:0)
  for (long long k = 0; k < q; ++k) {
    Fp v(k, q), acc = F.c[0];
    for (int i = 1; i <= F.n; ++i) acc = acc * v + F.c[static_cast<size_t>(i)];
    // acc = F(v,1) by Horner in the first slot... evaluate F(k,1)
    if (acc.is_zero()) ++zeros;
  }
  EtaleClass out;
  out.degree = F.n;
  out.over_q = false;
  if (F.n == 2)
    out.split_type = (zeros == 2) ? std::vector<int>{1, 1} : std::vector<int>{2};
  else if (zeros == 3)
    out.split_type = {1, 1, 1};
  else if (zeros == 1)
    out.split_type = {1, 2};
  else
    out.split_type = {3};
  return out;
}

}  // namespace pairalg
