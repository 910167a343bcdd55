#pragma once

// Small exact integer helpers on top of GMP: primes, squarefree parts,
// residue symbols, CRT and rational reconstruction.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace pairalg {

inline bool is_prime(const mpz_class& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

inline bool is_prime_ll(long long n) { return is_prime(mpz_class(static_cast<long>(n))); }

inline mpz_class gcd(const mpz_class& a, const mpz_class& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline bool is_square(const mpz_class& n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

inline mpz_class isqrt(const mpz_class& n) {
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

// Trial-division factorization. Intended for desk-scale integers; throws if a
// composite cofactor survives the bound.
inline std::vector<std::pair<mpz_class, int>> factor(mpz_class n, unsigned long bound = 2'000'000) {
  if (n == 0) throw std::invalid_argument("factor: zero");
  std::vector<std::pair<mpz_class, int>> out;
  n = abs(n);
  for (mpz_class p = 2; p * p <= n && p <= bound; p += (p == 2 ? 1 : 2)) {
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) { n /= p; ++e; }
      out.emplace_back(p, e);
    }
  }
  if (n > 1) {
    if (!is_prime(n)) throw std::runtime_error("factor: composite cofactor beyond trial bound");
    out.emplace_back(n, 1);
  }
  return out;
}

// Squarefree part keeping the sign: n = s^2 * d with d squarefree.
inline mpz_class squarefree_part(const mpz_class& n) {
  if (n == 0) return 0;
  mpz_class d = n < 0 ? -1 : 1;
  for (auto& [p, e] : factor(n)) {
    if (e % 2) d *= p;
  }
  return d;
}

inline long long mulmod_ll(long long a, long long b, long long m) {
  return static_cast<long long>((static_cast<__int128>(a) * b) % m);
}

inline long long powmod_ll(long long a, long long e, long long m) {
  long long r = 1 % m;
  a %= m;
  if (a < 0) a += m;
  while (e > 0) {
    if (e & 1) r = mulmod_ll(r, a, m);
    a = mulmod_ll(a, a, m);
    e >>= 1;
  }
  return r;
}

// Legendre symbol (a/p), p an odd prime.
inline int legendre(long long a, long long p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) return 0;
  long long r = powmod_ll(a, (p - 1) / 2, p);
  return r == 1 ? 1 : -1;
}

// Kronecker symbol (a/n), full extension (handles n <= 0 and even n).
inline int kronecker(mpz_class a, mpz_class n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  int r = 1;
  if (n < 0) {
    n = -n;
    if (a < 0) r = -r;
  }
  // (a/2) factor per the standard rule; any factor of 2 kills even a
  int v = 0;
  while (n % 2 == 0) { n /= 2; ++v; }
  if (v > 0 && a % 2 == 0) return 0;
  if (v % 2) {
    long long am8 = mpz_class(a % 8).get_si();
    if (am8 < 0) am8 += 8;
    if (am8 == 3 || am8 == 5) r = -r;
  }
  a %= n;
  if (a < 0) a += n;
  while (a != 0) {
    int w = 0;
    while (a % 2 == 0) { a /= 2; ++w; }
    if (w % 2) {
      long long nm8 = mpz_class(n % 8).get_si();
      if (nm8 == 3 || nm8 == 5) r = -r;
    }
    // quadratic reciprocity flip
    if (mpz_class(a % 4) == 3 && mpz_class(n % 4) == 3) r = -r;
    std::swap(a, n);
    a %= n;
  }
  return n == 1 ? r : 0;
}

inline mpz_class mod_inverse(const mpz_class& a, const mpz_class& m) {
  mpz_class r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw std::domain_error("mod_inverse: not invertible");
  return r;
}

// Rational reconstruction: the unique p/q with value = p * q^-1 mod m,
// |p| <= bound, 0 < q <= bound, gcd(q,m)=1, if it exists (needs 2*bound^2 < m).
inline std::optional<std::pair<mpz_class, mpz_class>> rational_reconstruct(mpz_class value,
                                                                           const mpz_class& m,
                                                                           const mpz_class& bound) {
  value %= m;
  if (value < 0) value += m;
  mpz_class r0 = m, r1 = value, t0 = 0, t1 = 1;
  while (r1 > bound) {
    mpz_class q = r0 / r1;
    mpz_class r2 = r0 - q * r1, t2 = t0 - q * t1;
    r0 = r1; r1 = r2;
    t0 = t1; t1 = t2;
  }
  if (t1 == 0) return std::nullopt;
  if (t1 < 0) { t1 = -t1; r1 = -r1; }
  if (t1 > bound) return std::nullopt;
  if (gcd(r1, t1) != 1) return std::nullopt;
  return std::make_pair(r1, t1);
}

inline long long primitive_root_mod(long long p) {
  if (p == 2) return 1;
  std::vector<long long> qs;
  long long phi = p - 1, m = phi;
  for (long long q = 2; q * q <= m; ++q)
    if (m % q == 0) {
      qs.push_back(q);
      while (m % q == 0) m /= q;
    }
  if (m > 1) qs.push_back(m);
  for (long long g = 2; g < p; ++g) {
    bool ok = true;
    for (long long q : qs)
      if (powmod_ll(g, phi / q, p) == 1) { ok = false; break; }
    if (ok) return g;
  }
  throw std::runtime_error("primitive_root_mod: none found");
}

}  // namespace pairalg
