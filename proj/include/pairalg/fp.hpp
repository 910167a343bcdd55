#pragma once

// Prime-field scalars F_p with a runtime modulus. Every element carries its
// modulus; mixed-modulus arithmetic is a hard error rather than a silent wrap.

#include <cstdint>
#include <stdexcept>
#include <string>

#include "intutil.hpp"

namespace pairalg {

struct Fp {
  long long p = 0;  // prime modulus; 0 only for the default-constructed sentinel
  long long x = 0;  // value in [0, p)

  Fp() = default;
  Fp(long long value, long long modulus) : p(modulus) {
    if (modulus < 2) throw std::domain_error("Fp: modulus must be >= 2");
    x = value % p;
    if (x < 0) x += p;
  }

  static Fp make(long long value, long long prime) {
    if (!is_prime_ll(prime)) throw std::domain_error("Fp: modulus not prime");
    return Fp(value, prime);
  }

  Fp zero() const { return Fp(0, p); }
  Fp one() const { return Fp(1, p); }
  bool is_zero() const { return x == 0; }

  void check(const Fp& o) const {
    if (p != o.p) throw std::domain_error("Fp: modulus mismatch");
  }

  Fp operator-() const { return Fp(p - x, p); }
  Fp operator+(const Fp& o) const { check(o); return Fp(x + o.x, p); }
  Fp operator-(const Fp& o) const { check(o); return Fp(x - o.x + p, p); }
  Fp operator*(const Fp& o) const { check(o); return Fp(mulmod_ll(x, o.x, p), p); }
  Fp& operator+=(const Fp& o) { *this = *this + o; return *this; }
  Fp& operator-=(const Fp& o) { *this = *this - o; return *this; }
  Fp& operator*=(const Fp& o) { *this = *this * o; return *this; }

  Fp inv() const {
    if (x == 0) throw std::domain_error("Fp: inverse of zero");
    return Fp(powmod_ll(x, p - 2, p), p);
  }
  Fp operator/(const Fp& o) const { return *this * o.inv(); }

  bool operator==(const Fp& o) const { return p == o.p && x == o.x; }
  bool operator!=(const Fp& o) const { return !(*this == o); }

  std::string to_string() const { return std::to_string(x); }
};

}  // namespace pairalg
