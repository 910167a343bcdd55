#pragma once

// Shared helpers for the test suites: deterministic RNG and random scalars.
// Raw engine output is reduced by hand so streams are identical across
// platforms and standard libraries.

#include <random>

#include "pairalg/algebra.hpp"
#include "pairalg/fp.hpp"
#include "pairalg/rational.hpp"

namespace testutil {

using Rng = std::mt19937_64;

inline long long rand_int(Rng& rng, long long lo, long long hi) {
  return lo + static_cast<long long>(rng() % static_cast<unsigned long long>(hi - lo + 1));
}

// numerator in [-h,h], denominator in [1,h]
inline pairalg::Rational rand_rational(Rng& rng, long long h) {
  return pairalg::Rational(mpz_class(static_cast<long>(rand_int(rng, -h, h))),
                           mpz_class(static_cast<long>(rand_int(rng, 1, h))));
}

inline pairalg::Rational rand_rational_nonzero(Rng& rng, long long h) {
  while (true) {
    auto r = rand_rational(rng, h);
    if (!r.is_zero()) return r;
  }
}

inline pairalg::Fp rand_fp(Rng& rng, long long p) { return pairalg::Fp(rand_int(rng, 0, p - 1), p); }

inline pairalg::Fp rand_fp_nonzero(Rng& rng, long long p) {
  return pairalg::Fp(rand_int(rng, 1, p - 1), p);
}

// random algebra element with scalars drawn from `draw`
template <class K, class Draw>
pairalg::AlgebraElement<K> rand_element(Rng& rng, const pairalg::DescPtr<K>& d, Draw draw) {
  std::vector<K> c;
  c.reserve(static_cast<size_t>(d->m));
  for (int i = 0; i < d->m; ++i) c.push_back(draw(rng));
  return pairalg::AlgebraElement<K>(d, std::move(c));
}

template <class K, class Draw>
pairalg::AlgebraElement<K> rand_invertible(Rng& rng, const pairalg::DescPtr<K>& d, Draw draw) {
  while (true) {
    auto x = rand_element(rng, d, draw);
    if (pairalg::is_invertible(x)) return x;
  }
}

}  // namespace testutil
