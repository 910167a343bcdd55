#pragma once

// The computable, explicitly floating-point side of the artifact: the
// completed zeta factor Z(s) = pi^{-s/2} Gamma(s/2) zeta(s) over Q and the
// constants c, rho, V2 derived from it; exact lattice-point counts for the
// quaternion orders (per-norm counts by convolution of sum-of-two-squares
// counts) with fitted growth exponents; truncated L(1,chi_D) sums with a
// crude reported tail bound; the analytic h/hR values; and the filtered
// h^2 R^2 density accumulator over fundamental discriminants.
//
// Nothing in the exact modules depends on anything here.

#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "errors.hpp"
#include "etale.hpp"
#include "localglobal.hpp"
#include "pvs.hpp"

namespace pairalg {

// ---------------------------------------------------------------------------
// Z(s) and the derived constants

namespace detail {

// Euler-Maclaurin zeta, >= 12 correct digits for real s > 1
inline double zeta_em(double s) {
  const int N = 24;
  double sum = 0;
  for (int n = 1; n < N; ++n) sum += std::pow(n, -s);
  double Ns = std::pow(N, -s);
  sum += Ns * N / (s - 1);  // N^{1-s}/(s-1)
  sum += 0.5 * Ns;
  // Bernoulli tail: B_2k / (2k)! * s(s+1)...(s+2k-2) * N^{-s-2k+1}
  static const double bern[] = {1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30, 5.0 / 66, -691.0 / 2730};
  double poch = s;          // rising factorial s (s+1) ...
  double fact = 2;          // (2k)!
  double npow = Ns / N;     // N^{-s-2k+1} at k=1
  for (int k = 1; k <= 6; ++k) {
    sum += bern[k - 1] / fact * poch * npow;
    poch *= (s + 2 * k - 1) * (s + 2 * k);
    fact *= (2 * k + 1) * (2 * k + 2);
    npow /= static_cast<double>(N) * N;
  }
  return sum;
}

}  // namespace detail

// Z(s) = pi^{-s/2} Gamma(s/2) zeta(s) for the rationals (r1=1, r2=0, disc 1)
inline double Zk(double s) {
  if (!(s > 1)) throw std::domain_error("Zk: needs s > 1");
  return std::pow(M_PI, -s / 2) * std::tgamma(s / 2) * detail::zeta_em(s);
}

struct ZetaConstants {
  int r1 = 1, r2 = 0;
  double h = 1, R = 1, Delta = 1;
  int e = 2;        // roots of unity in Q
  double c_k = 1;   // 2^{r1} (2 pi)^{r2} h R / e
  double varrho;    // c_k / Z(2)
  double V2;        // 1 / varrho = Z(2) / c_k
};

inline ZetaConstants zeta_constants() {
  ZetaConstants z;
  z.c_k = std::pow(2.0, z.r1) * std::pow(2 * M_PI, z.r2) * z.h * z.R / z.e;
  double z2 = Zk(2.0);
  z.V2 = z2 / z.c_k;
  z.varrho = z.c_k / z2;
  return z;
}

// ---------------------------------------------------------------------------
// lattice counting in the quaternion orders

enum class QuaternionOrder { Lipschitz, Hurwitz };

struct CountRecord {
  long long bound = 0;            // X
  unsigned long long count = 0;   // N(X) = #{0 < N(x) <= X}
  double fitted_exponent = 0;     // least-squares slope of log N against log X
  double pointwise_ratio = 0;     // log N(X) / log X at the largest X
};

struct ZwCount {
  QuaternionOrder order;
  std::vector<unsigned long long> per_norm;  // r(n), n = 0..X
  std::vector<CountRecord> checkpoints;      // geometric, largest last
};

inline ZwCount zw_partial_count(QuaternionOrder order, long long X,
                                unsigned long long budget = 400'000'000ULL) {
  if (X < 10) throw std::domain_error("zw_partial_count: X must be >= 10");
  if (static_cast<unsigned long long>(X) * static_cast<unsigned long long>(X) > budget)
    throw budget_error("zw_partial_count: X^2 convolution exceeds the budget");

  const long long R = static_cast<long long>(std::sqrt(static_cast<double>(X))) + 2;
  std::vector<unsigned long long> c2(static_cast<size_t>(X) + 1, 0);
  for (long long a = -R; a <= R; ++a)
    for (long long b = -R; b <= R; ++b) {
      long long n = a * a + b * b;
      if (n <= X) ++c2[static_cast<size_t>(n)];
    }
  ZwCount out;
  out.order = order;
  out.per_norm.assign(static_cast<size_t>(X) + 1, 0);
  for (long long i = 0; i <= X; ++i) {
    if (!c2[static_cast<size_t>(i)]) continue;
    for (long long j = 0; i + j <= X; ++j)
      out.per_norm[static_cast<size_t>(i + j)] += c2[static_cast<size_t>(i)] * c2[static_cast<size_t>(j)];
  }
  if (order == QuaternionOrder::Hurwitz) {
    // add the half-integer points: all coordinates in Z + 1/2, norm n means
    // the doubled coordinates are odd with square sum 4n
    const long long Y = 4 * X;
    std::vector<unsigned long long> d2(static_cast<size_t>(Y) + 1, 0);
    for (long long a = -2 * R - 1; a <= 2 * R + 1; a += 2)
      for (long long b = -2 * R - 1; b <= 2 * R + 1; b += 2) {
        long long n = a * a + b * b;
        if (n <= Y) ++d2[static_cast<size_t>(n)];
      }
    for (long long i = 2; i <= Y; i += 8)  // odd^2 + odd^2 = 2 mod 8
      if (d2[static_cast<size_t>(i)])
        for (long long j = 2; i + j <= Y; j += 8) {
          long long s = i + j;
          if (s % 4 == 0)
            out.per_norm[static_cast<size_t>(s / 4)] += d2[static_cast<size_t>(i)] * d2[static_cast<size_t>(j)];
        }
  }
  out.per_norm[0] = 0;  // the origin is excluded

  // prefix counts at geometric checkpoints X / 2^j
  std::vector<long long> marks;
  for (long long xj = X; xj >= 10 && marks.size() < 5; xj /= 2) marks.push_back(xj);
  std::vector<unsigned long long> prefix(out.per_norm.size(), 0);
  unsigned long long acc = 0;
  for (size_t n = 0; n < out.per_norm.size(); ++n) {
    acc += out.per_norm[n];
    prefix[n] = acc;
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t k = marks.size(); k-- > 0;) {
    long long xj = marks[k];
    CountRecord rec;
    rec.bound = xj;
    rec.count = prefix[static_cast<size_t>(xj)];
    out.checkpoints.push_back(rec);
  }
  for (auto& rec : out.checkpoints) {
    double lx = std::log(static_cast<double>(rec.bound));
    double ly = std::log(static_cast<double>(rec.count));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double m = static_cast<double>(out.checkpoints.size());
  double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  for (auto& rec : out.checkpoints) {
    rec.fitted_exponent = slope;
    rec.pointwise_ratio = std::log(static_cast<double>(rec.count)) / std::log(static_cast<double>(rec.bound));
  }
  return out;
}

// ---------------------------------------------------------------------------
// pair counting over the order lattice

struct PairCount {
  long long height = 0;
  unsigned long long total = 0;       // nonzero points scanned
  unsigned long long semistable = 0;  // P(x) != 0
  std::map<long long, unsigned long long> class_tally;  // squarefree d -> count
  bool all_embeddable = true;
  double fitted_exponent = 0;  // slope of log N_ss(h) vs log h
};

inline PairCount pair_partial_count(const DescPtr<Rational>& desc, int H,
                                    unsigned long long budget = 5'000'000ULL) {
  if (desc->kind != AlgKind::Quaternion || !is_division_candidate(desc))
    throw std::domain_error("pair_partial_count: needs a division quaternion descriptor");
  if (H < 1 || H > 8) throw std::domain_error("pair_partial_count: H must be in 1..8");
  double states = 1;
  for (int i = 0; i < 8; ++i) states *= 2 * H + 1;
  if (states > static_cast<double>(budget))
    throw budget_error("pair_partial_count: (2H+1)^8 exceeds the budget");

  PlaceSet md = ramified_set(desc);
  PairCount out;
  out.height = H;
  std::vector<unsigned long long> ss_at(static_cast<size_t>(H) + 1, 0);

  std::vector<long> c(8, -H);
  while (true) {
    bool zero = true;
    long hmax = 0;
    for (long v : c) {
      if (v) zero = false;
      hmax = std::max(hmax, std::abs(v));
    }
    if (!zero) {
      ++out.total;
      std::vector<Rational> c1, c2;
      for (int i = 0; i < 4; ++i) c1.emplace_back(c[static_cast<size_t>(i)]);
      for (int i = 4; i < 8; ++i) c2.emplace_back(c[static_cast<size_t>(i)]);
      PairPoint<Rational> x(AlgebraElement<Rational>(desc, c1), AlgebraElement<Rational>(desc, c2));
      Rational P = invariant_P(x);
      if (!P.is_zero()) {
        ++out.semistable;
        for (long h = hmax; h <= H; ++h) ++ss_at[static_cast<size_t>(h)];
        mpz_class d = squarefree_part(P.num());  // integer coordinates: P integral
        long long dl = d.get_si();
        ++out.class_tally[dl];
        if (d == 1 || !quadratic_embeddable(d, md)) out.all_embeddable = false;
      }
    }
    int i = 0;
    while (i < 8 && ++c[static_cast<size_t>(i)] > H) c[static_cast<size_t>(i++)] = -H;
    if (i == 8) break;
  }

  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int pts = 0;
  for (long h = 1; h <= H; ++h) {
    if (!ss_at[static_cast<size_t>(h)]) continue;
    double lx = std::log(static_cast<double>(h) + 0.5);  // box half-width proxy
    double ly = std::log(static_cast<double>(ss_at[static_cast<size_t>(h)]));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++pts;
  }
  out.fitted_exponent = pts >= 2 ? (pts * sxy - sx * sy) / (pts * sxx - sx * sx) : 0.0;
  return out;
}

// ---------------------------------------------------------------------------
// L-series, class numbers, densities

inline bool is_fundamental_discriminant(long long D) {
  if (D == 0 || D == 1) return false;
  auto sf = [](long long n) {
    return squarefree_part(mpz_class(static_cast<long>(n))) == static_cast<long>(n);
  };
  long long m4 = ((D % 4) + 4) % 4;
  if (m4 == 1) return sf(D);
  if (m4 == 0) {
    long long d = D / 4;
    long long dm4 = ((d % 4) + 4) % 4;
    return (dm4 == 2 || dm4 == 3) && sf(d);
  }
  return false;
}

struct L1Result {
  double value = 0;
  double tail_bound = 0;  // crude |D| / T report
};

// truncated L(1, chi_D) = sum_{n<=T} chi_D(n)/n with chi the Kronecker symbol
inline L1Result L1_chi(long long D, long long T) {
  if (!is_fundamental_discriminant(D)) throw std::domain_error("L1_chi: D must be a fundamental discriminant");
  if (T < 10'000) throw std::domain_error("L1_chi: T must be >= 10^4");
  const long long q = std::llabs(D);
  std::vector<int> chi(static_cast<size_t>(q));
  for (long long r = 0; r < q; ++r)
    chi[static_cast<size_t>(r)] = kronecker(mpz_class(static_cast<long>(D)), mpz_class(static_cast<long>(r)));
  double sum = 0;
  for (long long n = 1; n <= T; ++n) {
    int c = chi[static_cast<size_t>(n % q)];
    if (c) sum += static_cast<double>(c) / static_cast<double>(n);
  }
  return {sum, static_cast<double>(q) / static_cast<double>(T)};
}

inline int unit_count_w(long long D) { return D == -3 ? 6 : (D == -4 ? 4 : 2); }

// D > 0: h R = sqrt(D) L(1,chi)/2.  D < 0: R = 1 by convention and the value
// is h = w sqrt(|D|) L(1,chi) / (2 pi).
inline double hR(long long D, long long T) {
  L1Result l = L1_chi(D, T);
  if (D > 0) return std::sqrt(static_cast<double>(D)) * l.value / 2.0;
  return unit_count_w(D) * std::sqrt(static_cast<double>(-D)) * l.value / (2 * M_PI);
}

struct DensityRecord {
  long long Delta = 0;
  double L1 = 0;
  double hR_value = 0;
  bool embeddable = false;
  double running_sum = 0;
};

struct DensityResult {
  std::vector<DensityRecord> records;  // |Delta| ascending, negative first
  double filtered_sum = 0;
  double slope = 0;  // least-squares of log sum vs log |Delta| on the tail
  unsigned long long included = 0, excluded = 0;
};

template <class Sink>
DensityResult density_sum(const DescPtr<Rational>& desc, long long Xmax, long long T, Sink&& sink,
                          const std::optional<PlaceSet>& declared = std::nullopt) {
  if (desc->kind == AlgKind::CyclicCubic)
    throw std::domain_error("density_sum: quadratic density needs a degree-2 descriptor");
  PlaceSet md = ramified_set(desc, declared);
  DensityResult out;
  double sum = 0;
  std::vector<std::pair<double, double>> fitpts;
  for (long long a = 3; a <= Xmax; ++a) {
    for (long long D : {-a, a}) {
      if (!is_fundamental_discriminant(D)) continue;
      DensityRecord rec;
      rec.Delta = D;
      L1Result l = L1_chi(D, T);
      rec.L1 = l.value;
      rec.hR_value = hR(D, T);
      long long m4 = ((D % 4) + 4) % 4;
      mpz_class kernel(static_cast<long>(m4 == 1 ? D : D / 4));
      rec.embeddable = quadratic_embeddable(kernel, md);
      if (rec.embeddable) {
        sum += rec.hR_value * rec.hR_value;
        ++out.included;
      } else {
        ++out.excluded;
      }
      rec.running_sum = sum;
      if (rec.embeddable && sum > 0 && a >= std::max<long long>(8, Xmax / 32))
        fitpts.emplace_back(std::log(static_cast<double>(a)), std::log(sum));
      sink(rec);
      out.records.push_back(rec);
    }
  }
  out.filtered_sum = sum;
  if (fitpts.size() >= 2) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (auto& [lx, ly] : fitpts) {
      sx += lx;
      sy += ly;
      sxx += lx * lx;
      sxy += lx * ly;
    }
    double m = static_cast<double>(fitpts.size());
    out.slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  }
  return out;
}

}  // namespace pairalg
