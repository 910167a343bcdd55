#include "doctest.h"

#include "pairalg/pvs.hpp"
#include "test_util.hpp"

using namespace pairalg;
using testutil::Rng;

namespace {

Rational Q(long n) { return Rational(n); }

template <class K>
PairPoint<K> pp(const DescPtr<K>& d, std::vector<K> a, std::vector<K> b) {
  return PairPoint<K>(AlgebraElement<K>(d, std::move(a)), AlgebraElement<K>(d, std::move(b)));
}

Matrix<Rational> m2(long a, long b, long c, long d) {
  return {{Q(a), Q(b)}, {Q(c), Q(d)}};
}

template <class K, class Draw>
GroupElement<K> rand_group(Rng& rng, const DescPtr<K>& d, Draw draw) {
  auto g11 = testutil::rand_invertible(rng, d, draw);
  auto g12 = testutil::rand_invertible(rng, d, draw);
  while (true) {
    Matrix<K> g2{{draw(rng), draw(rng)}, {draw(rng), draw(rng)}};
    if (!det_small(g2).is_zero()) return GroupElement<K>{{g11, g12}, g2};
  }
}

template <class K, class Draw>
PairPoint<K> rand_point(Rng& rng, const DescPtr<K>& d, Draw draw) {
  return PairPoint<K>(testutil::rand_element(rng, d, draw), testutil::rand_element(rng, d, draw));
}

}  // namespace

TEST_CASE("act on the stated examples") {
  auto H = hamilton_quaternions();
  auto one = identity(H), i = basis_element(H, 1);
  PairPoint<Rational> x(one, i);

  CHECK(act(ge_identity(H), x) == x);

  GroupElement<Rational> swap{{one, one}, m2(0, 1, 1, 0)};
  CHECK(act(swap, x) == PairPoint<Rational>(i, one));

  GroupElement<Rational> gi{{i, one}, m2(1, 0, 0, 1)};
  auto y = act(gi, x);
  CHECK(y == PairPoint<Rational>(i, from_scalar(H, Q(-1))));
}

TEST_CASE("act composes through the twisted product") {
  Rng rng(101);
  auto drawq = [](Rng& r) { return testutil::rand_rational(r, 3); };
  std::vector<DescPtr<Rational>> descs = {make_split_matrix(2, Q(1)), hamilton_quaternions(),
                                          default_cyclic_division()};
  for (auto& d : descs) {
    for (int it = 0; it < 12; ++it) {
      auto g = rand_group(rng, d, drawq), h = rand_group(rng, d, drawq);
      auto x = rand_point(rng, d, drawq);
      CHECK(act(g, act(h, x)) == act(ge_mul(g, h), x));
      CHECK(act(ge_inverse(g), act(g, x)) == x);
    }
  }
}

TEST_CASE("form_of on the stated examples") {
  auto H = hamilton_quaternions();
  auto one = identity(H), i = basis_element(H, 1);
  auto f = form_of(PairPoint<Rational>(one, i));  // v1^2 + v2^2
  CHECK(f.c == std::vector<Rational>{Q(1), Q(0), Q(1)});

  auto f2 = form_of(PairPoint<Rational>(one, from_scalar(H, Q(0))));  // v1^n
  CHECK(f2.c == std::vector<Rational>{Q(1), Q(0), Q(0)});

  auto M2 = make_split_matrix(2, Q(1));
  auto x = pp(M2, {Q(1), Q(0), Q(0), Q(1)}, {Q(0), Q(0), Q(0), Q(1)});
  CHECK(form_of(x).c == std::vector<Rational>{Q(1), Q(1), Q(0)});  // v1^2 + v1 v2
}

TEST_CASE("invariant_P on the stated examples") {
  auto H = hamilton_quaternions();
  auto one = identity(H), i = basis_element(H, 1);
  CHECK(invariant_P(PairPoint<Rational>(one, i)) == Q(-4));
  CHECK(invariant_P(PairPoint<Rational>(one, one)) == Q(0));

  auto M2 = make_split_matrix(2, Q(1));
  auto x = pp(M2, {Q(1), Q(0), Q(0), Q(1)}, {Q(0), Q(0), Q(0), Q(1)});
  CHECK(invariant_P(x) == Q(1));
}

TEST_CASE("is_semistable on the stated examples") {
  auto H = hamilton_quaternions();
  auto one = identity(H), i = basis_element(H, 1), z = from_scalar(H, Q(0));
  CHECK(is_semistable(PairPoint<Rational>(one, i)));
  CHECK(!is_semistable(PairPoint<Rational>(one, one)));
  CHECK(!is_semistable(PairPoint<Rational>(z, z)));
}

TEST_CASE("characters on the stated examples") {
  auto H = hamilton_quaternions();
  auto id = ge_identity(H);
  auto ch = characters(id);
  CHECK(ch.chi1 == Q(1));
  CHECK(ch.chi2 == Q(1));
  CHECK(ch.chi == Q(1));

  // n=2 with N(g11)=2, N(g12)=1, det g2 = 3: chi = (2*1)^2 * 3^2 = 36
  AlgebraElement<Rational> g11(H, {Q(1), Q(1), Q(0), Q(0)});  // N = 2
  GroupElement<Rational> g{{g11, identity(H)}, m2(3, 0, 0, 1)};
  CHECK(characters(g).chi == Q(36));

  // n=3 with the same norms: chi = 2^4 * 3^6 = 11664
  auto D = default_cyclic_division();
  // find an element of norm 2: u has norm gamma = 2
  auto u = basis_element(D, 3);
  CHECK(reduced_norm(u) == Q(2));
  GroupElement<Rational> g3{{u, identity(D)}, {{Q(3), Q(0)}, {Q(0), Q(1)}}};
  CHECK(characters(g3).chi == Q(11664));
}

TEST_CASE("relative invariance P(gx) = chi(g) P(x) over Q") {
  Rng rng(9001);
  auto drawq = [](Rng& r) { return testutil::rand_rational(r, 3); };
  std::vector<DescPtr<Rational>> descs = {make_split_matrix(2, Q(1)), make_split_matrix(3, Q(1)),
                                          hamilton_quaternions(), default_cyclic_division()};
  for (auto& d : descs) {
    for (int it = 0; it < 25; ++it) {
      auto g = rand_group(rng, d, drawq);
      auto x = rand_point(rng, d, drawq);
      CHECK(invariant_P(act(g, x)) == characters(g).chi * invariant_P(x));
    }
  }
}

TEST_CASE("relative invariance and form covariance over F_p") {
  Rng rng(42);
  for (long long p : {3LL, 5LL, 7LL}) {
    auto draw = [p](Rng& r) { return testutil::rand_fp(r, p); };
    std::vector<DescPtr<Fp>> descs = {make_split_matrix(2, Fp(1, p)), make_split_matrix(3, Fp(1, p)),
                                      make_quaternion(Fp(2, p), Fp(p - 1, p)), cyclic_cubic_over_fp(p)};
    for (auto& d : descs) {
      for (int it = 0; it < 20; ++it) {
        auto g = rand_group(rng, d, draw);
        auto x = rand_point(rng, d, draw);
        auto ch = characters(g);
        CHECK(invariant_P(act(g, x)) == ch.chi * invariant_P(x));
        // F_{gx}(v) = chi1(g1) F_x(v g2)
        auto lhs = form_of(act(g, x));
        auto rhs = form_compose_right(form_of(x), g.g2);
        for (auto& cc : rhs.c) cc = ch.chi1 * cc;
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("form covariance over F_2 (no interpolation shortcut available)") {
  Rng rng(7);
  const long long p = 2;
  auto draw = [p](Rng& r) { return testutil::rand_fp(r, p); };
  for (auto& d : {make_split_matrix(2, Fp(1, p)), make_split_matrix(3, Fp(1, p))}) {
    for (int it = 0; it < 30; ++it) {
      auto g = rand_group(rng, d, draw);
      auto x = rand_point(rng, d, draw);
      auto ch = characters(g);
      CHECK(invariant_P(act(g, x)) == ch.chi * invariant_P(x));
      auto lhs = form_of(act(g, x));
      auto rhs = form_compose_right(form_of(x), g.g2);
      for (auto& cc : rhs.c) cc = ch.chi1 * cc;
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("pairing on the stated examples") {
  auto H = hamilton_quaternions();
  auto one = identity(H), i = basis_element(H, 1), z = from_scalar(H, Q(0));
  CHECK(pairing(PairPoint<Rational>(one, z), PairPoint<Rational>(one, z)) == Q(0));
  CHECK(pairing(PairPoint<Rational>(one, z), PairPoint<Rational>(z, one)) == Q(2));
  CHECK(pairing(PairPoint<Rational>(i, z), PairPoint<Rational>(z, i)) == Q(-2));
}

TEST_CASE("involution on the stated examples and as an involution") {
  auto H = hamilton_quaternions();
  auto id = ge_identity(H);
  auto invo = involution(id);
  CHECK(invo.g1.g11 == identity(H));
  CHECK(invo.g2 == mat_identity(2, Q(1)));

  // diag(2,3) |-> nu diag(1/2,1/3) nu = diag(1/3,1/2)
  GroupElement<Rational> g{{identity(H), identity(H)}, m2(2, 0, 0, 3)};
  auto gi = involution(g);
  CHECK(gi.g2[0][0] == Rational(mpz_class(1), mpz_class(3)));
  CHECK(gi.g2[1][1] == Rational(mpz_class(1), mpz_class(2)));

  Rng rng(606);
  auto drawq = [](Rng& r) { return testutil::rand_rational(r, 3); };
  for (auto& d : {hamilton_quaternions(), default_cyclic_division()}) {
    for (int it = 0; it < 15; ++it) {
      auto g = rand_group(rng, d, drawq);
      auto gii = involution(involution(g));
      CHECK(gii.g1.g11 == g.g1.g11);
      CHECK(gii.g1.g12 == g.g1.g12);
      CHECK(gii.g2 == g.g2);
      // (g11, g12, I)^iota = (g12^{-1}, g11^{-1}, I)
      GroupElement<Rational> gg{{g.g1.g11, g.g1.g12}, mat_identity(2, Q(1))};
      auto ggi = involution(gg);
      CHECK(ggi.g1.g11 == invert(g.g1.g12));
      CHECK(ggi.g1.g12 == invert(g.g1.g11));
    }
  }
}

TEST_CASE("pairing invariance under g x g^iota") {
  Rng rng(505);
  auto drawq = [](Rng& r) { return testutil::rand_rational(r, 3); };
  std::vector<DescPtr<Rational>> descs = {make_split_matrix(2, Q(1)), hamilton_quaternions(),
                                          make_split_matrix(3, Q(1)), default_cyclic_division()};
  for (auto& d : descs) {
    for (int it = 0; it < 12; ++it) {
      auto g = rand_group(rng, d, drawq);
      auto x = rand_point(rng, d, drawq), y = rand_point(rng, d, drawq);
      CHECK(pairing(act(g, x), act(involution(g), y)) == pairing(x, y));
    }
  }
}

TEST_CASE("pairing is nondegenerate on every shipped descriptor") {
  std::vector<DescPtr<Rational>> descs = {make_split_matrix(2, Q(1)), make_split_matrix(3, Q(1)),
                                          hamilton_quaternions(), default_cyclic_division()};
  for (auto& d : descs) {
    const int m = d->m;
    auto z = from_scalar(d, Q(0));
    std::vector<PairPoint<Rational>> basis;
    for (int i = 0; i < m; ++i) basis.emplace_back(basis_element(d, i), z);
    for (int i = 0; i < m; ++i) basis.emplace_back(z, basis_element(d, i));
    Matrix<Rational> gram(basis.size(), std::vector<Rational>(basis.size()));
    for (size_t i = 0; i < basis.size(); ++i)
      for (size_t j = 0; j < basis.size(); ++j) gram[i][j] = pairing(basis[i], basis[j]);
    CHECK(!mat_det(gram).is_zero());
  }
}
