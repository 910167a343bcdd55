#include "doctest.h"

#include "pairalg/linalg.hpp"
#include "pairalg/poly.hpp"
#include "pairalg/qring.hpp"
#include "pairalg/rational.hpp"
#include "pairalg/roots.hpp"
#include "test_util.hpp"

using namespace pairalg;
using testutil::Rng;

namespace {
Rational Q(long n) { return Rational(n); }
Rational Q2(long n, long d) { return Rational(mpz_class(n), mpz_class(d)); }
Poly<Rational> qpoly(std::initializer_list<long> lo_to_hi) {
  std::vector<Rational> c;
  for (long v : lo_to_hi) c.emplace_back(v);
  return Poly<Rational>(c);
}
}  // namespace

TEST_CASE("rational canonical form and serialization") {
  CHECK(Rational(mpz_class(6), mpz_class(4)).to_string() == "3/2");
  CHECK(Rational(mpz_class(-6), mpz_class(4)).to_string() == "-3/2");
  CHECK(Rational(mpz_class(3), mpz_class(-6)).to_string() == "-1/2");
  CHECK(Rational(mpz_class(8), mpz_class(2)).to_string() == "4");
  CHECK(Rational::parse("-7/21") == Q2(-1, 3));
  CHECK(Rational::parse("5") == Q(5));
  CHECK(Rational(mpz_class(-3), mpz_class(6)).den() == 2);  // denominator stays positive
  CHECK_THROWS(Rational(mpz_class(1), mpz_class(0)));
}

TEST_CASE("rational arithmetic is a field on random samples") {
  Rng rng(20260401);
  for (int i = 0; i < 300; ++i) {
    Rational a = testutil::rand_rational(rng, 50);
    Rational b = testutil::rand_rational_nonzero(rng, 50);
    CHECK((a / b) * b == a);
    CHECK(b * b.inv() == Q(1));
    CHECK(a + (-a) == Q(0));
  }
}

TEST_CASE("prime field arithmetic") {
  Fp a(3, 7), b(5, 7);
  CHECK((a * b).x == 1);
  CHECK((a + b).x == 1);
  CHECK(a.inv().x == 5);
  CHECK_THROWS(Fp(0, 7).inv());
  CHECK_THROWS(a + Fp(1, 5));
  Rng rng(7);
  for (long long p : {3LL, 5LL, 101LL}) {
    for (int i = 0; i < 100; ++i) {
      Fp x = testutil::rand_fp_nonzero(rng, p);
      CHECK((x * x.inv()).x == 1);
    }
  }
}

TEST_CASE("poly_discriminant matches the stated values") {
  CHECK(poly_discriminant(qpoly({1, 0, 1})) == Q(-4));   // v^2+1
  CHECK(poly_discriminant(qpoly({1, -2, 1})) == Q(0));   // (v-1)^2
  CHECK(poly_discriminant(qpoly({0, -1, 0, 1})) == Q(4));  // v^3-v, roots {-1,0,1}
  CHECK_THROWS(poly_discriminant(qpoly({1, 1})));
}

TEST_CASE("discriminant vanishes exactly when gcd(f, f') is nonconstant") {
  Rng rng(99);
  for (int deg : {2, 3}) {
    for (int i = 0; i < 200; ++i) {
      std::vector<Rational> c;
      for (int j = 0; j <= deg; ++j) c.push_back(Q(testutil::rand_int(rng, -6, 6)));
      Poly<Rational> f(c);
      if (f.degree() != deg) continue;
      bool disc_zero = poly_discriminant(f).is_zero();
      bool gcd_nonconst = poly_gcd(f, f.derivative()).degree() >= 1;
      CHECK(disc_zero == gcd_nonconst);
    }
  }
}

TEST_CASE("kernel_basis on the stated examples") {
  Matrix<Rational> zero2(2, std::vector<Rational>(2, Q(0)));
  CHECK(kernel_basis(zero2).size() == 2);

  auto id = mat_identity<Rational>(3, Q(1));
  CHECK(kernel_basis(id).empty());

  Matrix<Rational> ones(2, std::vector<Rational>(2, Q(1)));
  auto kb = kernel_basis(ones);
  REQUIRE(kb.size() == 1);
  // proportional to (1,-1)
  CHECK((kb[0][0] + kb[0][1]).is_zero());
  CHECK(!kb[0][0].is_zero());
}

TEST_CASE("kernel vectors satisfy Mv=0 and rank+nullity=cols on random matrices") {
  Rng rng(4242);
  for (int iter = 0; iter < 120; ++iter) {
    size_t r = static_cast<size_t>(testutil::rand_int(rng, 1, 5));
    size_t c = static_cast<size_t>(testutil::rand_int(rng, 1, 5));
    Matrix<Rational> m(r, std::vector<Rational>(c));
    for (auto& row : m)
      for (auto& e : row) e = Q(testutil::rand_int(rng, -4, 4));
    auto kb = kernel_basis(m);
    CHECK(mat_rank(m) + kb.size() == c);
    for (auto& v : kb)
      for (auto& entry : mat_apply(m, v)) CHECK(entry.is_zero());
  }
}

TEST_CASE("fraction-free determinant and inverse") {
  Matrix<Rational> m = {{Q(1), Q(2), Q(3)}, {Q(0), Q(1), Q(4)}, {Q(5), Q(6), Q(0)}};
  CHECK(mat_det(m) == Q(1));
  auto inv = mat_inverse(m);
  auto prod = mat_mul(m, inv);
  CHECK(prod == mat_identity<Rational>(3, Q(1)));
  Rng rng(11);
  for (int iter = 0; iter < 60; ++iter) {
    Matrix<Rational> a(3, std::vector<Rational>(3));
    for (auto& row : a)
      for (auto& e : row) e = testutil::rand_rational(rng, 5);
    Matrix<Fp> b(3, std::vector<Fp>(3));
    for (auto& row : b)
      for (auto& e : row) e = testutil::rand_fp(rng, 7);
    // det via Bareiss equals the Leibniz expansion
    CHECK(mat_det(a) == det_small(a));
    CHECK(mat_det(b) == det_small(b));
  }
}

TEST_CASE("poly division, gcd, shift") {
  auto f = qpoly({-1, 0, 1});  // v^2-1
  auto g = qpoly({-1, 1});     // v-1
  auto [q, r] = poly_divmod(f, g);
  CHECK(r.is_zero());
  CHECK(q == qpoly({1, 1}));
  CHECK(poly_gcd(f, g) == poly_monic(g));
  auto sh = qpoly({0, 0, 1}).shifted(Q(1));  // (v+1)^2
  CHECK(sh == qpoly({1, 2, 1}));
}

TEST_CASE("poly_roots_in_field over Q and F_5") {
  auto roots = poly_roots_in_field(qpoly({-1, 0, 1}), Q(0));  // v^2-1
  REQUIRE(roots.size() == 2);
  CHECK(((roots[0] == Q(1) && roots[1] == Q(-1)) || (roots[0] == Q(-1) && roots[1] == Q(1))));

  CHECK(poly_roots_in_field(qpoly({1, 0, 1}), Q(0)).empty());  // v^2+1 over Q

  Poly<Fp> f5(std::vector<Fp>{Fp(1, 5), Fp(0, 5), Fp(1, 5)});  // v^2+1 over F_5
  auto r5 = poly_roots_in_field(f5, Fp(0, 5));
  REQUIRE(r5.size() == 2);
  CHECK(((r5[0].x == 2 && r5[1].x == 3) || (r5[0].x == 3 && r5[1].x == 2)));
}

TEST_CASE("rational_roots handles multiplicity and denominators") {
  // (2v-1)^2 (v+3)
  auto f = qpoly({-1, 2}) * qpoly({-1, 2}) * qpoly({3, 1});
  auto rr = rational_roots(f);
  REQUIRE(rr.complete);
  REQUIRE(rr.roots.size() == 3);
  int half = 0, neg3 = 0;
  for (auto& r : rr.roots) {
    if (r == Q2(1, 2)) ++half;
    if (r == Q(-3)) ++neg3;
  }
  CHECK(half == 2);
  CHECK(neg3 == 1);
  CHECK(rational_roots(qpoly({1, 1, 0, 2})).roots.empty());
}

TEST_CASE("quadratic number field arithmetic and square roots") {
  auto K = make_number_field(qpoly({-5, 0, 1}));  // Q(sqrt 5)
  auto th = QRElem<Rational>::generator(K);
  CHECK(th * th == QRElem<Rational>::from_base(K, Q(5)));
  CHECK((th.inv() * th) == QRElem<Rational>::from_base(K, Q(1)));

  auto s5 = field_sqrt(QRElem<Rational>::from_base(K, Q(5)));
  REQUIRE(s5.has_value());
  CHECK(*s5 * *s5 == QRElem<Rational>::from_base(K, Q(5)));

  // sqrt of a non-rational element: (1+th)^2 = 6+2th
  QRElem<Rational> z(K, qpoly({6, 2}));
  auto sz = field_sqrt(z);
  REQUIRE(sz.has_value());
  CHECK(*sz * *sz == z);

  CHECK(!field_sqrt(QRElem<Rational>::from_base(K, Q(2))).has_value());
  CHECK_THROWS(make_number_field(qpoly({-4, 0, 1})));  // reducible
}

TEST_CASE("roots of cubics inside cubic fields") {
  // cyclic field: all three roots of the defining cubic live in it
  auto f = qpoly({-1, -2, 1, 1});  // v^3+v^2-2v-1
  auto K = make_number_field(f);
  auto rts = cubic_roots_in_cubic_field(f, K);
  REQUIRE(rts.roots.size() == 3);
  auto th = QRElem<Rational>::generator(K);
  bool has_theta = false, has_sigma = false;
  QRElem<Rational> sigma(K, qpoly({-2, 0, 1}));  // theta^2-2
  for (auto& r : rts.roots) {
    if (r == th) has_theta = true;
    if (r == sigma) has_sigma = true;
  }
  CHECK(has_theta);
  CHECK(has_sigma);

  // non-Galois field: exactly one root of v^3-2 in Q[v]/(v^3-2)
  auto g = qpoly({-2, 0, 0, 1});
  auto K2 = make_number_field(g);
  auto rts2 = cubic_roots_in_cubic_field(g, K2);
  REQUIRE(rts2.roots.size() == 1);
  CHECK(rts2.roots[0] == QRElem<Rational>::generator(K2));

  // non-isomorphic fields share no roots
  CHECK(cubic_roots_in_cubic_field(g, K).roots.empty());

  // via the generic entry point
  std::vector<QRElem<Rational>> coeffs;
  for (auto& a : f.c) coeffs.push_back(QRElem<Rational>::from_base(K, a));
  auto via_generic = poly_roots_in_field(Poly<QRElem<Rational>>(coeffs), th);
  CHECK(via_generic.size() == 3);
}

TEST_CASE("F_q extension roots by scan") {
  // F_8 = F_2[v]/(v^3+v+1): v^3+v+1 splits completely there
  Poly<Fp> mod8(std::vector<Fp>{Fp(1, 2), Fp(1, 2), Fp(0, 2), Fp(1, 2)});
  auto F8 = make_quot_ring(mod8);
  auto gen = QRElem<Fp>::generator(F8);
  std::vector<QRElem<Fp>> coeffs;
  for (auto& a : mod8.c) coeffs.push_back(QRElem<Fp>::from_base(F8, a));
  auto roots = poly_roots_in_field(Poly<QRElem<Fp>>(coeffs), gen);
  CHECK(roots.size() == 3);
}
