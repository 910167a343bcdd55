#include "doctest.h"

#include "pairalg/algebra.hpp"
#include "test_util.hpp"

using namespace pairalg;
using testutil::Rng;

namespace {

Rational Q(long n) { return Rational(n); }

AlgebraElement<Rational> ham(const DescPtr<Rational>& H, long a, long b, long c, long d) {
  return AlgebraElement<Rational>(H, {Q(a), Q(b), Q(c), Q(d)});
}

// left-regular representation of x on D as a base-field matrix
template <class K>
Matrix<K> regular_rep(const AlgebraElement<K>& x) {
  const int m = x.desc->m;
  Matrix<K> M(static_cast<size_t>(m), std::vector<K>(static_cast<size_t>(m), x.desc->one.zero()));
  for (int j = 0; j < m; ++j) {
    auto col = mul(x, basis_element(x.desc, j));
    for (int i = 0; i < m; ++i) M[static_cast<size_t>(i)][static_cast<size_t>(j)] = col.c[static_cast<size_t>(i)];
  }
  return M;
}

template <class K>
AlgebraElement<K> eval_poly_at(const Poly<K>& f, const AlgebraElement<K>& x) {
  auto acc = from_scalar(x.desc, f.leading());
  for (int k = f.degree() - 1; k >= 0; --k)
    acc = mul(acc, x) + from_scalar(x.desc, f.coeff(k));
  return acc;
}

}  // namespace

TEST_CASE("Hamilton basis relations") {
  auto H = hamilton_quaternions();
  auto i = basis_element(H, 1), j = basis_element(H, 2), k = basis_element(H, 3);
  CHECK(mul(i, j) == k);
  CHECK(mul(i, i) == from_scalar(H, Q(-1)));
  CHECK(mul(j, i) == scale(Q(-1), k));
  CHECK(mul(j, j) == from_scalar(H, Q(-1)));
  CHECK(mul(k, k) == from_scalar(H, Q(-1)));
}

TEST_CASE("reduced norm on the stated examples") {
  auto H = hamilton_quaternions();
  CHECK(reduced_norm(identity(H)) == Q(1));
  CHECK(reduced_norm(ham(H, 1, 1, 1, 1)) == Q(4));

  auto M2 = make_split_matrix(2, Q(1));
  AlgebraElement<Rational> x(M2, {Q(1), Q(2), Q(3), Q(4)});
  CHECK(reduced_norm(x) == Q(-2));
}

TEST_CASE("reduced trace on the stated examples") {
  auto H = hamilton_quaternions();
  CHECK(reduced_trace(identity(H)) == Q(2));
  CHECK(reduced_trace(basis_element(H, 1)) == Q(0));

  auto M3 = make_split_matrix(3, Q(1));
  AlgebraElement<Rational> diag(M3, {Q(1), Q(0), Q(0), Q(0), Q(2), Q(0), Q(0), Q(0), Q(3)});
  CHECK(reduced_trace(diag) == Q(6));
}

TEST_CASE("char_poly on the stated examples") {
  auto H = hamilton_quaternions();
  auto cp = char_poly(basis_element(H, 1));  // i -> v^2+1
  CHECK(cp == Poly<Rational>(std::vector<Rational>{Q(1), Q(0), Q(1)}));

  auto lam = from_scalar(H, Q(5));
  CHECK(char_poly(lam) == Poly<Rational>(std::vector<Rational>{Q(25), Q(-10), Q(1)}));

  auto M3 = make_split_matrix(3, Q(1));
  AlgebraElement<Rational> diag(M3, {Q(0), Q(0), Q(0), Q(0), Q(1), Q(0), Q(0), Q(0), Q(2)});
  CHECK(char_poly(diag) == Poly<Rational>(std::vector<Rational>{Q(0), Q(2), Q(-3), Q(1)}));
}

TEST_CASE("invert on the stated examples") {
  auto H = hamilton_quaternions();
  CHECK(invert(identity(H)) == identity(H));
  CHECK(invert(basis_element(H, 1)) == scale(Q(-1), basis_element(H, 1)));
  auto inv1pi = invert(ham(H, 1, 1, 0, 0));
  CHECK(inv1pi == AlgebraElement<Rational>(H, {Rational(mpz_class(1), mpz_class(2)),
                                               Rational(mpz_class(-1), mpz_class(2)), Q(0), Q(0)}));
  CHECK_THROWS(invert(from_scalar(H, Q(0))));
}

TEST_CASE("default cyclic division algebra is well formed") {
  auto D = default_cyclic_division();
  CHECK(D->n == 3);
  CHECK(reduced_norm(identity(D)) == Q(1));
  CHECK(reduced_trace(identity(D)) == Q(3));
  // u^3 = gamma = 2
  auto u = basis_element(D, 3);
  CHECK(mul(u, mul(u, u)) == from_scalar(D, Q(2)));
  // u * th = sigma(th) * u
  auto th = basis_element(D, 1);
  auto lhs = mul(u, th);
  AlgebraElement<Rational> sig_th(D, {Q(-2), Q(0), Q(1), Q(0), Q(0), Q(0), Q(0), Q(0), Q(0)});
  CHECK(lhs == mul(sig_th, u));
}

TEST_CASE("norm multiplicativity and trace symmetry over Q") {
  Rng rng(31337);
  auto draw = [](Rng& r) { return testutil::rand_rational(r, 4); };
  std::vector<DescPtr<Rational>> descs = {make_split_matrix(2, Q(1)), make_split_matrix(3, Q(1)),
                                          hamilton_quaternions(), make_quaternion(Q(2), Q(3)),
                                          default_cyclic_division()};
  for (auto& d : descs) {
    for (int it = 0; it < 40; ++it) {
      auto x = testutil::rand_element(rng, d, draw);
      auto y = testutil::rand_element(rng, d, draw);
      CHECK(reduced_norm(mul(x, y)) == reduced_norm(x) * reduced_norm(y));
      CHECK(reduced_trace(mul(x, y)) == reduced_trace(mul(y, x)));
    }
  }
}

TEST_CASE("norm multiplicativity and trace symmetry over F_p") {
  Rng rng(1234);
  for (long long p : {3LL, 5LL, 7LL}) {
    auto draw = [p](Rng& r) { return testutil::rand_fp(r, p); };
    std::vector<DescPtr<Fp>> descs = {make_split_matrix(2, Fp(1, p)), make_split_matrix(3, Fp(1, p)),
                                      make_quaternion(Fp(1, p), Fp(p - 1, p)), cyclic_cubic_over_fp(p)};
    for (auto& d : descs) {
      for (int it = 0; it < 30; ++it) {
        auto x = testutil::rand_element(rng, d, draw);
        auto y = testutil::rand_element(rng, d, draw);
        CHECK(reduced_norm(mul(x, y)) == reduced_norm(x) * reduced_norm(y));
        CHECK(reduced_trace(mul(x, y)) == reduced_trace(mul(y, x)));
      }
    }
  }
}

TEST_CASE("Cayley-Hamilton at the reduced degree") {
  Rng rng(555);
  auto drawq = [](Rng& r) { return testutil::rand_rational(r, 3); };
  std::vector<DescPtr<Rational>> descs = {make_split_matrix(2, Q(1)), make_split_matrix(3, Q(1)),
                                          hamilton_quaternions(), default_cyclic_division()};
  for (auto& d : descs) {
    for (int it = 0; it < 25; ++it) {
      auto x = testutil::rand_element(rng, d, drawq);
      CHECK(eval_poly_at(char_poly(x), x).is_zero());
    }
  }
  for (long long p : {3LL, 5LL}) {
    auto drawp = [p](Rng& r) { return testutil::rand_fp(r, p); };
    auto d = cyclic_cubic_over_fp(p);
    for (int it = 0; it < 20; ++it) {
      auto x = testutil::rand_element(rng, d, drawp);
      CHECK(eval_poly_at(char_poly(x), x).is_zero());
    }
  }
}

TEST_CASE("inverses are two-sided") {
  Rng rng(777);
  auto drawq = [](Rng& r) { return testutil::rand_rational(r, 3); };
  std::vector<DescPtr<Rational>> descs = {make_split_matrix(2, Q(1)), make_split_matrix(3, Q(1)),
                                          hamilton_quaternions(), default_cyclic_division()};
  for (auto& d : descs) {
    for (int it = 0; it < 15; ++it) {
      auto x = testutil::rand_invertible(rng, d, drawq);
      CHECK(mul(x, invert(x)) == identity(d));
      CHECK(mul(invert(x), x) == identity(d));
    }
  }
}

TEST_CASE("cyclic norm cubes to the regular-representation determinant") {
  Rng rng(888);
  auto D = default_cyclic_division();
  auto drawq = [](Rng& r) { return testutil::rand_rational(r, 2); };
  for (int it = 0; it < 10; ++it) {
    auto x = testutil::rand_element(rng, D, drawq);
    Rational nn = reduced_norm(x);
    CHECK(mat_det(regular_rep(x)) == nn * nn * nn);
  }
  auto Dp = cyclic_cubic_over_fp(5, 3);
  auto drawp = [](Rng& r) { return testutil::rand_fp(r, 5); };
  for (int it = 0; it < 10; ++it) {
    auto x = testutil::rand_element(rng, Dp, drawp);
    Fp nn = reduced_norm(x);
    CHECK(mat_det(regular_rep(x)) == nn * nn * nn);
  }
}

TEST_CASE("quaternion over F_p matches M_2(F_p) under the explicit isomorphism") {
  // p odd, a = s^2 a residue: i -> diag(s,-s), j -> [[0,1],[b,0]]
  Rng rng(999);
  for (long long p : {5LL, 13LL}) {
    long long s = 2;
    Fp a = Fp(s, p) * Fp(s, p);
    for (long long bb = 1; bb < 4; ++bb) {
      Fp b(bb, p);
      auto Dq = make_quaternion(a, b);
      auto M2 = make_split_matrix(2, Fp(1, p));
      auto phi = [&](const AlgebraElement<Fp>& x) {
        Fp x0 = x.c[0], x1 = x.c[1], x2 = x.c[2], x3 = x.c[3];
        Fp sp(s, p);
        // 1->I, i->diag(s,-s), j->[[0,1],[b,0]], ij->[[0,s],[-sb,0]]
        return AlgebraElement<Fp>(M2, {x0 + sp * x1, x2 + sp * x3, b * x2 - sp * b * x3, x0 - sp * x1});
      };
      auto draw = [p](Rng& r) { return testutil::rand_fp(r, p); };
      for (int it = 0; it < 30; ++it) {
        auto x = testutil::rand_element(rng, Dq, draw);
        auto y = testutil::rand_element(rng, Dq, draw);
        CHECK(phi(mul(x, y)) == mul(phi(x), phi(y)));
        CHECK(reduced_norm(x) == reduced_norm(phi(x)));
        CHECK(reduced_trace(x) == reduced_trace(phi(x)));
      }
    }
  }
}

TEST_CASE("G1 twisted multiplication") {
  Rng rng(2024);
  auto H = hamilton_quaternions();
  auto drawq = [](Rng& r) { return testutil::rand_rational(r, 3); };
  for (int it = 0; it < 25; ++it) {
    G1Element<Rational> g{testutil::rand_invertible(rng, H, drawq), testutil::rand_invertible(rng, H, drawq)};
    G1Element<Rational> h{testutil::rand_invertible(rng, H, drawq), testutil::rand_invertible(rng, H, drawq)};
    G1Element<Rational> k{testutil::rand_invertible(rng, H, drawq), testutil::rand_invertible(rng, H, drawq)};
    auto gh = g1_mul(g, h);
    CHECK(gh.g11 == mul(g.g11, h.g11));
    CHECK(gh.g12 == mul(h.g12, g.g12));
    // associativity and inverses
    auto lhs = g1_mul(g1_mul(g, h), k), rhs = g1_mul(g, g1_mul(h, k));
    CHECK(lhs.g11 == rhs.g11);
    CHECK(lhs.g12 == rhs.g12);
    auto e = g1_mul(g, g1_inverse(g));
    CHECK(e.g11 == identity(H));
    CHECK(e.g12 == identity(H));
  }
}

TEST_CASE("descriptor validation") {
  CHECK_THROWS(make_split_matrix(4, Q(1)));
  CHECK_THROWS(make_quaternion(Q(0), Q(1)));
  CHECK_THROWS(make_quaternion(Fp(1, 2), Fp(1, 2)));  // characteristic 2
  // reducible f_L
  Poly<Rational> red(std::vector<Rational>{Q(0), Q(-1), Q(0), Q(1)});
  CHECK_THROWS(make_cyclic_cubic(red, Poly<Rational>(Q(1)), Q(2)));
  // non-square discriminant (not cyclic): v^3-2
  Poly<Rational> f2(std::vector<Rational>{Q(-2), Q(0), Q(0), Q(1)});
  CHECK_THROWS(make_cyclic_cubic(f2, Poly<Rational>(Q(1)), Q(2)));
  // sigma must move th
  Poly<Rational> f(std::vector<Rational>{Q(-1), Q(-2), Q(1), Q(1)});
  Poly<Rational> idrep(std::vector<Rational>{Q(0), Q(1)});
  CHECK_THROWS(make_cyclic_cubic(f, idrep, Q(2)));
}
