#include "doctest.h"

#include "pairalg/localglobal.hpp"
#include "test_util.hpp"

using namespace pairalg;
using testutil::Rng;

namespace {

Rational Q(long n) { return Rational(n); }

// Independent oracle: solubility of z^2 = a x^2 + b y^2 over Q_p decided by
// searching for a primitive solution mod p^3 (enough for odd p and the small
// valuations of the test inputs, by Hensel).
bool soluble_oracle(long long a, long long b, long long p) {
  long long pk = p * p * p;
  std::set<long long> squares;
  for (long long z = 0; z < pk; ++z) squares.insert(z * z % pk);
  for (long long x = 0; x < pk; ++x)
    for (long long y = 0; y < pk; ++y) {
      if (x % p == 0 && y % p == 0) continue;
      long long rhs = (((a % pk) * (x * x % pk) + (b % pk) * (y * y % pk)) % pk + pk) % pk;
      if (squares.count(rhs)) return true;
    }
  return false;
}

Poly<Rational> qpoly(std::initializer_list<long> lo_to_hi) {
  std::vector<Rational> c;
  for (long v : lo_to_hi) c.emplace_back(v);
  return Poly<Rational>(c);
}

}  // namespace

TEST_CASE("hilbert symbol on the stated examples") {
  CHECK(hilbert_symbol(Q(-1), Q(-1), Place::infinite()) == -1);
  CHECK(hilbert_symbol(Q(-1), Q(-1), Place::at(2)) == -1);
  CHECK(hilbert_symbol(Q(-1), Q(-1), Place::at(5)) == 1);
}

TEST_CASE("hilbert symbol against the brute-force local solubility oracle") {
  for (long long p : {3LL, 5LL, 7LL}) {
    for (long long a : {1LL, 2LL, 3LL, 5LL, -1LL, -2LL, -3LL}) {
      for (long long b : {1LL, 2LL, 3LL, 5LL, -1LL, -5LL}) {
        int sym = hilbert_symbol(Q(a), Q(b), Place::at(p));
        CHECK(sym == (soluble_oracle(a, b, p) ? 1 : -1));
      }
    }
  }
  // p = 2 spot checks (the full scan is slow)
  CHECK(hilbert_symbol(Q(2), Q(3), Place::at(2)) == -1);
  CHECK(hilbert_symbol(Q(2), Q(7), Place::at(2)) == 1);    // 3^2 = 2 + 7 globally
  CHECK(hilbert_symbol(Q(-1), Q(7), Place::at(2)) == -1);  // forced by the product formula
}

TEST_CASE("hilbert symbol properties: symmetry, bimultiplicativity, product formula") {
  Rng rng(2718);
  std::vector<Place> test_places = {Place::infinite(), Place::at(2), Place::at(3), Place::at(5), Place::at(7)};
  for (int it = 0; it < 400; ++it) {
    long long a = testutil::rand_int(rng, -100, 100);
    long long b = testutil::rand_int(rng, -100, 100);
    long long c = testutil::rand_int(rng, -20, 20);
    if (!a || !b || !c) continue;
    for (auto& v : test_places) {
      CHECK(hilbert_symbol(Q(a), Q(b), v) == hilbert_symbol(Q(b), Q(a), v));
      CHECK(hilbert_symbol(Q(a), Q(b * c), v) ==
            hilbert_symbol(Q(a), Q(b), v) * hilbert_symbol(Q(a), Q(c), v));
    }
    int prod = 1;
    for (auto& v : hilbert_support(Q(a), Q(b))) prod *= hilbert_symbol(Q(a), Q(b), v);
    CHECK(prod == 1);
  }
}

TEST_CASE("ramified sets on the stated examples") {
  auto s = ramified_set(hamilton_quaternions());
  REQUIRE(s.size() == 2);
  CHECK(s.contains(Place::at(2)));
  CHECK(s.contains(Place::infinite()));

  CHECK(ramified_set(make_quaternion(Q(1), Q(1))).empty());

  auto s3 = ramified_set(make_quaternion(Q(-1), Q(3)));
  CHECK(s3.size() == 2);
  CHECK(s3.contains(Place::at(2)));
  CHECK(s3.contains(Place::at(3)));

  Rng rng(12);
  for (int it = 0; it < 200; ++it) {
    long long a = testutil::rand_int(rng, -60, 60);
    long long b = testutil::rand_int(rng, -60, 60);
    if (!a || !b) continue;
    CHECK(quaternion_ramified_places(Q(a), Q(b)).size() % 2 == 0);
  }
}

TEST_CASE("quadratic embeddability for Hamilton") {
  auto H = hamilton_quaternions();
  CHECK(quadratic_embeddable(mpz_class(-1), H));
  CHECK(!quadratic_embeddable(mpz_class(-7), H));  // -7 is a square in Q_2
  CHECK(!quadratic_embeddable(mpz_class(5), H));   // splits at infinity
  CHECK_THROWS(quadratic_embeddable(mpz_class(12), H));
  CHECK_THROWS(quadratic_embeddable(mpz_class(1), H));
  // split descriptor: vacuous condition
  auto M2 = make_split_matrix(2, Q(1));
  for (long d : {-1L, -7L, 5L, -11L}) CHECK(quadratic_embeddable(mpz_class(d), M2));
}

TEST_CASE("local square classification against exhaustive squares mod p") {
  for (long long p : {3LL, 5LL, 7LL, 11LL, 13LL}) {
    std::set<long long> squares;
    for (long long t = 1; t < p; ++t) squares.insert(t * t % p);
    for (long long d = -30; d <= 30; ++d) {
      if (d == 0 || d == 1) continue;
      if (squarefree_part(mpz_class(static_cast<long>(d))) != static_cast<long>(d)) continue;
      if (d % p == 0) continue;
      long long r = ((d % p) + p) % p;
      CHECK(nonsquare_locally(mpz_class(static_cast<long>(d)), Place::at(p)) == (squares.count(r) == 0));
    }
  }
}

TEST_CASE("cubic local degrees on the stated examples") {
  // v^3 - v - 1 is irreducible mod 2
  CHECK(cubic_local_degree(qpoly({-1, -1, 0, 1}), Place::at(2)) == std::vector<int>{3});
  // reducible cubics are rejected
  CHECK_THROWS(cubic_local_degree(qpoly({-1, 0, 0, 1}), Place::at(5)));
  // v^3 - 2 at 5: one root (3^3 = 27 = 2 mod 5), quadratic cofactor stays irreducible
  CHECK(cubic_local_degree(qpoly({-2, 0, 0, 1}), Place::at(5)) == std::vector<int>{1, 2});
  // infinite place by discriminant sign
  CHECK(cubic_local_degree(qpoly({-1, -2, 1, 1}), Place::infinite()) == std::vector<int>{1, 1, 1});
  CHECK(cubic_local_degree(qpoly({-2, 0, 0, 1}), Place::infinite()) == std::vector<int>{1, 2});
}

TEST_CASE("cubic local degrees at ramified primes (valuation refinement)") {
  // v^3 - 2 at 2: totally ramified, one root... Eisenstein: irreducible over Q_2
  CHECK(cubic_local_degree(qpoly({-2, 0, 0, 1}), Place::at(2)) == std::vector<int>{3});
  // v^3 - 3 at 3: Eisenstein at 3
  CHECK(cubic_local_degree(qpoly({-3, 0, 0, 1}), Place::at(3)) == std::vector<int>{3});
  // x^3 + x^2 - 2x - 1 at 7: ramified (disc 49), cyclic: stays a field...
  // conductor 7: Q_7 contains no 7th roots of unity subfield of degree 3?
  // The completion at 7 is the ramified cyclic cubic of Q_7, so {3}.
  CHECK(cubic_local_degree(qpoly({-1, -2, 1, 1}), Place::at(7)) == std::vector<int>{3});
  // x^3 - x^2 - 2x + 1 (disc 49 too, conductor 7 field, same local behavior)
  CHECK(cubic_local_degree(qpoly({1, -2, -1, 1}), Place::at(7)) == std::vector<int>{3});
  // x^3 - 19 at 19: Eisenstein
  CHECK(cubic_local_degree(qpoly({-19, 0, 0, 1}), Place::at(19)) == std::vector<int>{3});
  // x^3 - x - 1 at 23 (disc -23): one simple root plus a double point that
  // refines to a ramified quadratic: {1,2}
  CHECK(cubic_local_degree(qpoly({-1, -1, 0, 1}), Place::at(23)) == std::vector<int>{1, 2});
}

TEST_CASE("cubic embeddability") {
  auto D = default_cyclic_division();
  PlaceSet md;
  md.add(Place::at(2));
  md.add(Place::at(7));

  // the defining field of the algebra embeds (it splits D): inert at 2,
  // ramified-cubic at 7
  CHECK(cubic_embeddable(qpoly({-1, -2, 1, 1}), D, md));
  // v^3 - v - 7 splits completely at 7, so it cannot embed
  CHECK(!cubic_embeddable(qpoly({-7, -1, 0, 1}), D, md));
  // split descriptor: vacuous
  auto M3 = make_split_matrix(3, Q(1));
  CHECK(cubic_embeddable(qpoly({-2, 0, 0, 1}), M3));
  // infinite place in a declared degree-3 set is rejected
  PlaceSet bad;
  bad.add(Place::infinite());
  CHECK_THROWS(ramified_set(D, bad));
  // missing declaration
  CHECK_THROWS(ramified_set(D));
}

TEST_CASE("division candidates") {
  CHECK(is_division_candidate(hamilton_quaternions()));
  CHECK(!is_division_candidate(make_quaternion(Q(1), Q(1))));
  CHECK(!is_division_candidate(make_split_matrix(2, Q(1))));
  CHECK(!is_division_candidate(make_split_matrix(3, Q(1))));

  PlaceSet md;
  md.add(Place::at(2));
  md.add(Place::at(7));
  CHECK(is_division_candidate(default_cyclic_division(), 6, md));

  // gamma = 1 = N(1) is plainly split: witness found, declaration ignored
  Poly<Rational> f(std::vector<Rational>{Q(-1), Q(-2), Q(1), Q(1)});
  Poly<Rational> sig(std::vector<Rational>{Q(-2), Q(0), Q(1)});
  auto split_cyclic = make_cyclic_cubic(f, sig, Q(1));
  CHECK(!is_division_candidate(split_cyclic, 6, md));

  // declaring a ramified set for a provably split algebra is rejected
  CHECK_THROWS(ramified_set(split_cyclic, md));
}
