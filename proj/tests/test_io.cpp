#include "doctest.h"

#include "pairalg/io.hpp"
#include "pairalg/zeta.hpp"

using namespace pairalg;

namespace {
Rational Q(long n) { return Rational(n); }
}

TEST_CASE("descriptor strings round-trip") {
  for (const char* s : {"mat:2", "mat:3", "quat:-1,-1", "quat:2,3/5",
                        "cyclic:f=-1,-2,1,1;sigma=-2,0,1;gamma=2"}) {
    auto d = io::parse_descriptor(s);
    CHECK(io::descriptor_to_string(d) == s);
    auto d2 = io::parse_descriptor(io::descriptor_to_string(d));
    CHECK(desc_equal(*d, *d2));
  }
  CHECK_THROWS(io::parse_descriptor("mat:4"));
  CHECK_THROWS(io::parse_descriptor("quat:0,1"));
  CHECK_THROWS(io::parse_descriptor("frobnicate:1"));
  CHECK_THROWS(io::parse_descriptor("cyclic:f=1,0,0,1"));
}

TEST_CASE("points round-trip") {
  auto H = hamilton_quaternions();
  PairPoint<Rational> x(AlgebraElement<Rational>(H, {Q(1), Q(0), Rational(mpz_class(-3), mpz_class(2)), Q(0)}),
                        AlgebraElement<Rational>(H, {Q(0), Q(1), Q(0), Q(7)}));
  auto y = io::parse_point(io::point_to_string(x));
  CHECK(x == y);
  CHECK_THROWS(io::parse_point("mat:2 | 1;0;0;1"));
  CHECK_THROWS(io::parse_point("mat:2 | 1;0;0 | 0;0;0;1"));
}

TEST_CASE("place sets parse") {
  auto s = io::parse_place_set("7,2,inf");
  CHECK(s.size() == 3);
  CHECK(s.places[0] == Place::at(2));
  CHECK(s.places[1] == Place::at(7));
  CHECK(s.places[2] == Place::infinite());
}

TEST_CASE("etale classes of non-field cubic types over Q") {
  auto M3 = make_split_matrix(3, Q(1));
  // (I, diag(0,1,2)): three rational roots
  AlgebraElement<Rational> diag(M3, {Q(0), Q(0), Q(0), Q(0), Q(1), Q(0), Q(0), Q(0), Q(2)});
  auto c1 = etale_class(PairPoint<Rational>(identity(M3), diag));
  CHECK(c1.to_string() == "QxQxQ");

  // (I, rotation block): one rational root plus v^2+1
  AlgebraElement<Rational> rot(M3, {Q(0), Q(0), Q(0), Q(0), Q(0), Q(-1), Q(0), Q(1), Q(0)});
  auto c2 = etale_class(PairPoint<Rational>(identity(M3), rot));
  CHECK(c2.split_type == std::vector<int>{1, 2});
  CHECK(c2.d == -1);
  CHECK(c2.to_string() == "QxQ(sqrt -1)");

  // rank-deficient pair with a root at infinity: still QxQxQ
  AlgebraElement<Rational> e(M3, {Q(1), Q(0), Q(0), Q(0), Q(1), Q(0), Q(0), Q(0), Q(0)});
  AlgebraElement<Rational> z(M3, {Q(0), Q(1), Q(0), Q(0), Q(-1), Q(0), Q(0), Q(0), Q(1)});
  auto c3 = etale_class(PairPoint<Rational>(e, z));
  CHECK(c3.to_string() == "QxQxQ");

  // n=2 with a root at infinity: split class
  auto M2 = make_split_matrix(2, Q(1));
  AlgebraElement<Rational> e12(M2, {Q(0), Q(1), Q(0), Q(0)});
  AlgebraElement<Rational> e21(M2, {Q(0), Q(0), Q(1), Q(0)});
  auto c4 = etale_class(PairPoint<Rational>(e12, e21));
  CHECK(c4.to_string() == "QxQ");
}

TEST_CASE("inconclusive and budget errors surface as their own types") {
  // wildly ramified refinement with no budget left
  Poly<Rational> f(std::vector<Rational>{Q(-3), Q(0), Q(0), Q(1)});  // v^3 - 3
  CHECK_THROWS_AS(cubic_local_degree(f, Place::at(3), 1), inconclusive_error);
  CHECK(cubic_local_degree(f, Place::at(3), 40) == std::vector<int>{3});

  CHECK_THROWS_AS(zw_partial_count(QuaternionOrder::Lipschitz, 1'000'000, 1000), budget_error);
}
