#include <doctest.h>

#include "frob/betti.hpp"

using namespace frob;

TEST_CASE("construction and access") {
  BettiVector b;
  CHECK(b.is_zero());
  CHECK(b[0] == 0);
  CHECK(b.to_string() == "0");

  b.add_at(3, 2);
  CHECK(b[3] == 2);
  CHECK_FALSE(b.is_zero());
  CHECK(b.support_end() == 4);
  CHECK(b.to_string() == "b3=2");

  CHECK(BettiVector::delta(0)[0] == 1);
  CHECK(BettiVector::delta(4) != BettiVector::delta(3));
}

TEST_CASE("addition accumulates entrywise") {
  BettiVector a = BettiVector::delta(1);
  a += BettiVector::delta(1);
  a += BettiVector::delta(4);
  CHECK(a[1] == 2);
  CHECK(a[4] == 1);
}

TEST_CASE("convolution is commutative and associative with unit delta(0)") {
  BettiVector a, b, c;
  a.add_at(1, 2);
  a.add_at(3, 1);
  b.add_at(0, 1);
  b.add_at(2, 5);
  c.add_at(4, 3);
  CHECK(convolve(a, b) == convolve(b, a));
  CHECK(convolve(convolve(a, b), c) == convolve(a, convolve(b, c)));
  CHECK(convolve(BettiVector::delta(0), a) == a);
  CHECK(convolve(a, BettiVector()).is_zero());
}

TEST_CASE("join product has the empty complex as unit") {
  const auto empty = BettiVector::delta(1);  // S^{-1}
  BettiVector a;
  a.add_at(2, 1);
  a.add_at(5, 4);
  CHECK(join_product(empty, a) == a);
  CHECK(join_product(a, empty) == a);
  CHECK(join_product(empty, empty) == empty);
  // joining with S^0 is suspension: an index shift by one
  const auto s0 = BettiVector::delta(2);
  CHECK(join_product(s0, a) == a.shifted(1));
}

TEST_CASE("nonzero entry maps") {
  BettiVector b;
  b.add_at(2, 1);
  b.add_at(7, 3);
  const auto entries = b.nonzero_entries();
  REQUIRE(entries.size() == 2);
  CHECK(entries.at(2) == 1);
  CHECK(entries.at(7) == 3);
}
