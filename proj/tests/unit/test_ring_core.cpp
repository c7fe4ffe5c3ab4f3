#include <catch2/catch_amalgamated.hpp>

#include "ringlab/ringlab.hpp"

using namespace ringlab;

TEST_CASE("modular integers behave like Z/4") {
  RingPtr R = integers_mod(4);
  REQUIRE(R->size() == 4);
  REQUIRE(R->rank() == 1);
  REQUIRE(R->is_commutative());
  REQUIRE(R->unity().has_value());

  RingElement two = R->element({2});
  RingElement three = R->element({3});
  REQUIRE((two * two).is_zero());
  REQUIRE(three * three == R->unity_element());
  REQUIRE(pow(three, 2) == R->unity_element());
  REQUIRE(two + three == R->element({1}));
  REQUIRE(-R->element({1}) == three);
  REQUIRE(int_scale(-1, R->element({1})) == three);
  REQUIRE(int_scale(7, two) == two);
}

TEST_CASE("element/index round trip covers the whole ring") {
  RingPtr R = make_ring({2, 3, 4}, std::vector<std::vector<std::uint32_t>>(
                                       9, std::vector<std::uint32_t>{0, 0, 0}));
  REQUIRE(R->size() == 24);
  for (std::uint64_t i = 0; i < R->size(); ++i)
    REQUIRE(R->element_at(i).index() == i);
  // index order: first coordinate most significant
  REQUIRE(R->element({1, 0, 0}).index() == 12);
  REQUIRE(R->element({0, 1, 0}).index() == 4);
  REQUIRE(R->element({0, 0, 1}).index() == 1);
}

TEST_CASE("order-9 ring with a^2 = 3a squares as expected") {
  RingPtr R = make_ring({9}, {{3}}, std::nullopt, {"a"});
  RingElement a2 = R->element({2});
  // (2a)(2a) = 4 a^2 = 12a = 3a mod 9
  REQUIRE(a2 * a2 == R->element({3}));
  REQUIRE(pow(R->element({1}), 3).is_zero());  // a^3 = 3 a^2 = 9a = 0
  REQUIRE_FALSE(R->unity().has_value());
  REQUIRE(find_unity(*R) == std::nullopt);
}

TEST_CASE("tables violating additive orders are rejected") {
  // e0 has order 2 but e0*e0 = e1 of order 4: 2(e0*e0) != 0.
  std::vector<std::vector<std::uint32_t>> mul{
      {0, 1}, {0, 0}, {0, 0}, {0, 0}};
  REQUIRE_THROWS_AS(make_ring({2, 4}, mul), IllDefinedError);
}

TEST_CASE("non-associative tables are rejected with a witness triple") {
  // e0e0 = e1, e0e1 = e2: (e0e0)e0 = 0 but e0(e0e0) = e2.
  std::vector<std::vector<std::uint32_t>> mul(
      9, std::vector<std::uint32_t>{0, 0, 0});
  mul[0] = {0, 1, 0};  // e0*e0
  mul[1] = {0, 0, 1};  // e0*e1
  try {
    make_ring({2, 2, 2}, mul);
    FAIL("expected NonAssociativeError");
  } catch (const NonAssociativeError& e) {
    REQUIRE(e.i == 0);
    REQUIRE(e.j == 0);
    REQUIRE(e.l == 0);
  }
}

TEST_CASE("false unity claims are rejected") {
  REQUIRE_THROWS_AS(make_ring({4}, {{0}}, std::vector<std::uint32_t>{1}),
                    BadUnityError);
}

TEST_CASE("label validation") {
  REQUIRE_THROWS_AS(
      make_ring({2, 2},
                std::vector<std::vector<std::uint32_t>>(
                    4, std::vector<std::uint32_t>{0, 0}),
                std::nullopt, std::vector<std::string>{"x", "x"}),
      RingError);
  REQUIRE_THROWS_AS(
      make_ring({2}, {{0}}, std::nullopt, std::vector<std::string>{"x", "y"}),
      RingError);
}

TEST_CASE("unity discovery by scan") {
  RingPtr z6 = make_ring({6}, {{1}});  // no declared unity
  auto u = find_unity(*z6);
  REQUIRE(u.has_value());
  REQUIRE(u->c[0] == 1);
  REQUIRE(is_unital(*z6));
  REQUIRE_FALSE(is_unital(*fine_ring(FineKind::B, 3)));
}

TEST_CASE("memoized product table agrees with direct multiplication") {
  RingPtr R = integers_mod(12);
  REQUIRE(R->build_product_table(2));
  REQUIRE(R->has_product_table());
  for (std::uint64_t i = 0; i < 12; ++i)
    for (std::uint64_t j = 0; j < 12; ++j) {
      RingElement p = R->element_at(i) * R->element_at(j);
      REQUIRE(R->mul_index(i, j) == p.index());
    }
}

TEST_CASE("elements of different rings do not mix") {
  RingPtr a = integers_mod(4);
  RingPtr b = integers_mod(6);
  REQUIRE_THROWS_AS(a->element({1}) + b->element({1}), RingMismatchError);
  REQUIRE_THROWS_AS(a->element({1}) * b->element({1}), RingMismatchError);
}

TEST_CASE("powers require positive exponents") {
  RingPtr R = integers_mod(4);
  REQUIRE_THROWS_AS(pow(R->element({2}), 0), NonPositiveExponentError);
}

TEST_CASE("coordinate validation and cap guards") {
  RingPtr R = integers_mod(4);
  REQUIRE_THROWS_AS(R->element({4}), RingError);
  REQUIRE_THROWS_AS(R->element({0, 0}), RingError);
  REQUIRE_THROWS_AS(
      make_ring({0xFFFFFFFFu, 0xFFFFFFFFu},
                std::vector<std::vector<std::uint32_t>>(
                    4, std::vector<std::uint32_t>{0, 0})),
      RingError);  // additive size would overflow
}

TEST_CASE("trivial ring has one element and a (zero) unity") {
  RingPtr R = integers_mod(1);
  REQUIRE(R->size() == 1);
  REQUIRE(R->rank() == 0);
  REQUIRE(R->unity().has_value());
  RingElement z = R->zero_element();
  REQUIRE(z * z == z);
}

TEST_CASE("distributivity holds on random triples") {
  RingPtr R = group_ring(fine_ring(FineKind::A, 3), cyclic_group(2));
  SplitMix64 rng(42);
  for (int t = 0; t < 50; ++t) {
    RingElement x = R->element_at(rng.below(R->size()));
    RingElement y = R->element_at(rng.below(R->size()));
    RingElement z = R->element_at(rng.below(R->size()));
    REQUIRE(x * (y + z) == x * y + x * z);
    REQUIRE((x + y) * z == x * z + y * z);
    REQUIRE((x * y) * z == x * (y * z));
  }
}
